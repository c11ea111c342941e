#include "numwb/cli_support.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace numwb {

namespace {

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("not a non-negative integer: '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("integer out of range: " + s);
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "bfile") return OutputFormat::bfile;
    if (name == "csv") return OutputFormat::csv;
    if (name == "jsonl" || name == "json") return OutputFormat::jsonl;
    if (name == "table") return OutputFormat::table;
    throw std::invalid_argument("unknown format: " + name);
}

std::string format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::bfile: return "bfile";
        case OutputFormat::csv: return "csv";
        case OutputFormat::jsonl: return "jsonl";
        case OutputFormat::table: return "table";
    }
    return "?";
}

IndexRange parse_range(const std::string& text) {
    auto dots = text.find("..");
    IndexRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_u64(text);
    } else {
        r.lo = parse_u64(text.substr(0, dots));
        r.hi = parse_u64(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty range: " + text);
    return r;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_u64(item));
    return out;
}

std::string render_sequence(const std::vector<IndexedValue>& terms, OutputFormat f, const std::string& name) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::bfile:
            for (auto& t : terms) os << t.index << ' ' << t.value.value_or("-") << '\n';
            break;
        case OutputFormat::csv:
            os << "n," << csv_field(name) << '\n';
            for (auto& t : terms) os << t.index << ',' << csv_field(t.value.value_or("")) << '\n';
            break;
        case OutputFormat::jsonl:
            for (auto& t : terms) {
                nlohmann::ordered_json j;
                j["n"] = t.index;
                j["value"] = t.value ? nlohmann::ordered_json(*t.value) : nlohmann::ordered_json(nullptr);
                os << j.dump() << '\n';
            }
            break;
        case OutputFormat::table:
            for (std::size_t i = 0; i < terms.size(); ++i) os << (i ? " " : "") << terms[i].value.value_or("-");
            if (!terms.empty()) os << '\n';
            break;
    }
    return os.str();
}

std::vector<IndexedValue> parse_bfile(const std::string& text) {
    std::vector<IndexedValue> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos || line.find(' ', sp + 1) != std::string::npos)
            throw std::invalid_argument("malformed b-file line: " + line);
        IndexedValue v{parse_u64(line.substr(0, sp)), line.substr(sp + 1)};
        if (*v.value == "-") v.value.reset();
        out.push_back(std::move(v));
    }
    return out;
}

std::string render_report(const VerificationReport& r, OutputFormat f) {
    std::ostringstream os;
    if (f == OutputFormat::jsonl) {
        for (auto& c : r.records) {
            nlohmann::ordered_json j;
            j["id"] = c.id;
            j["module"] = c.module;
            j["locus"] = c.locus;
            j["expected"] = c.expected;
            j["computed"] = c.computed;
            j["status"] = status_name(c.status);
            if (c.status != CheckStatus::match) {
                j["printed_diff"] = c.printed_diff;
                j["derived_diff"] = c.derived_diff;
            }
            os << j.dump() << '\n';
        }
        return os.str();
    }
    if (f == OutputFormat::csv) {
        os << "id,module,locus,status,expected,computed\n";
        for (auto& c : r.records)
            os << csv_field(c.id) << ',' << csv_field(c.module) << ',' << csv_field(c.locus) << ','
               << status_name(c.status) << ',' << csv_field(c.expected) << ',' << csv_field(c.computed) << '\n';
        return os.str();
    }
    if (f == OutputFormat::bfile) throw std::invalid_argument("verify reports have no bfile form");
    for (auto& c : r.records) {
        os << status_name(c.status) << "  " << c.id << "  (" << c.locus << ")\n";
        if (c.status != CheckStatus::match)
            os << "    printed  " << c.printed_diff << "\n    computed " << c.derived_diff << '\n';
    }
    os << r.records.size() << " checks: " << r.count(CheckStatus::match) << " match, "
       << r.count(CheckStatus::known_misprint) << " known misprint, " << r.count(CheckStatus::mismatch_new)
       << " new mismatch\n";
    return os.str();
}

Deadline::Deadline(std::optional<double> seconds) {
    if (seconds)
        end_ = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(*seconds));
}

bool Deadline::expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }

}  // namespace numwb
