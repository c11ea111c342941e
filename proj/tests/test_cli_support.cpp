#include <doctest.h>

#include "numwb/arith.hpp"
#include "numwb/cache.hpp"
#include "numwb/cli_support.hpp"
#include "numwb/verify.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace numwb;
using u64 = std::uint64_t;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("numwb-test-" + std::to_string(std::rand()) + "-" +
                                            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

std::vector<IndexedValue> sample() { return {{1, "1"}, {2, std::nullopt}, {3, "123456789012345678901234567890"}}; }

}  // namespace

TEST_CASE("format names") {
    CHECK(parse_format("bfile") == OutputFormat::bfile);
    CHECK(parse_format("json") == OutputFormat::jsonl);
    CHECK(parse_format("jsonl") == OutputFormat::jsonl);
    CHECK(format_name(OutputFormat::csv) == "csv");
    CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("ranges and lists") {
    auto r = parse_range("3..17");
    CHECK(r.lo == 3);
    CHECK(r.hi == 17);
    auto one = parse_range("9");
    CHECK(one.lo == 9);
    CHECK(one.hi == 9);
    CHECK_THROWS_AS(parse_range("5..2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("a..b"), std::invalid_argument);
    CHECK_THROWS_AS(parse_range("1..."), std::invalid_argument);
    CHECK(parse_u64_list("6,19,35") == std::vector<u64>{6, 19, 35});
    CHECK_THROWS_AS(parse_u64_list("6,,35"), std::invalid_argument);
}

TEST_CASE("bfile output round trips, gaps included") {
    auto text = render_sequence(sample(), OutputFormat::bfile, "x");
    CHECK(text == "1 1\n2 -\n3 123456789012345678901234567890\n");
    CHECK(parse_bfile(text) == sample());
    CHECK(parse_bfile("# comment\n\n5 7\n") == std::vector<IndexedValue>{{5, "7"}});
    CHECK_THROWS(parse_bfile("5\n"));
    CHECK_THROWS(parse_bfile("x 5\n"));
}

TEST_CASE("table, csv and jsonl output") {
    CHECK(render_sequence(sample(), OutputFormat::table, "x") == "1 - 123456789012345678901234567890\n");
    CHECK(render_sequence({}, OutputFormat::table, "x").empty());
    CHECK(render_sequence(sample(), OutputFormat::csv, "x") == "n,x\n1,1\n2,\n3,123456789012345678901234567890\n");
    std::istringstream lines(render_sequence(sample(), OutputFormat::jsonl, "x"));
    std::string line;
    std::vector<nlohmann::json> rows;
    while (std::getline(lines, line)) rows.push_back(nlohmann::json::parse(line));
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["n"] == 1);
    CHECK(rows[0]["value"] == "1");
    CHECK(rows[1]["value"].is_null());
}

TEST_CASE("deadline") {
    CHECK_FALSE(Deadline(std::nullopt).expired());
    CHECK(Deadline(0.0).expired());
    CHECK_FALSE(Deadline(3600.0).expired());
}

TEST_CASE("cache files round trip and report their header") {
    TempDir tmp;
    auto h = build_cache(tmp.path, "S", 1, 2000, 3);
    CHECK(h.records == 2000);
    auto file = cache_file(tmp.path, "S");
    auto header = read_cache_header(file);
    REQUIRE(header.has_value());
    CHECK(header->lo == 1);
    CHECK(header->hi == 2000);
    CHECK(header->function == "S");
    auto c = load_cache(file);
    REQUIRE(c.has_value());
    for (auto [n, v] : c->records) CHECK(v == S_uncached(n));

    build_cache(tmp.path, "S_p:3", 1, 50);
    CHECK(fs::exists(cache_file(tmp.path, "S_p:3")));
    CHECK(cache_file(tmp.path, "S_p:3").filename().string().find(':') == std::string::npos);
    CHECK(load_cache(cache_file(tmp.path, "S_p:3"))->records[3].second == 9);  // S_3(4) = 9

    CHECK(clear_cache(tmp.path, "S"));
    CHECK_FALSE(clear_cache(tmp.path, "S"));
    CHECK_FALSE(is_cacheable("SK"));
    CHECK_THROWS_AS(cacheable_value("SK", 5), std::invalid_argument);
}

TEST_CASE("corrupt cache files are refused and recomputed") {
    TempDir tmp;
    build_cache(tmp.path, "Z", 1, 300);
    auto file = cache_file(tmp.path, "Z");
    std::string bytes;
    {
        std::ifstream in(file, std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(in), {});
    }
    auto rewrite = [&](const std::string& b) {
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        out << b;
    };
    auto expected = cached_values(tmp.path, "Z", 1, 300);
    CHECK(expected.from_cache);

    std::string bad_magic = bytes;
    bad_magic[0] = 'X';
    rewrite(bad_magic);
    CHECK_FALSE(load_cache(file).has_value());
    auto again = cached_values(tmp.path, "Z", 1, 300);
    CHECK_FALSE(again.from_cache);
    CHECK(again.values == expected.values);

    std::string bad_version = bytes;
    bad_version.replace(bad_version.find("version 1"), 9, "version 7");
    rewrite(bad_version);
    CHECK_FALSE(load_cache(file).has_value());

    rewrite(bytes.substr(0, bytes.size() - 8));  // truncated record
    CHECK_FALSE(load_cache(file).has_value());
    rewrite(bytes + "extra");
    CHECK_FALSE(load_cache(file).has_value());

    rewrite(bytes);
    CHECK(load_cache(file).has_value());
    // a range the file does not cover is recomputed
    auto wider = cached_values(tmp.path, "Z", 1, 400);
    CHECK_FALSE(wider.from_cache);
    CHECK(wider.values.size() == 400);
}

TEST_CASE("cached and uncached verification reports are identical") {
    TempDir tmp;
    clear_S_memo();
    auto cold = render_report(run_verification("arith-functions", 2), OutputFormat::jsonl);
    build_cache(tmp.path, "S", 1, 5000);
    clear_S_memo();
    CHECK(warm_S_from_cache(tmp.path) == 5000);
    auto warm = render_report(run_verification("arith-functions", 2), OutputFormat::jsonl);
    CHECK(cold == warm);
    clear_S_memo();
}

TEST_CASE("verification is deterministic across worker counts") {
    auto one = render_report(run_verification("all", 1), OutputFormat::jsonl);
    auto many = render_report(run_verification("all", 6), OutputFormat::jsonl);
    CHECK(one == many);
    auto rep = run_verification("all");
    CHECK(rep.count(CheckStatus::mismatch_new) == 0);
    CHECK(rep.count(CheckStatus::match) + rep.count(CheckStatus::known_misprint) == rep.records.size());
    CHECK_THROWS_AS(run_verification("nope"), std::invalid_argument);
    CHECK_THROWS(render_report(rep, OutputFormat::bfile));
}

TEST_CASE("report formats carry every record") {
    auto rep = run_verification("radix-systems", 1);
    auto csv = render_report(rep, OutputFormat::csv);
    CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == rep.records.size() + 1);
    std::istringstream lines(render_report(rep, OutputFormat::jsonl));
    std::string line;
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("status"));
        ++n;
    }
    CHECK(n == rep.records.size());
}
