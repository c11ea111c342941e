#include "numwb/cache.hpp"

#include "numwb/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace numwb {

namespace {

using u64 = std::uint64_t;

std::optional<u64> sp_prime(const std::string& id) {
    if (id.rfind("S_p:", 0) != 0) return std::nullopt;
    try {
        std::size_t used = 0;
        u64 p = std::stoull(id.substr(4), &used);
        if (used != id.size() - 4 || !is_prime_u64(p)) return std::nullopt;
        return p;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void put_u64(std::ostream& out, u64 v) {
    std::array<char, 8> b;
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b.data(), 8);
}

bool get_u64(std::istream& in, u64& v) {
    std::array<unsigned char, 8> b;
    if (!in.read(reinterpret_cast<char*>(b.data()), 8)) return false;
    v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
    return true;
}

// Reads the header and leaves `in` at the first record.
std::optional<CacheHeader> parse_header(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCacheMagic) return std::nullopt;
    CacheHeader h;
    bool have_version = false, have_function = false, have_range = false, have_records = false;
    while (std::getline(in, line)) {
        if (line == "end") {
            if (!(have_version && have_function && have_range && have_records)) return std::nullopt;
            if (h.version != kCacheVersion || h.lo > h.hi || h.records != h.hi - h.lo + 1) return std::nullopt;
            if (!is_cacheable(h.function)) return std::nullopt;
            return h;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "version") {
            have_version = static_cast<bool>(ls >> h.version);
        } else if (key == "function") {
            have_function = static_cast<bool>(ls >> h.function);
        } else if (key == "range") {
            have_range = static_cast<bool>(ls >> h.lo >> h.hi);
        } else if (key == "records") {
            have_records = static_cast<bool>(ls >> h.records);
        } else {
            return std::nullopt;
        }
        std::string rest;
        if (ls >> rest) return std::nullopt;
    }
    return std::nullopt;
}

std::vector<u64> compute_range(const std::string& id, u64 lo, u64 hi, unsigned workers) {
    std::size_t total = hi - lo + 1;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    std::size_t chunk = std::max<std::size_t>(1024, (total + workers - 1) / workers);
    std::vector<std::future<std::vector<u64>>> parts;
    for (std::size_t start = 0; start < total; start += chunk) {
        std::size_t len = std::min(chunk, total - start);
        parts.push_back(std::async(std::launch::async, [&id, lo, start, len] {
            std::vector<u64> out(len);
            for (std::size_t i = 0; i < len; ++i) out[i] = cacheable_value(id, lo + start + i);
            return out;
        }));
    }
    std::vector<u64> values;
    values.reserve(total);
    for (auto& f : parts) {
        auto v = f.get();
        values.insert(values.end(), v.begin(), v.end());
    }
    return values;
}

}  // namespace

bool is_cacheable(const std::string& id) { return id == "S" || id == "Z" || sp_prime(id).has_value(); }

u64 cacheable_value(const std::string& id, u64 n) {
    if (id == "S") return S_uncached(n);
    if (id == "Z") return Z(n);
    if (auto p = sp_prime(id)) return static_cast<u64>(S_p(*p, n));
    throw std::invalid_argument("not a cacheable function: " + id);
}

std::filesystem::path cache_directory() {
    if (const char* d = std::getenv(kCacheDirEnv); d && *d) return d;
    return ".numwb-cache";
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& id) {
    std::string name = id;
    std::replace(name.begin(), name.end(), ':', '-');
    return dir / (name + ".cache");
}

CacheHeader build_cache(const std::filesystem::path& dir, const std::string& id, u64 lo, u64 hi, unsigned workers) {
    if (!is_cacheable(id)) throw std::invalid_argument("not a cacheable function: " + id);
    if (lo < 1 || lo > hi) throw std::invalid_argument("cache range must satisfy 1 <= lo <= hi");
    auto values = compute_range(id, lo, hi, workers);

    std::filesystem::create_directories(dir);
    auto file = cache_file(dir, id);
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << kCacheMagic << "\nversion " << kCacheVersion << "\nfunction " << id << "\nrange " << lo << ' '
            << hi << "\nrecords " << values.size() << "\nend\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            put_u64(out, lo + i);
            put_u64(out, values[i]);
        }
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
    return CacheHeader{kCacheVersion, id, lo, hi, values.size()};
}

std::optional<CacheHeader> read_cache_header(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    return parse_header(in);
}

std::optional<CacheContents> load_cache(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    auto h = parse_header(in);
    if (!h) return std::nullopt;
    CacheContents c{*h, {}};
    c.records.reserve(h->records);
    for (u64 i = 0; i < h->records; ++i) {
        u64 idx, val;
        if (!get_u64(in, idx) || !get_u64(in, val) || idx != h->lo + i) return std::nullopt;
        c.records.emplace_back(idx, val);
    }
    if (in.peek() != std::char_traits<char>::eof()) return std::nullopt;  // trailing bytes
    return c;
}

bool clear_cache(const std::filesystem::path& dir, const std::string& id) {
    std::error_code ec;
    return std::filesystem::remove(cache_file(dir, id), ec);
}

CachedValues cached_values(const std::filesystem::path& dir, const std::string& id, u64 lo, u64 hi) {
    if (!is_cacheable(id)) throw std::invalid_argument("not a cacheable function: " + id);
    if (lo < 1 || lo > hi) throw std::invalid_argument("range must satisfy 1 <= lo <= hi");
    auto h = read_cache_header(cache_file(dir, id));
    if (h && h->function == id && h->lo <= lo && hi <= h->hi) {
        if (auto c = load_cache(cache_file(dir, id))) {
            CachedValues out{{}, true};
            for (u64 n = lo; n <= hi; ++n) out.values.push_back(c->records[n - c->header.lo].second);
            return out;
        }
    }
    return CachedValues{compute_range(id, lo, hi, 0), false};
}

std::size_t warm_S_from_cache(const std::filesystem::path& dir) {
    auto c = load_cache(cache_file(dir, "S"));
    if (!c || c->header.function != "S") return 0;
    preload_S_memo(c->records);
    return c->records.size();
}

}  // namespace numwb
