#include "freeset/cache.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

#include "json.hpp"

#include "freeset/zn.hpp"

namespace freeset::cache {

using nlohmann::json;

std::string to_json_line(const CacheRecord& r) {
    json j;
    j["n"] = r.n;
    j["t"] = r.t;
    j["s_lower"] = r.s_lower;
    j["s_upper"] = r.s_upper;
    j["exact"] = r.exact;
    j["witness"] = r.witness;
    j["method"] = r.method;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

std::optional<CacheRecord> parse_json_line(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    CacheRecord r;
    try {
        r.n = j.at("n").get<std::uint64_t>();
        r.t = j.at("t").get<std::uint32_t>();
        r.s_lower = j.at("s_lower").get<std::uint64_t>();
        r.s_upper = j.at("s_upper").get<std::uint64_t>();
        r.exact = j.at("exact").get<bool>();
        r.witness = j.at("witness").get<std::vector<std::uint64_t>>();
        r.method = j.at("method").get<std::string>();
        r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    } catch (const json::exception&) {
        return std::nullopt;
    }
    return r;
}

bool verify_record(const CacheRecord& r) {
    if (r.s_lower > r.s_upper) return false;
    if (r.exact && r.s_lower != r.s_upper) return false;
    if (r.witness.size() != r.s_lower) return false;
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
        if (r.witness[i] >= r.n) return false;
        if (i > 0 && r.witness[i] <= r.witness[i - 1]) return false;
    }
    try {
        zn::CyclicContext ctx(r.n, r.t);
        zn::ResidueSet set(r.n, std::vector<std::uint64_t>(r.witness));
        return zn::is_t_free(ctx, set).t_free();
    } catch (const std::exception&) {
        return false;
    }
}

LoadResult load(std::istream& in) {
    LoadResult out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto rec = parse_json_line(line);
        if (!rec || !verify_record(*rec)) {
            ++out.skipped;
            continue;
        }
        out.records[{rec->n, rec->t}] = *rec;
    }
    return out;
}

LoadResult load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return {};
    return load(in);
}

void append_file(const std::string& path, const CacheRecord& r) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
    out << to_json_line(r) << "\n";
}

}  // namespace freeset::cache
