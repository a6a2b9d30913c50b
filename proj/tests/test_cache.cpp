#include "doctest.h"

#include "freeset/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

using freeset::cache::append_file;
using freeset::cache::CacheRecord;
using freeset::cache::load;
using freeset::cache::load_file;
using freeset::cache::parse_json_line;
using freeset::cache::to_json_line;
using freeset::cache::verify_record;

namespace {

CacheRecord sample() {
    CacheRecord r;
    r.n = 10;
    r.t = 3;
    r.s_lower = 2;
    r.s_upper = 2;
    r.exact = true;
    r.witness = {1, 3};
    r.method = "exhaustive";
    r.elapsed_ms = 5;
    return r;
}

}  // namespace

TEST_CASE("records survive a serialization round trip") {
    auto r = sample();
    auto line = to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    auto back = parse_json_line(line);
    REQUIRE(back.has_value());
    CHECK(back->n == r.n);
    CHECK(back->t == r.t);
    CHECK(back->s_lower == r.s_lower);
    CHECK(back->s_upper == r.s_upper);
    CHECK(back->exact == r.exact);
    CHECK(back->witness == r.witness);
    CHECK(back->method == r.method);
    CHECK(back->elapsed_ms == r.elapsed_ms);
}

TEST_CASE("malformed lines parse to nothing") {
    CHECK(!parse_json_line("").has_value());
    CHECK(!parse_json_line("not json at all").has_value());
    CHECK(!parse_json_line("[1,2,3]").has_value());
    CHECK(!parse_json_line("{\"n\": 10}").has_value());
    CHECK(!parse_json_line("{\"n\": \"ten\", \"t\": 3}").has_value());
    auto good = to_json_line(sample());
    CHECK(!parse_json_line(good.substr(0, good.size() / 2)).has_value());
}

TEST_CASE("verification re-proves the claim") {
    CHECK(verify_record(sample()));

    SUBCASE("witness that is not t-free is rejected") {
        auto r = sample();
        r.n = 7;
        r.witness = {1, 2};  // 1 + 1 = 2 mod 7
        CHECK(!verify_record(r));
    }
    SUBCASE("witness size must equal the claimed lower bound") {
        auto r = sample();
        r.s_lower = 3;
        r.s_upper = 3;
        CHECK(!verify_record(r));
    }
    SUBCASE("bounds must be ordered") {
        auto r = sample();
        r.s_upper = 1;
        CHECK(!verify_record(r));
    }
    SUBCASE("exact claims need matching bounds") {
        auto r = sample();
        r.s_upper = 3;
        CHECK(!verify_record(r));
        r.exact = false;
        CHECK(verify_record(r));
    }
    SUBCASE("witness residues must be increasing and in range") {
        auto r = sample();
        r.witness = {3, 1};
        CHECK(!verify_record(r));
        r.witness = {1, 13};
        CHECK(!verify_record(r));
        r.witness = {1, 1};
        CHECK(!verify_record(r));
    }
}

TEST_CASE("loading skips junk and keeps the last valid record per key") {
    auto r1 = sample();
    auto r2 = sample();
    r2.method = "rerun";
    r2.elapsed_ms = 9;
    auto other = sample();
    other.n = 14;
    other.witness = {1, 3};

    std::ostringstream text;
    text << to_json_line(r1) << "\n";
    text << "garbage line\n";
    text << "\n";  // blank lines are fine, not counted as skips
    auto bad = sample();
    bad.witness = {1, 2, 4};  // wrong size for s_lower=2
    text << to_json_line(bad) << "\n";
    text << to_json_line(other) << "\n";
    text << to_json_line(r2) << "\n";

    std::istringstream in(text.str());
    auto res = load(in);
    CHECK(res.skipped == 2);
    REQUIRE(res.records.size() == 2);
    const auto& kept = res.records.at({10, 3});
    CHECK(kept.method == "rerun");
    CHECK(kept.elapsed_ms == 9);
    CHECK(res.records.count({14, 3}) == 1);
}

TEST_CASE("file append and reload") {
    std::string path = "cache_test_tmp.jsonl";
    std::remove(path.c_str());

    auto missing = load_file(path);
    CHECK(missing.records.empty());
    CHECK(missing.skipped == 0);

    append_file(path, sample());
    auto r2 = sample();
    r2.n = 14;
    append_file(path, r2);

    auto res = load_file(path);
    CHECK(res.skipped == 0);
    CHECK(res.records.size() == 2);
    CHECK(res.records.count({10, 3}) == 1);
    CHECK(res.records.count({14, 3}) == 1);
    std::remove(path.c_str());
}
