// Command line for t-free sets in Z_n: membership checks, exact maximum
// search, constructions, greedy growth, bounds, and batch tables.
//
// Exit codes: 0 property holds / success, 1 property fails, 2 usage error,
// 3 search budget exhausted (result printed is a lower bound only).

#include "CLI11.hpp"

#include "freeset/cache.hpp"
#include "freeset/constructions.hpp"
#include "freeset/search.hpp"
#include "freeset/zn.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

std::vector<long long> parse_set(const std::string& text) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string cell = text.substr(pos, comma - pos);
        if (cell.empty()) throw std::invalid_argument("empty entry in set list");
        std::size_t used = 0;
        long long v = std::stoll(cell, &used);
        if (used != cell.size()) throw std::invalid_argument("bad integer in set list: " + cell);
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("set list is empty");
    return out;
}

unsigned resolve_threads(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("FREESET_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void print_elements(std::ostream& os, const std::vector<std::uint64_t>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) os << (i ? "," : "") << vals[i];
}

std::string join_elements(const std::vector<std::uint64_t>& vals) {
    std::string s;
    for (std::size_t i = 0; i < vals.size(); ++i)
        s += (i ? "," : "") + std::to_string(vals[i]);
    return s;
}

// Serve a cached exact answer when one exists and its witness re-proves.
std::optional<freeset::cache::CacheRecord> cached_exact(const std::string& path,
                                                        std::uint64_t n, std::uint32_t t) {
    if (path.empty()) return std::nullopt;
    auto loaded = freeset::cache::load_file(path);
    auto it = loaded.records.find({n, t});
    if (it == loaded.records.end() || !it->second.exact) return std::nullopt;
    return it->second;
}

freeset::cache::CacheRecord record_of(const freeset::search::MaxResult& r) {
    freeset::cache::CacheRecord rec;
    rec.n = r.n;
    rec.t = r.t;
    rec.s_lower = r.size;
    rec.exact = r.status == freeset::search::SearchStatus::exact;
    rec.s_upper = rec.exact ? r.size : freeset::search::bounds(r.n, r.t).upper;
    rec.witness = r.witness.elements();
    rec.method = rec.exact ? "exhaustive" : "budget-exhausted";
    rec.elapsed_ms = static_cast<std::uint64_t>(r.elapsed_ms);
    return rec;
}

int run_smax(std::uint64_t n, std::uint32_t t, const freeset::search::SearchBudget& budget,
             const std::string& cache_path, std::ostream& os) {
    if (auto hit = cached_exact(cache_path, n, t)) {
        os << "s(Z_" << n << ", " << t << ") = " << hit->s_lower << " (exact, cached)\n";
        os << "witness: ";
        print_elements(os, hit->witness);
        os << "\n";
        return 0;
    }
    auto r = freeset::search::exact_max(n, t, budget);
    bool exact = r.status == freeset::search::SearchStatus::exact;
    os << "s(Z_" << n << ", " << t << ") " << (exact ? "= " : ">= ") << r.size
       << (exact ? " (exact)" : " (lower bound, budget exhausted)") << "\n";
    os << "witness: ";
    print_elements(os, r.witness.elements());
    os << "\n";
    os << "nodes: " << r.nodes << "  elapsed_ms: " << static_cast<std::uint64_t>(r.elapsed_ms)
       << "\n";
    if (!cache_path.empty()) freeset::cache::append_file(cache_path, record_of(r));
    return exact ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"t-free sets in the cyclic group Z_n"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::uint32_t t = 0;
    std::uint64_t m = 0;
    std::string set_text, cache_path, out_path;
    unsigned threads = 0;
    double time_limit = 0;
    std::uint64_t node_limit = 0;
    bool canonical = false;
    std::uint64_t n_from = 0, n_to = 0, n_step = 1;

    auto* check = app.add_subcommand("check", "decide whether a set is t-free");
    check->add_option("--n", n, "modulus")->required();
    check->add_option("--t", t, "freeness degree")->required();
    check->add_option("--set", set_text, "comma-separated residues")->required();

    auto* smax = app.add_subcommand("smax", "maximum t-free set size by exhaustive search");
    smax->add_option("--n", n, "modulus")->required();
    smax->add_option("--t", t, "freeness degree")->required();
    smax->add_option("--threads", threads, "worker threads");
    smax->add_option("--time-limit", time_limit, "seconds before downgrading to a lower bound");
    smax->add_option("--node-limit", node_limit, "search nodes before downgrading");
    smax->add_option("--cache", cache_path, "JSON-lines cache consulted and appended");
    smax->add_flag("--canonical", canonical, "restrict branch roots to unit-orbit minima");

    auto* construct = app.add_subcommand("construct", "best closed-form construction");
    construct->add_option("--n", n, "modulus")->required();
    construct->add_option("--t", t, "freeness degree")->required();

    auto* greedy = app.add_subcommand("greedy", "grow a t-free set greedily to size m");
    greedy->add_option("--n", n, "modulus")->required();
    greedy->add_option("--t", t, "freeness degree")->required();
    greedy->add_option("--m", m, "target size")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "lower and upper bounds with sources");
    bounds_cmd->add_option("--n", n, "modulus")->required();
    bounds_cmd->add_option("--t", t, "freeness degree")->required();

    auto* table = app.add_subcommand("table", "exact maxima over a range, as JSON lines");
    table->add_option("--t", t, "freeness degree")->required();
    table->add_option("--n-from", n_from, "first modulus")->required();
    table->add_option("--n-to", n_to, "last modulus")->required();
    table->add_option("--step", n_step, "modulus stride");
    table->add_option("--threads", threads, "worker threads");
    table->add_option("--time-limit", time_limit, "seconds per modulus");
    table->add_option("--node-limit", node_limit, "search nodes per modulus");
    table->add_option("--cache", cache_path, "JSON-lines cache consulted and appended");
    table->add_option("--out", out_path, "write records here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) {
            auto raw = parse_set(set_text);
            freeset::zn::CyclicContext ctx{n, t};
            freeset::zn::ResidueSet s(n, std::span<const long long>(raw));
            if (s.normalized_on_ingest())
                std::cerr << "note: input reduced mod " << n << " to {" << join_elements(s.elements())
                          << "}\n";
            auto res = freeset::zn::is_t_free(ctx, s);
            if (res.t_free()) {
                std::cout << "t-free\n";
                return 0;
            }
            std::cout << "violation: " << res.violation->to_string(n) << "\n";
            return 1;
        }

        if (*smax) {
            freeset::search::SearchBudget budget;
            budget.workers = resolve_threads(threads);
            budget.time_limit_s = time_limit;
            budget.node_limit = node_limit;
            budget.unit_canonicalization = canonical;
            return run_smax(n, t, budget, cache_path, std::cout);
        }

        if (*construct) {
            freeset::constructions::ConstructionResult c = [&] {
                if (t <= 2) return freeset::constructions::closed_form(n, t);
                if (t == 3) return freeset::constructions::three_free_construct(n);
                return freeset::constructions::powers_construction(n, t);
            }();
            freeset::zn::CyclicContext ctx{n, t};
            auto res = freeset::zn::is_t_free(ctx, c.set);
            std::cout << "method: " << freeset::constructions::method_name(c.method) << "\n";
            std::cout << "size: " << c.set.size() << "\n";
            std::cout << "set: ";
            print_elements(std::cout, c.set.elements());
            std::cout << "\n";
            if (!res.t_free()) {
                std::cout << "certification FAILED: " << res.violation->to_string(n) << "\n";
                return 1;
            }
            std::cout << "certified t-free\n";
            return 0;
        }

        if (*greedy) {
            try {
                auto s = freeset::search::greedy_t_free(n, t, m);
                std::cout << "set: ";
                print_elements(std::cout, s.elements());
                std::cout << "\n";
                return 0;
            } catch (const std::runtime_error& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        }

        if (*bounds_cmd) {
            auto b = freeset::search::bounds(n, t);
            std::cout << "lower: " << b.lower << "\n";
            for (const auto& c : b.lower_candidates)
                std::cout << "  " << c.value << "  (" << c.source << ")\n";
            std::cout << "upper: " << b.upper << "\n";
            for (const auto& c : b.upper_candidates)
                std::cout << "  " << c.value << "  (" << c.source << ")\n";
            if (!b.note.empty()) std::cout << "note: " << b.note << "\n";
            return 0;
        }

        if (*table) {
            if (n_to < n_from || n_step == 0) {
                std::cerr << "error: empty modulus range\n";
                return 2;
            }
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) {
                    std::cerr << "error: cannot open " << out_path << "\n";
                    return 2;
                }
            }
            std::ostream& os = out_path.empty() ? std::cout : file;
            freeset::search::SearchBudget budget;
            budget.workers = resolve_threads(threads);
            budget.time_limit_s = time_limit;
            budget.node_limit = node_limit;
            bool exhausted = false;
            for (std::uint64_t cur = n_from; cur <= n_to; cur += n_step) {
                freeset::cache::CacheRecord rec;
                if (auto hit = cached_exact(cache_path, cur, t)) {
                    rec = *hit;
                } else {
                    auto r = freeset::search::exact_max(cur, t, budget);
                    rec = record_of(r);
                    if (!rec.exact) exhausted = true;
                    if (!cache_path.empty()) freeset::cache::append_file(cache_path, rec);
                }
                os << freeset::cache::to_json_line(rec) << "\n";
            }
            return exhausted ? 3 : 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
