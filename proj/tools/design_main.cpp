// Command line for spherical designs built from residue generators:
// point-set construction, strength and index verification, and the
// Delsarte-Goethals-Seidel minimum point count.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 usage error.

#include "CLI11.hpp"

#include "freeset/designs.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

std::vector<std::uint64_t> parse_gens(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string cell = text.substr(pos, comma - pos);
        if (cell.empty()) throw std::invalid_argument("empty entry in generator list");
        std::size_t used = 0;
        unsigned long long v = std::stoull(cell, &used);
        if (used != cell.size())
            throw std::invalid_argument("bad integer in generator list: " + cell);
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("generator list is empty");
    return out;
}

freeset::designs::DesignPointSet read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return freeset::designs::read_csv(in);
}

void print_report(const freeset::designs::VerificationReport& r, bool verbose) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  max residual " << r.max_residual
              << "  tolerance " << r.tolerance << "\n";
    if (!r.worst.empty()) std::cout << "worst: " << r.worst << "\n";
    if (!r.second_moments.empty()) {
        std::cout << "second moments:";
        for (double sm : r.second_moments) std::cout << " " << sm;
        std::cout << "  (spread " << r.second_moment_spread << ")\n";
    }
    if (verbose)
        for (const auto& e : r.residuals)
            std::cout << "  " << e.label << ": value " << e.value << "  expected " << e.expected
                      << "  residual " << e.residual << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spherical designs from residue generators"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::uint32_t t = 0, k = 0, d = 0;
    std::string gens_text, out_path, file_path;
    double tol = 0;
    bool verbose = false;

    auto* build = app.add_subcommand("build", "place n points on S^(2m-1) from m generators");
    build->add_option("--n", n, "number of points / modulus")->required();
    build->add_option("--gens", gens_text, "comma-separated generators")->required();
    build->add_option("--d", d, "expected sphere dimension (must be 2m-1)");
    build->add_option("--out", out_path, "CSV output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "strength check: harmonic sums up to degree t");
    verify->add_option("--file", file_path, "point CSV")->required();
    verify->add_option("--t", t, "strength to test (1..3)")->required();
    verify->add_option("--tol", tol, "absolute residual tolerance (default 1e-9*n)");
    verify->add_flag("--verbose", verbose, "print every residual");

    auto* index = app.add_subcommand("index", "index check: monomial means vs sphere averages");
    index->add_option("--file", file_path, "point CSV")->required();
    index->add_option("--k", k, "monomial degree")->required();
    index->add_option("--tol", tol, "absolute residual tolerance (default 1e-9*n)");
    index->add_flag("--verbose", verbose, "print every residual");

    auto* dgs = app.add_subcommand("dgs", "minimum points any t-design on S^d needs");
    dgs->add_option("--t", t, "design strength")->required();
    dgs->add_option("--d", d, "sphere dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*build) {
            auto gens = parse_gens(gens_text);
            if (build->count("--d")) {
                if (d % 2 == 0) {
                    std::cerr << "error: this construction only reaches odd sphere dimensions "
                                 "(2m-1 from m generators); even dimensions need an external "
                                 "reduction step\n";
                    return 2;
                }
                if (d != 2 * gens.size() - 1) {
                    std::cerr << "error: " << gens.size() << " generators give dimension "
                              << 2 * gens.size() - 1 << ", not " << d << "\n";
                    return 2;
                }
            }
            auto x = freeset::designs::build_design({n, gens});
            for (const auto& w : x.warnings) std::cerr << "warning: " << w << "\n";
            if (out_path.empty()) {
                freeset::designs::write_csv(x, std::cout);
            } else {
                std::ofstream out(out_path);
                if (!out) {
                    std::cerr << "error: cannot open " << out_path << "\n";
                    return 2;
                }
                freeset::designs::write_csv(x, out);
            }
            return 0;
        }

        if (*verify) {
            auto x = read_points(file_path);
            double use_tol = tol > 0 ? tol : freeset::designs::default_tolerance(x.n);
            auto r = freeset::designs::verify_strength(x, t, use_tol);
            print_report(r, verbose);
            return r.pass ? 0 : 1;
        }

        if (*index) {
            auto x = read_points(file_path);
            double use_tol = tol > 0 ? tol : freeset::designs::default_tolerance(x.n);
            auto r = freeset::designs::verify_index(x, k, use_tol);
            print_report(r, verbose);
            return r.pass ? 0 : 1;
        }

        if (*dgs) {
            std::cout << freeset::designs::dgs_bound(t, d) << "\n";
            return 0;
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
