#include "freeset/designs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "freeset/numeric.hpp"
#include "freeset/zn.hpp"

namespace freeset::designs {
namespace {

constexpr double kTau = 6.283185307179586476925286766559;

std::uint64_t binom_or_throw(std::uint64_t a, std::uint64_t b) {
    auto v = numeric::binomial(a, b);
    if (!v) throw std::overflow_error("binomial overflow");
    return *v;
}

}  // namespace

std::uint64_t dgs_bound(std::uint32_t t, std::uint32_t d) {
    if (t < 1 || d < 1) throw std::invalid_argument("need t >= 1 and d >= 1");
    return binom_or_throw(d + t / 2, t / 2) + binom_or_throw(d + (t - 1) / 2, (t - 1) / 2);
}

std::uint64_t dim_harm(std::uint32_t d, std::uint32_t k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    std::uint64_t lead = binom_or_throw(d + k, k);
    std::uint64_t sub = k >= 2 ? binom_or_throw(d + k - 2, k - 2) : 0;
    return lead - sub;
}

std::vector<poly::Polynomial> harmonic_basis(std::uint32_t d, std::uint32_t k) {
    if (d < 1) throw std::invalid_argument("need d >= 1");
    if (k < 1 || k > 3)
        throw std::invalid_argument("harmonic bases are available for k = 1, 2, 3 only");
    std::uint32_t vars = d + 1;
    std::vector<poly::Polynomial> out;
    auto mono = [&](std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> powers,
                    long long coef) {
        poly::Exponents e(vars, 0);
        for (auto [idx, p] : powers) e[idx] += p;
        return poly::monomial(vars, e, poly::Rational(coef));
    };
    if (k == 1) {
        for (std::uint32_t i = 0; i < vars; ++i) out.push_back(mono({{i, 1}}, 1));
    } else if (k == 2) {
        for (std::uint32_t i = 0; i < vars; ++i)
            for (std::uint32_t j = i + 1; j < vars; ++j) out.push_back(mono({{i, 1}, {j, 1}}, 1));
        for (std::uint32_t i = 0; i + 1 < vars; ++i)
            out.push_back(mono({{i, 2}}, 1) - mono({{i + 1, 2}}, 1));
    } else {
        for (std::uint32_t i = 0; i < vars; ++i)
            for (std::uint32_t j = i + 1; j < vars; ++j)
                for (std::uint32_t l = j + 1; l < vars; ++l)
                    out.push_back(mono({{i, 1}, {j, 1}, {l, 1}}, 1));
        for (std::uint32_t i = 0; i < vars; ++i)
            for (std::uint32_t j = 0; j < vars; ++j) {
                if (j == i) continue;
                out.push_back(mono({{i, 3}}, 1) - mono({{i, 1}, {j, 2}}, 3));
            }
    }
    return out;
}

DesignPointSet build_design(const GeneratorSet& g) {
    if (g.n < 1) throw std::invalid_argument("need n >= 1");
    if (g.a.empty()) throw std::invalid_argument("need at least one generator");
    for (auto a : g.a)
        if (a < 1) throw std::invalid_argument("generators must be positive");
    std::uint32_t m = static_cast<std::uint32_t>(g.a.size());
    DesignPointSet x;
    x.d = 2 * m - 1;
    x.n = g.n;
    x.m = m;
    x.generator = g;
    double scale = 1.0 / std::sqrt(static_cast<double>(m));
    x.points.reserve(g.n);
    for (std::uint64_t i = 1; i <= g.n; ++i) {
        std::vector<double> row(2 * m);
        for (std::uint32_t v = 0; v < m; ++v) {
            // Reduce i*a mod n first so the angle stays in [0, 2*pi).
            std::uint64_t r = zn::mul_mod(i % g.n, g.a[v] % g.n, g.n);
            double angle = kTau * static_cast<double>(r) / static_cast<double>(g.n);
            row[2 * v] = std::cos(angle) * scale;
            row[2 * v + 1] = std::sin(angle) * scale;
        }
        x.points.push_back(std::move(row));
    }
    for (std::uint32_t v = 0; v < m; ++v)
        if (g.a[v] % g.n == 0)
            x.warnings.push_back("generator " + std::to_string(g.a[v]) +
                                 " is 0 mod n: coordinate pair " + std::to_string(v + 1) +
                                 " is constant (1,0)");
    for (std::uint32_t v = 0; v < m; ++v)
        for (std::uint32_t w = v + 1; w < m; ++w)
            if (g.a[v] % g.n == g.a[w] % g.n)
                x.warnings.push_back("generators " + std::to_string(g.a[v]) + " and " +
                                     std::to_string(g.a[w]) + " coincide mod n");
    std::uint64_t common = g.n;
    for (auto a : g.a) common = std::gcd(common, a % g.n);
    if (common > 1)
        x.warnings.push_back("points repeat with period n/" + std::to_string(common) +
                             " (all generators share the factor " + std::to_string(common) +
                             " with n)");
    return x;
}

namespace {

std::uint32_t point_width(const DesignPointSet& x) {
    if (x.points.empty()) throw std::invalid_argument("empty point set");
    return static_cast<std::uint32_t>(x.points.front().size());
}

void close_report(VerificationReport& rep) {
    rep.max_residual = 0;
    for (const auto& e : rep.residuals) {
        if (e.residual >= rep.max_residual) {
            if (e.residual > rep.max_residual || rep.worst.empty()) {
                rep.max_residual = e.residual;
                rep.worst = e.label;
            }
        }
    }
    rep.pass = rep.max_residual <= rep.tolerance;
}

}  // namespace

VerificationReport verify_strength(const DesignPointSet& x, std::uint32_t t, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (t < 1 || t > 3)
        throw std::invalid_argument(
            "strength verification covers t = 1, 2, 3; use index verification for higher "
            "degrees");
    std::uint32_t width = point_width(x);
    VerificationReport rep;
    rep.degree = t;
    rep.tolerance = tol;
    for (std::uint32_t k = 1; k <= t; ++k) {
        for (const auto& f : harmonic_basis(width - 1, k)) {
            double sum = 0.0;
            for (const auto& p : x.points) sum += f.evaluate(p);
            rep.residuals.push_back({f.to_string(), sum, 0.0, std::abs(sum)});
        }
    }
    rep.second_moments.assign(width, 0.0);
    for (const auto& p : x.points)
        for (std::uint32_t j = 0; j < width; ++j) rep.second_moments[j] += p[j] * p[j];
    auto [lo, hi] = std::minmax_element(rep.second_moments.begin(), rep.second_moments.end());
    rep.second_moment_spread = *hi - *lo;
    close_report(rep);
    return rep;
}

VerificationReport verify_index(const DesignPointSet& x, std::uint32_t k, double tol) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (k < 1) throw std::invalid_argument("need k >= 1");
    std::uint32_t width = point_width(x);
    VerificationReport rep;
    rep.degree = k;
    rep.tolerance = tol;
    for (const auto& exps : poly::monomials_of_degree(width, k)) {
        double sum = 0.0;
        for (const auto& p : x.points) {
            double term = 1.0;
            for (std::uint32_t j = 0; j < width; ++j)
                for (std::uint32_t e = 0; e < exps[j]; ++e) term *= p[j];
            sum += term;
        }
        double mean = sum / static_cast<double>(x.points.size());
        double expect = poly::sphere_average(exps);
        rep.residuals.push_back(
            {poly::monomial_label(exps), mean, expect, std::abs(mean - expect)});
    }
    close_report(rep);
    return rep;
}

std::pair<double, double> trig_zero_sum(std::uint64_t n, std::uint64_t a) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    double sin_sum = 0.0, cos_sum = 0.0;
    for (std::uint64_t i = 1; i <= n; ++i) {
        std::uint64_t r = zn::mul_mod(i % n, a % n, n);
        double angle = kTau * static_cast<double>(r) / static_cast<double>(n);
        sin_sum += std::sin(angle);
        cos_sum += std::cos(angle);
    }
    return {sin_sum, cos_sum};
}

double default_tolerance(std::uint64_t n) { return 1e-9 * static_cast<double>(n); }

void write_csv(const DesignPointSet& x, std::ostream& out) {
    out << "# d=" << x.d << " n=" << x.n << " m=" << x.m;
    if (x.generator) {
        out << " gens=";
        for (std::size_t i = 0; i < x.generator->a.size(); ++i) {
            if (i) out << ",";
            out << x.generator->a[i];
        }
    }
    out << "\n";
    char buf[64];
    for (const auto& p : x.points) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", p[j]);
            if (j) out << ",";
            out << buf;
        }
        out << "\n";
    }
}

DesignPointSet read_csv(std::istream& in) {
    DesignPointSet x;
    std::string line;
    bool have_header = false;
    std::uint64_t hd = 0, hn = 0, hm = 0;
    std::vector<std::uint64_t> gens;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream hs(line.substr(1));
            std::string tok;
            while (hs >> tok) {
                auto eq = tok.find('=');
                if (eq == std::string::npos) continue;
                std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
                try {
                    if (key == "d") hd = std::stoull(val);
                    else if (key == "n") hn = std::stoull(val);
                    else if (key == "m") hm = std::stoull(val);
                    else if (key == "gens") {
                        std::istringstream gs(val);
                        std::string piece;
                        while (std::getline(gs, piece, ',')) gens.push_back(std::stoull(piece));
                    }
                } catch (const std::exception&) {
                    throw std::runtime_error("unreadable header field: " + tok);
                }
            }
            have_header = true;
            continue;
        }
        std::vector<double> row;
        std::istringstream rs(line);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error("unreadable coordinate: " + cell);
            }
        }
        if (!x.points.empty() && row.size() != x.points.front().size())
            throw std::runtime_error("rows have inconsistent column counts");
        x.points.push_back(std::move(row));
    }
    if (x.points.empty()) throw std::runtime_error("no points in file");
    std::size_t width = x.points.front().size();
    if (width == 0 || width % 2 != 0)
        throw std::runtime_error("points must have a positive even coordinate count");
    x.n = x.points.size();
    x.m = static_cast<std::uint32_t>(width / 2);
    x.d = static_cast<std::uint32_t>(width - 1);
    if (have_header) {
        if (hn && hn != x.n) throw std::runtime_error("header n disagrees with row count");
        if (hm && hm != x.m) throw std::runtime_error("header m disagrees with column count");
        if (hd && hd != x.d) throw std::runtime_error("header d disagrees with column count");
        if (!gens.empty()) {
            if (hn == 0) throw std::runtime_error("header gens without n");
            x.generator = GeneratorSet{hn, gens};
        }
    }
    return x;
}

}  // namespace freeset::designs
