#include "freeset/polynomial.hpp"

#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace freeset::poly {
namespace {

long long checked(__int128 v) {
    if (v > static_cast<__int128>(9223372036854775807LL) ||
        v < -static_cast<__int128>(9223372036854775807LL))
        throw std::overflow_error("rational coefficient overflow");
    return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rational Rational::operator-() const { return Rational(-num, den); }

Rational Rational::operator+(const Rational& o) const {
    __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
    __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked(n), checked(d));
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    __int128 n = static_cast<__int128>(num) * o.num;
    __int128 d = static_cast<__int128>(den) * o.den;
    return Rational(checked(n), checked(d));
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != vars_) throw std::invalid_argument("exponent arity mismatch");
    if (c.zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.zero()) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (o.vars_ != vars_) throw std::invalid_argument("variable count mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::laplacian() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        for (std::uint32_t j = 0; j < vars_; ++j) {
            if (e[j] < 2) continue;
            Exponents d = e;
            d[j] -= 2;
            r.add_term(d, c * Rational(static_cast<long long>(e[j]) *
                                       static_cast<long long>(e[j] - 1)));
        }
    }
    return r;
}

std::optional<std::uint32_t> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    std::optional<std::uint32_t> deg;
    for (const auto& [e, c] : terms_) {
        std::uint32_t d = 0;
        for (auto x : e) d += x;
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

double Polynomial::evaluate(const std::vector<double>& x) const {
    if (x.size() != vars_) throw std::invalid_argument("point arity mismatch");
    double total = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.value();
        for (std::uint32_t j = 0; j < vars_; ++j)
            for (std::uint32_t p = 0; p < e[j]; ++p) term *= x[j];
        total += term;
    }
    return total;
}

std::string monomial_label(const Exponents& exps) {
    std::string out;
    for (std::uint32_t j = 0; j < exps.size(); ++j) {
        if (exps[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(j);
        if (exps[j] > 1) out += "^" + std::to_string(exps[j]);
    }
    if (out.empty()) out = "1";
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest powers of the first variable first, the usual reading order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (out.empty()) {
            if (a.num < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.num < 0 ? " - " : " + ";
            if (a.num < 0) a = -a;
        }
        std::string lbl = monomial_label(e);
        if (a == Rational(1) && lbl != "1")
            out += lbl;
        else if (lbl == "1")
            out += a.to_string();
        else
            out += a.to_string() + "*" + lbl;
    }
    return out;
}

Polynomial monomial(std::uint32_t vars, const Exponents& exps, const Rational& c) {
    Polynomial p(vars);
    p.add_term(exps, c);
    return p;
}

std::vector<Exponents> monomials_of_degree(std::uint32_t vars, std::uint32_t k) {
    std::vector<Exponents> out;
    Exponents cur(vars, 0);
    // Assign the first variable the largest share first, then recurse.
    auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t left) -> void {
        if (pos + 1 == vars) {
            cur[pos] = left;
            out.push_back(cur);
            cur[pos] = 0;
            return;
        }
        for (std::uint32_t e = left + 1; e-- > 0;) {
            cur[pos] = e;
            self(self, pos + 1, left - e);
        }
        cur[pos] = 0;
    };
    if (vars == 0) throw std::invalid_argument("need at least one variable");
    rec(rec, 0, k);
    return out;
}

double sphere_average(const Exponents& exps) {
    if (exps.empty()) throw std::invalid_argument("empty exponent vector");
    std::uint32_t total = 0;
    for (auto e : exps) {
        if (e % 2 == 1) return 0.0;
        total += e;
    }
    if (total == 0) return 1.0;
    long double num = 1.0L;
    for (auto e : exps)
        for (std::uint32_t f = e; f > 1; f -= 2) num *= static_cast<long double>(f - 1);
    long double den = 1.0L;
    std::uint32_t s = total / 2;
    std::uint32_t dim = static_cast<std::uint32_t>(exps.size());
    for (std::uint32_t r = 1; r <= s; ++r) den *= static_cast<long double>(dim + 2 * r - 2);
    return static_cast<double>(num / den);
}

}  // namespace freeset::poly
