#pragma once

// Exact multivariate polynomials with rational coefficients, just enough to
// state harmonic bases symbolically and evaluate them on point sets.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace freeset::poly {

struct Rational {
    long long num = 0;
    long long den = 1;  // always > 0, coprime to num

    Rational() = default;
    Rational(long long value) : num(value) {}
    Rational(long long n, long long d);

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool zero() const { return num == 0; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;
};

using Exponents = std::vector<std::uint32_t>;

class Polynomial {
  public:
    explicit Polynomial(std::uint32_t vars) : vars_(vars) {}

    std::uint32_t vars() const { return vars_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    void add_term(const Exponents& exps, const Rational& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;

    // Sum of second partials, by exact term rewriting.
    Polynomial laplacian() const;

    // Common total degree of all terms; 0 for the zero polynomial, nullopt
    // if terms have mixed degrees.
    std::optional<std::uint32_t> homogeneous_degree() const;

    double evaluate(const std::vector<double>& x) const;
    std::string to_string() const;

  private:
    std::uint32_t vars_;
    std::map<Exponents, Rational> terms_;
};

Polynomial monomial(std::uint32_t vars, const Exponents& exps, const Rational& c);

std::string monomial_label(const Exponents& exps);

// All exponent vectors over `vars` variables of total degree k, highest
// power on the first variable first.
std::vector<Exponents> monomials_of_degree(std::uint32_t vars, std::uint32_t k);

// Average of x^alpha over the unit sphere in R^|alpha|: zero when any
// exponent is odd, else prod (a_j - 1)!! / prod_{r=1..s} (dim + 2r - 2)
// with s half the total degree.
double sphere_average(const Exponents& exps);

}  // namespace freeset::poly
