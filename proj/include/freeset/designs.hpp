#pragma once

// Point sets on odd-dimensional spheres built from residue generators, and
// numeric verification of their design strength / index.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freeset/polynomial.hpp"

namespace freeset::designs {

struct GeneratorSet {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> a;  // a_1..a_m, placed into cos/sin coordinate pairs
};

struct DesignPointSet {
    std::uint32_t d = 0;    // sphere dimension, 2m-1 for built sets
    std::uint64_t n = 0;    // number of points
    std::uint32_t m = 0;    // coordinate pairs; points live in R^(2m)
    std::vector<std::vector<double>> points;
    std::optional<GeneratorSet> generator;
    std::vector<std::string> warnings;
};

// Delsarte-Goethals-Seidel minimum point count for a t-design on S^d.
std::uint64_t dgs_bound(std::uint32_t t, std::uint32_t d);

// Dimension of the degree-k harmonic polynomials on S^d.
std::uint64_t dim_harm(std::uint32_t d, std::uint32_t k);

// Basis of the degree-k harmonics in d+1 variables, for k = 1, 2, 3.
std::vector<poly::Polynomial> harmonic_basis(std::uint32_t d, std::uint32_t k);

// Point i (i = 1..n) has coordinate pair v equal to
// (cos(2*pi*i*a_v/n), sin(2*pi*i*a_v/n)) / sqrt(m).  Degenerate or repeated
// generators produce warnings, never errors.
DesignPointSet build_design(const GeneratorSet& g);

struct ResidualEntry {
    std::string label;
    double value = 0;      // the computed sum (strength) or mean (index)
    double expected = 0;   // target: 0 for strength, sphere average for index
    double residual = 0;   // |value - expected|
};

struct VerificationReport {
    std::uint32_t degree = 0;  // strength t or index k
    double tolerance = 0;
    bool pass = false;
    double max_residual = 0;
    std::string worst;
    std::vector<ResidualEntry> residuals;
    // Strength mode extras: per-coordinate second moments and their spread.
    std::vector<double> second_moments;
    double second_moment_spread = 0;
};

// Sums every degree <= t harmonic basis polynomial over the points; passes
// when all |sums| stay within tol.  Only t = 1, 2, 3 (the degrees with
// explicit bases); use verify_index beyond that.
VerificationReport verify_strength(const DesignPointSet& x, std::uint32_t t, double tol);

// Compares the mean of every degree-k monomial over the points to its exact
// sphere average; passes when all deviations stay within tol.
VerificationReport verify_index(const DesignPointSet& x, std::uint32_t k, double tol);

// (sin sum, cos sum) of the angles 2*pi*i*a/n for i = 1..n.  Both vanish
// unless n divides a, in which case the cosine sum is n.
std::pair<double, double> trig_zero_sum(std::uint64_t n, std::uint64_t a);

double default_tolerance(std::uint64_t n);

// CSV with one point per row, 17 significant digits, and a
// "# d=<d> n=<n> m=<m> gens=<a_1,...,a_m>" header.
void write_csv(const DesignPointSet& x, std::ostream& out);

// Accepts any even column count; the header is optional but checked for
// consistency when present.
DesignPointSet read_csv(std::istream& in);

}  // namespace freeset::designs
