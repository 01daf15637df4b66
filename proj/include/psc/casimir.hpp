#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "psc/normality.hpp"
#include "psc/poisson.hpp"

namespace psc {

// f is a Casimir iff {x_i, f} = 0 for every generator; sufficient by
// the Leibniz rule. Requires a Jacobi-verified algebra.
bool is_casimir(const PoissonAlgebra& a, const Polynomial& f);

// Whether p / q is a Casimir of the fraction field, with the fraction
// never materialised: q * {x_i, p} - p * {x_i, q} = 0 for every i.
// Requires p, q != 0 (domain error).
bool is_casimir_quotient(const PoissonAlgebra& a, const Polynomial& p, const Polynomial& q);

// Both elements Poisson normal with the same weight derivation.
bool same_weight_normal(const PoissonAlgebra& a, const Polynomial& p, const Polynomial& q);

// A nonzero two-variable relation f(X, Y) = sum s_ij X^i Y^j with
// f(a, b) = 0, found by exact nullspace computation.
class RelationPolynomial {
public:
    using CoeffMap = std::map<std::pair<int, int>, Rational>;

    RelationPolynomial(CoeffMap coeffs, int degree_bound)
        : coeffs_(std::move(coeffs)), degree_bound_(degree_bound) {}

    const CoeffMap& coefficients() const { return coeffs_; }
    int degree_bound() const { return degree_bound_; }
    int total_degree() const;

    Polynomial substitute(const Polynomial& a, const Polynomial& b) const;

    // e.g. "X^3 - Y^2"; descending total degree, X-power before Y-power.
    std::string str() const;

private:
    CoeffMap coeffs_;
    int degree_bound_;
};

// Searches degrees d = 1..max_degree in order and returns the first
// relation found. The kernel vector is canonical: among the
// deterministic nullspace basis, the vector whose support is smallest
// for the (total degree, X-power) column order, scaled so its first
// nonzero coefficient in that order is 1.
std::optional<RelationPolynomial> algebraic_relation(const Polynomial& a, const Polynomial& b,
                                                     int max_degree);

// Certificate that a pure power of the monomial b lies in the Poisson
// ideal (a): s[m] * b^(d-m) = -sum_{i>m} s[i] * a^(i-m) * b^(d-i).
struct MonomialIdealCertificate {
    Monomial base;            // b, the grlex-leading monomial of a
    int relation_degree;      // d
    int min_index;            // m = min{ i : s[i] != 0 }, m < d
    std::vector<Rational> s;  // s[0..d] with sum_i s[i] a^i b^(d-i) = 0
    Polynomial power;         // b^(d-m), the monomial power in the ideal
};

// Requires a weight-homogeneous a != 0 over a certified algebra;
// searches relation degrees 1..max_degree.
std::optional<MonomialIdealCertificate> monomial_in_ideal(const GpaCertificate& cert,
                                                          const Polynomial& a, int max_degree);

// Replays the certificate identity sum_{i=m}^{d} s[i] a^(i-m) b^(d-i);
// returns the (zero) residual.
Polynomial replay_certificate(const MonomialIdealCertificate& c, const Polynomial& a);

}  // namespace psc
