#pragma once

#include <cstddef>
#include <vector>

namespace psc {

// A (Laurent) monomial as an exponent vector over a fixed signature.
// Negative exponents are legal only on invertible variables; that
// constraint is enforced where monomials enter a Polynomial.
class Monomial {
public:
    explicit Monomial(std::size_t n_vars) : exp_(n_vars, 0) {}
    explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {}

    std::size_t size() const { return exp_.size(); }
    int exponent(std::size_t i) const { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }

    // Sum of exponents; may be negative for Laurent monomials.
    int total_degree() const;
    bool is_unit() const;

    Monomial times(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const;
    Monomial pow(int k) const;

    // Componentwise exponent(i) >= o.exponent(i); the divisibility test
    // used by polynomial division once unit factors are stripped.
    bool divisible_by(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

private:
    std::vector<int> exp_;
};

// Graded lexicographic order: total degree first, ties broken
// lexicographically on the exponent vector. Returns <0, 0 or >0.
int compare_grlex(const Monomial& a, const Monomial& b);

struct MonomialGrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) < 0; }
};

}  // namespace psc
