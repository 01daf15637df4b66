#pragma once

#include <map>
#include <optional>

#include "psc/monomial.hpp"
#include "psc/rational.hpp"
#include "psc/signature.hpp"

namespace psc {

// Sparse multivariate (Laurent) polynomial with exact rational
// coefficients, kept in canonical form: no zero coefficients, one term
// per monomial, terms ordered graded-lexicographically.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialGrlexLess>;

    explicit Polynomial(SignaturePtr sig);

    static Polynomial zero(SignaturePtr sig) { return Polynomial(std::move(sig)); }
    static Polynomial constant(SignaturePtr sig, Rational c);
    static Polynomial variable(SignaturePtr sig, std::size_t index);
    // Validates Laurent exponents against the signature.
    static Polynomial monomial(SignaturePtr sig, Monomial m, Rational c = Rational(1));

    const SignaturePtr& signature() const { return sig_; }
    std::size_t n_vars() const { return sig_->size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // grlex-largest monomial; polynomial must be nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    int total_degree() const;  // degree of the leading monomial

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial times_monomial(const Monomial& m, const Rational& c = Rational(1)) const;
    Polynomial pow(unsigned k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return *a.sig_ == *b.sig_ && a.terms_ == b.terms_;
    }

    // Termwise k * x^(k-1) rule, valid for negative exponents.
    Polynomial derivative(std::size_t var) const;

    void add_term(const Monomial& m, const Rational& c);

private:
    SignaturePtr sig_;
    TermMap terms_;
};

// Deterministic total order used wherever a polynomial value must be
// selected or sorted: term sequences are compared from the leading term
// down, each term by monomial (grlex) then coefficient; a shorter
// sequence that is a prefix of the other sorts first. In particular the
// zero polynomial is the minimum. Returns <0, 0 or >0.
int compare(const Polynomial& a, const Polynomial& b);

struct PolynomialLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const { return compare(a, b) < 0; }
};

// Exact quotient q with f = q * g if one exists in the (Laurent) ring.
// For Laurent signatures the maximal unit monomial of g is factored out
// first. Throws std::domain_error when g = 0.
std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g);

}  // namespace psc
