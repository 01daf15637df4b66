#include "psc/polynomial.hpp"

#include <cassert>
#include <stdexcept>

namespace psc {

namespace {

void check_laurent(const Signature& sig, const Monomial& m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.exponent(i) < 0 && !sig.invertible(i))
            throw std::invalid_argument("negative exponent on non-invertible variable '" +
                                        sig.name(i) + "'");
}

}  // namespace

Polynomial::Polynomial(SignaturePtr sig) : sig_(std::move(sig)) {
    if (!sig_) throw std::invalid_argument("polynomial requires a signature");
}

Polynomial Polynomial::constant(SignaturePtr sig, Rational c) {
    Polynomial p(std::move(sig));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.n_vars()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(SignaturePtr sig, std::size_t index) {
    Polynomial p(std::move(sig));
    if (index >= p.n_vars()) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(p.n_vars(), 0);
    e[index] = 1;
    p.terms_.emplace(Monomial(std::move(e)), Rational(1));
    return p;
}

Polynomial Polynomial::monomial(SignaturePtr sig, Monomial m, Rational c) {
    Polynomial p(std::move(sig));
    if (m.size() != p.n_vars()) throw std::invalid_argument("monomial length does not match signature");
    check_laurent(*p.sig_, m);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

const Monomial& Polynomial::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading monomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

int Polynomial::total_degree() const { return leading_monomial().total_degree(); }

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    if (m.size() != n_vars()) throw std::invalid_argument("monomial length does not match signature");
    check_laurent(*sig_, m);
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(sig_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_signature(sig_, o.sig_, "add");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_signature(sig_, o.sig_, "subtract");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_signature(a.sig_, b.sig_, "multiply");
    Polynomial r(a.sig_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
    Polynomial r(sig_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) {
        Monomial prod = mm.times(m);
        check_laurent(*sig_, prod);
        r.terms_.emplace(std::move(prod), k * c);
    }
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = Polynomial::constant(sig_, Rational(1));
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= n_vars()) throw std::invalid_argument("variable index out of range");
    Polynomial r(sig_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[var] = e - 1;
        r.add_term(Monomial(std::move(exps)), c * Rational(e));
    }
    return r;
}

int compare(const Polynomial& a, const Polynomial& b) {
    auto ia = a.terms().rbegin(), ea = a.terms().rend();
    auto ib = b.terms().rbegin(), eb = b.terms().rend();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        int cm = compare_grlex(ia->first, ib->first);
        if (cm != 0) return cm;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != ea) return 1;
    if (ib != eb) return -1;
    return 0;
}

std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
    require_same_signature(f.signature(), g.signature(), "exact_divide");
    if (g.is_zero()) throw std::domain_error("exact_divide: division by zero");
    if (f.is_zero()) return Polynomial::zero(f.signature());

    const Signature& sig = *f.signature();
    const std::size_t n = sig.size();

    // Strip the maximal unit monomial (invertible variables only) from
    // both operands, so the core loop runs over genuine polynomials.
    auto unit_shift = [&](const Polynomial& p) {
        std::vector<int> shift(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            if (!sig.invertible(i)) continue;
            bool first = true;
            int lo = 0;
            for (const auto& [m, c] : p.terms()) {
                (void)c;
                int e = m.exponent(i);
                if (first || e < lo) lo = e;
                first = false;
            }
            shift[i] = lo;
        }
        return shift;
    };

    std::vector<int> sf = unit_shift(f), sg = unit_shift(g);
    std::vector<int> neg_sf(n), neg_sg(n), reattach(n);
    for (std::size_t i = 0; i < n; ++i) {
        neg_sf[i] = -sf[i];
        neg_sg[i] = -sg[i];
        reattach[i] = sf[i] - sg[i];
    }
    Polynomial rem = f.times_monomial(Monomial(neg_sf));
    Polynomial div = g.times_monomial(Monomial(neg_sg));

    Polynomial quot(f.signature());
    const Monomial& lm_div = div.leading_monomial();
    const Rational& lc_div = div.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial& lm = rem.leading_monomial();
        if (!lm.divisible_by(lm_div)) return std::nullopt;
        Monomial t = lm.divided_by(lm_div);
        Rational c = rem.leading_coefficient() / lc_div;
        quot.add_term(t, c);
        rem -= div.times_monomial(t, c);
    }
    return quot.times_monomial(Monomial(reattach));
}

}  // namespace psc
