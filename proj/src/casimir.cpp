#include "psc/casimir.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "psc/errors.hpp"
#include "psc/linalg.hpp"

namespace psc {

bool is_casimir(const PoissonAlgebra& a, const Polynomial& f) {
    a.require_jacobi_verified("is_casimir");
    require_same_signature(a.signature(), f.signature(), "is_casimir");
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        if (!bracket(a, a.generator(i), f).is_zero()) return false;
    return true;
}

bool is_casimir_quotient(const PoissonAlgebra& a, const Polynomial& p, const Polynomial& q) {
    a.require_jacobi_verified("is_casimir_quotient");
    require_same_signature(a.signature(), p.signature(), "is_casimir_quotient");
    require_same_signature(a.signature(), q.signature(), "is_casimir_quotient");
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("is_casimir_quotient: zero element");
    for (std::size_t i = 0; i < a.n_vars(); ++i) {
        Polynomial g = a.generator(i);
        if (!(q * bracket(a, g, p) - p * bracket(a, g, q)).is_zero()) return false;
    }
    return true;
}

bool same_weight_normal(const PoissonAlgebra& a, const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("same_weight_normal: zero element");
    auto wp = is_poisson_normal(a, p);
    if (!wp) return false;
    auto wq = is_poisson_normal(a, q);
    if (!wq) return false;
    return *wp == *wq;
}

int RelationPolynomial::total_degree() const {
    int d = 0;
    for (const auto& [ij, c] : coeffs_) {
        (void)c;
        d = std::max(d, ij.first + ij.second);
    }
    return d;
}

Polynomial RelationPolynomial::substitute(const Polynomial& a, const Polynomial& b) const {
    require_same_signature(a.signature(), b.signature(), "relation substitute");
    Polynomial acc(a.signature());
    for (const auto& [ij, c] : coeffs_)
        acc += (a.pow(static_cast<unsigned>(ij.first)) * b.pow(static_cast<unsigned>(ij.second)))
                   .scaled(c);
    return acc;
}

std::string RelationPolynomial::str() const {
    // Terms in descending (total degree, X-power) order.
    std::vector<std::pair<std::pair<int, int>, Rational>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
        int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [ij, c] : terms) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        std::string mono;
        auto piece = [](char v, int e) {
            std::ostringstream ms;
            ms << v;
            if (e != 1) ms << "^" << e;
            return ms.str();
        };
        if (ij.first > 0) mono = piece('X', ij.first);
        if (ij.second > 0) {
            if (!mono.empty()) mono += "*";
            mono += piece('Y', ij.second);
        }
        if (mono.empty())
            os << a.str();
        else if (a.is_one())
            os << mono;
        else
            os << a.str() << "*" << mono;
    }
    return os.str();
}

namespace {

// Column order for relation unknowns: total degree, then X-power.
bool column_less(const std::pair<int, int>& l, const std::pair<int, int>& r) {
    int dl = l.first + l.second, dr = r.first + r.second;
    if (dl != dr) return dl < dr;
    return l.first < r.first;
}

// Canonical kernel vector: smallest support in column order among the
// deterministic basis, first nonzero coefficient scaled to 1.
QVector canonical_kernel_vector(const std::vector<QVector>& basis) {
    auto support = [](const QVector& v) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) s.push_back(i);
        return s;
    };
    const QVector* best = &basis.front();
    std::vector<std::size_t> best_support = support(*best);
    for (std::size_t k = 1; k < basis.size(); ++k) {
        auto s = support(basis[k]);
        if (s < best_support) {
            best = &basis[k];
            best_support = std::move(s);
        }
    }
    QVector v = *best;
    Rational lead = v[best_support.front()];
    for (auto& c : v) c /= lead;
    return v;
}

// Rows indexed by the union of monomials of the given polynomials, in
// grlex order; column j holds the coefficients of polys[j].
QMatrix coefficient_matrix(const std::vector<Polynomial>& polys) {
    std::map<Monomial, std::size_t, MonomialGrlexLess> row_of;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            row_of.emplace(m, 0);
        }
    std::size_t r = 0;
    for (auto& [m, idx] : row_of) idx = r++;
    QMatrix mat(row_of.size(), polys.size());
    for (std::size_t j = 0; j < polys.size(); ++j)
        for (const auto& [m, c] : polys[j].terms()) mat.at(row_of.at(m), j) = c;
    return mat;
}

}  // namespace

std::optional<RelationPolynomial> algebraic_relation(const Polynomial& a, const Polynomial& b,
                                                     int max_degree) {
    require_same_signature(a.signature(), b.signature(), "algebraic_relation");
    if (a.is_zero() || b.is_zero()) throw std::domain_error("algebraic_relation: zero element");
    if (max_degree < 1) throw std::invalid_argument("algebraic_relation: degree bound must be >= 1");

    // Powers are shared across degrees.
    std::vector<Polynomial> pow_a{Polynomial::constant(a.signature(), Rational(1))};
    std::vector<Polynomial> pow_b{Polynomial::constant(b.signature(), Rational(1))};
    for (int k = 1; k <= max_degree; ++k) {
        pow_a.push_back(pow_a.back() * a);
        pow_b.push_back(pow_b.back() * b);
    }

    for (int d = 1; d <= max_degree; ++d) {
        std::vector<std::pair<int, int>> cols;
        for (int total = 0; total <= d; ++total)
            for (int i = 0; i <= total; ++i) cols.emplace_back(i, total - i);
        std::sort(cols.begin(), cols.end(), column_less);

        std::vector<Polynomial> products;
        products.reserve(cols.size());
        for (const auto& [i, j] : cols) products.push_back(pow_a[i] * pow_b[j]);

        auto basis = kernel_basis(coefficient_matrix(products));
        if (basis.empty()) continue;
        QVector v = canonical_kernel_vector(basis);
        RelationPolynomial::CoeffMap coeffs;
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (!v[k].is_zero()) coeffs.emplace(cols[k], v[k]);
        return RelationPolynomial(std::move(coeffs), max_degree);
    }
    return std::nullopt;
}

std::optional<MonomialIdealCertificate> monomial_in_ideal(const GpaCertificate& cert,
                                                          const Polynomial& a, int max_degree) {
    if (a.is_zero()) throw std::domain_error("monomial_in_ideal: zero element");
    if (max_degree < 1) throw std::invalid_argument("monomial_in_ideal: degree bound must be >= 1");
    if (weight_decompose(cert, a).components.size() != 1)
        throw PreconditionError("monomial_in_ideal: element is not weight-homogeneous");

    const SignaturePtr& sig = a.signature();
    const Monomial base = a.leading_monomial();
    const Polynomial b = Polynomial::monomial(sig, base);

    std::vector<Polynomial> pow_a{Polynomial::constant(sig, Rational(1))};
    std::vector<Polynomial> pow_b{Polynomial::constant(sig, Rational(1))};
    for (int k = 1; k <= max_degree; ++k) {
        pow_a.push_back(pow_a.back() * a);
        pow_b.push_back(pow_b.back() * b);
    }

    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Polynomial> products;
        products.reserve(d + 1);
        for (int i = 0; i <= d; ++i) products.push_back(pow_a[i] * pow_b[d - i]);
        auto basis = kernel_basis(coefficient_matrix(products));
        if (basis.empty()) continue;
        QVector s = canonical_kernel_vector(basis);
        int m = 0;
        while (s[m].is_zero()) ++m;
        // m = d would force a^d = 0, impossible in a domain.
        if (m == d) throw std::logic_error("monomial_in_ideal: degenerate relation");
        MonomialIdealCertificate out{base, d, m, std::move(s),
                                     Polynomial::monomial(sig, base.pow(d - m))};
        return out;
    }
    return std::nullopt;
}

Polynomial replay_certificate(const MonomialIdealCertificate& c, const Polynomial& a) {
    const SignaturePtr& sig = a.signature();
    const Polynomial b = Polynomial::monomial(sig, c.base);
    Polynomial acc(sig);
    for (int i = c.min_index; i <= c.relation_degree; ++i)
        acc += (a.pow(static_cast<unsigned>(i - c.min_index)) *
                b.pow(static_cast<unsigned>(c.relation_degree - i)))
                   .scaled(c.s[static_cast<std::size_t>(i)]);
    return acc;
}

}  // namespace psc
