#include "psc/lie.hpp"

#include <stdexcept>

#include "psc/errors.hpp"
#include "psc/normality.hpp"
#include "psc/parse.hpp"

namespace psc {

namespace {

bool is_homogeneous_linear(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        if (m.total_degree() != 1) return false;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m.exponent(i) < 0) return false;
    }
    return true;
}

}  // namespace

LieAlgebra LieAlgebra::from_brackets(const PoissonAlgebra& a) {
    a.require_jacobi_verified("lie_from_brackets");
    for (std::size_t i = 0; i < a.n_vars(); ++i)
        for (std::size_t j = i + 1; j < a.n_vars(); ++j)
            if (!is_homogeneous_linear(a.bracket_entry(i, j)))
                throw PreconditionError("bracket {" + a.signature()->name(i) + "," +
                                        a.signature()->name(j) + "} is not homogeneous linear");
    return LieAlgebra(a);
}

QVector LieAlgebra::bracket_vector(std::size_t i, std::size_t j) const {
    const std::size_t n = dimension();
    QVector v(n);
    for (const auto& [m, c] : algebra_.bracket_entry(i, j).terms())
        for (std::size_t k = 0; k < n; ++k)
            if (m.exponent(k) == 1) v[k] = c;
    return v;
}

std::vector<QVector> derived_subalgebra(const LieAlgebra& l) {
    const std::size_t n = l.dimension();
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            QVector v = l.bracket_vector(i, j);
            bool zero = true;
            for (const auto& c : v) zero = zero && c.is_zero();
            if (!zero) rows.push_back(std::move(v));
        }
    if (rows.empty()) return {};
    QMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
    Rref r = rref(std::move(m));
    std::vector<QVector> basis;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) basis.push_back(r.mat.row(i));
    return basis;
}

std::vector<Monomial> degree_basis(std::size_t n_vars, int d) {
    std::vector<Monomial> out;
    std::vector<int> exps(n_vars, 0);
    // Enumerate exponent vectors of total degree d; collect then sort
    // grlex-descending.
    const auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i + 1 == n_vars) {
            exps[i] = remaining;
            out.emplace_back(exps);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[i] = e;
            self(self, i + 1, remaining - e);
        }
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return compare_grlex(a, b) > 0; });
    return out;
}

QMatrix ad_action_matrix(const LieAlgebra& l, const QVector& v, int d) {
    if (d < 1) throw std::invalid_argument("ad_action_matrix: degree must be >= 1");
    if (v.size() != l.dimension()) throw std::invalid_argument("ad_action_matrix: bad vector size");
    const PoissonAlgebra& alg = l.algebra();
    const SignaturePtr& sig = alg.signature();

    Polynomial elem(sig);
    for (std::size_t i = 0; i < v.size(); ++i)
        elem += Polynomial::variable(sig, i).scaled(v[i]);

    std::vector<Monomial> basis = degree_basis(l.dimension(), d);
    std::map<Monomial, std::size_t, MonomialGrlexLess> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);

    QMatrix m(basis.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Polynomial image = bracket(alg, elem, Polynomial::monomial(sig, basis[j]));
        for (const auto& [mono, c] : image.terms()) {
            auto it = index.find(mono);
            if (it == index.end())
                throw std::logic_error("ad image left the degree component");
            m.at(it->second, j) = c;
        }
    }
    return m;
}

bool Character::is_zero() const {
    for (const auto& v : values)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

// Restriction of `op` to the column space of `basis` (which it must
// preserve): solves basis * M = op * basis column by column.
QMatrix restrict_operator(const QMatrix& op, const QMatrix& basis) {
    QMatrix m(basis.cols(), basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        auto x = solve_consistent(basis, op.apply(basis.column(j)));
        if (!x) throw std::logic_error("operator does not preserve the subspace");
        for (std::size_t i = 0; i < basis.cols(); ++i) m.at(i, j) = (*x)[i];
    }
    return m;
}

// Indices of basis vectors completing span(rows) to the full space, in
// input order.
std::vector<std::size_t> completion_indices(const std::vector<QVector>& rows, std::size_t n) {
    std::vector<QVector> acc = rows;
    std::vector<std::size_t> out;
    auto current_rank = [&]() {
        if (acc.empty()) return std::size_t{0};
        QMatrix m(acc.size(), n);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = acc[i][j];
        return rank(m);
    };
    std::size_t r = current_rank();
    for (std::size_t i = 0; i < n && r < n; ++i) {
        QVector e(n);
        e[i] = Rational(1);
        acc.push_back(e);
        std::size_t r2 = current_rank();
        if (r2 > r)
            out.push_back(i), r = r2;
        else
            acc.pop_back();
    }
    return out;
}

}  // namespace

SemiInvariantSpace semi_invariants(const LieAlgebra& l, int d) {
    if (d < 1) throw std::invalid_argument("semi_invariants: degree must be >= 1");
    const std::size_t n = l.dimension();
    const PoissonAlgebra& alg = l.algebra();
    const SignaturePtr& sig = alg.signature();
    const std::vector<Monomial> mon_basis = degree_basis(n, d);
    const std::size_t dim = mon_basis.size();

    SemiInvariantSpace out;
    out.degree = d;

    // Joint kernel of ad(z) over a basis z of [g, g].
    std::vector<QVector> derived = derived_subalgebra(l);
    std::vector<QVector> joint;
    if (derived.empty()) {
        for (std::size_t k = 0; k < dim; ++k) {
            QVector e(dim);
            e[k] = Rational(1);
            joint.push_back(std::move(e));
        }
    } else {
        QMatrix stacked(0, dim);
        bool first = true;
        for (const auto& z : derived) {
            QMatrix zm = ad_action_matrix(l, z, d);
            stacked = first ? zm : stacked.stacked(zm);
            first = false;
        }
        joint = kernel_basis(stacked);
        if (joint.empty()) return out;
    }

    std::vector<std::size_t> completion = completion_indices(derived, n);

    struct State {
        QVector values;  // eigenvalues on the completion vectors so far
        QMatrix basis;   // columns span the subspace
    };
    std::vector<State> states{{QVector{}, QMatrix::from_columns(joint)}};

    for (std::size_t w : completion) {
        QVector e(n);
        e[w] = Rational(1);
        QMatrix op = ad_action_matrix(l, e, d);
        std::vector<State> next;
        for (auto& st : states) {
            QMatrix m = restrict_operator(op, st.basis);
            auto roots = rational_roots_monic(char_poly(m));
            std::size_t split_dim = 0;
            for (const auto& [mu, mult] : roots) {
                (void)mult;
                QMatrix shifted = m;
                for (std::size_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= mu;
                auto eig = kernel_basis(shifted);
                if (eig.empty()) continue;
                split_dim += eig.size();
                // Lift coordinates back to S^d.
                std::vector<QVector> lifted;
                for (const auto& vec : eig) lifted.push_back(st.basis.apply(vec));
                QVector values = st.values;
                values.push_back(mu);
                next.push_back({std::move(values), QMatrix::from_columns(lifted)});
            }
            if (split_dim < st.basis.cols())
                out.unsplit.push_back({st.values, w, st.basis.cols() - split_dim});
        }
        states = std::move(next);
    }

    // Character values on every basis element: coordinates in the basis
    // [derived | completion] map x_i to sum of completion eigenvalues.
    std::size_t nd = derived.size();
    std::optional<QMatrix> frame;
    if (nd + completion.size() > 0) {
        QMatrix f(n, nd + completion.size());
        for (std::size_t j = 0; j < nd; ++j)
            for (std::size_t i = 0; i < n; ++i) f.at(i, j) = derived[j][i];
        for (std::size_t j = 0; j < completion.size(); ++j) f.at(completion[j], nd + j) = Rational(1);
        frame = std::move(f);
    }

    for (auto& st : states) {
        Character chi;
        chi.values.assign(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) {
            QVector e(n);
            e[i] = Rational(1);
            auto coords = solve_consistent(*frame, e);
            if (!coords) throw std::logic_error("basis completion failed");
            Rational val;
            for (std::size_t j = 0; j < completion.size(); ++j) val += (*coords)[nd + j] * st.values[j];
            chi.values[i] = val;
        }
        SemiInvariantEntry entry;
        entry.character = std::move(chi);
        for (std::size_t j = 0; j < st.basis.cols(); ++j) {
            Polynomial f(sig);
            QVector col = st.basis.column(j);
            for (std::size_t k = 0; k < dim; ++k)
                if (!col[k].is_zero()) f.add_term(mon_basis[k], col[k]);
            // Scale so the leading coefficient is 1.
            entry.basis.push_back(f.scaled(Rational(1) / f.leading_coefficient()));
        }
        out.entries.push_back(std::move(entry));
    }
    std::sort(out.entries.begin(), out.entries.end(),
              [](const SemiInvariantEntry& a, const SemiInvariantEntry& b) {
                  return a.character < b.character;
              });
    return out;
}

std::optional<PnormWitness> pnorm_crosscheck(const LieAlgebra& l, int d) {
    SemiInvariantSpace space = semi_invariants(l, d);
    const PoissonAlgebra& alg = l.algebra();
    for (const auto& entry : space.entries) {
        for (const auto& f : entry.basis) {
            auto w = is_poisson_normal(alg, f);
            if (!w) return PnormWitness{f, "semi-invariant is not Poisson normal"};
            for (std::size_t i = 0; i < alg.n_vars(); ++i) {
                Polynomial expected =
                    Polynomial::constant(alg.signature(), entry.character.values[i]);
                if (!(w->image(i) == expected))
                    return PnormWitness{f, "weight image at " + alg.signature()->name(i) +
                                               " is " + render_polynomial(w->image(i)) +
                                               ", expected " + render_polynomial(expected)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace psc
