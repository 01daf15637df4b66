#pragma once

#include <optional>
#include <vector>

#include "psc/linalg.hpp"
#include "psc/poisson.hpp"

namespace psc {

// A finite-dimensional Lie algebra presented through the Poisson
// structure it induces on its symmetric algebra: a bracket matrix all
// of whose entries are homogeneous linear polynomials. The Lie Jacobi
// identity is equivalent to the Poisson one on generator triples.
class LieAlgebra {
public:
    // Requires every bracket entry homogeneous linear and the algebra
    // Jacobi-verified; reports the first offending generator pair.
    static LieAlgebra from_brackets(const PoissonAlgebra& a);

    const PoissonAlgebra& algebra() const { return algebra_; }
    std::size_t dimension() const { return algebra_.n_vars(); }

    // Coordinates of [x_i, x_j] in the basis x_1..x_n.
    QVector bracket_vector(std::size_t i, std::size_t j) const;

private:
    explicit LieAlgebra(PoissonAlgebra a) : algebra_(std::move(a)) {}
    PoissonAlgebra algebra_;
};

// Reduced (row echelon) basis of the span of all [x_i, x_j].
std::vector<QVector> derived_subalgebra(const LieAlgebra& l);

// Monomials of total degree d over n variables, grlex-descending: the
// canonical basis of the degree-d component of the symmetric algebra.
std::vector<Monomial> degree_basis(std::size_t n_vars, int d);

// Matrix of f -> {v, f} on that basis; the image of S^d stays in S^d
// because the bracket entries are linear.
QMatrix ad_action_matrix(const LieAlgebra& l, const QVector& v, int d);

// A linear functional on the Lie algebra, by its values on the basis.
// Characters of semi-invariants vanish on the derived subalgebra.
struct Character {
    QVector values;

    bool is_zero() const;
    friend bool operator==(const Character& a, const Character& b) { return a.values == b.values; }
    friend bool operator<(const Character& a, const Character& b) { return a.values < b.values; }
};

struct SemiInvariantEntry {
    Character character;
    std::vector<Polynomial> basis;  // linearly independent eigenvectors in S^d
};

// A subspace on which some restricted ad operator has no rational
// eigenbasis; reported rather than silently dropped.
struct UnsplitSubspace {
    QVector partial_values;          // eigenvalues fixed on the completion
                                     // generators processed so far
    std::size_t blocking_generator;  // basis index whose ad operator failed to split
    std::size_t dimension;
};

struct SemiInvariantSpace {
    int degree;
    std::vector<SemiInvariantEntry> entries;  // distinct characters, deterministic order
    std::vector<UnsplitSubspace> unsplit;
};

// Semi-invariants of degree d: the joint kernel of ad(z) for z running
// over a basis of [g,g], split into simultaneous rational eigenspaces
// of ad(x) for the basis vectors x completing [g,g] to a basis of g, in
// input order.
SemiInvariantSpace semi_invariants(const LieAlgebra& l, int d);

struct PnormWitness {
    Polynomial element;
    std::string reason;
};

// Cross-check: every computed semi-invariant is Poisson normal in S(g)
// and its weight derivation has constant images equal to the character.
std::optional<PnormWitness> pnorm_crosscheck(const LieAlgebra& l, int d);

}  // namespace psc
