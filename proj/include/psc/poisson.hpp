#pragma once

#include <optional>
#include <vector>

#include "psc/polynomial.hpp"

namespace psc {

// A Poisson structure presented on a (Laurent) polynomial signature by
// its bracket matrix B[i][j] = {x_i, x_j}. Antisymmetry and a zero
// diagonal are checked at construction; the Jacobi identity is checked
// separately by verify_jacobi, which sets the jacobi_verified flag.
class PoissonAlgebra {
public:
    PoissonAlgebra(SignaturePtr sig, std::vector<std::vector<Polynomial>> bracket_matrix);

    // Builds the full matrix from entries {x_i, x_j} with i < j;
    // missing pairs default to zero.
    static PoissonAlgebra from_upper_entries(
        SignaturePtr sig, const std::vector<std::tuple<std::size_t, std::size_t, Polynomial>>& entries);

    const SignaturePtr& signature() const { return sig_; }
    std::size_t n_vars() const { return sig_->size(); }
    const Polynomial& bracket_entry(std::size_t i, std::size_t j) const { return b_[i][j]; }
    Polynomial generator(std::size_t i) const { return Polynomial::variable(sig_, i); }

    bool jacobi_verified() const { return jacobi_verified_; }
    void require_jacobi_verified(const char* op) const;

private:
    SignaturePtr sig_;
    std::vector<std::vector<Polynomial>> b_;
    bool jacobi_verified_ = false;

    friend struct JacobiReport verify_jacobi(PoissonAlgebra& a);
};

// {f, g} = sum_{i,j} (df/dx_i)(dg/dx_j) {x_i, x_j}.
Polynomial bracket(const PoissonAlgebra& a, const Polynomial& f, const Polynomial& g);

struct JacobiFailure {
    std::size_t i, j, k;  // witness generator triple
    Polynomial residual;  // cyclic sum {x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}
};

struct JacobiReport {
    std::optional<JacobiFailure> failure;
    bool passed() const { return !failure.has_value(); }
};

// Checks the Jacobi identity on all generator triples i < j < k; a pass
// marks the algebra jacobi_verified. The extension to arbitrary triples
// is a property of the biderivation formula, exercised by tests.
JacobiReport verify_jacobi(PoissonAlgebra& a);

// A k-derivation of the algebra, represented extensionally by its images
// on the generators. Two derivations are equal iff their images agree.
class PolyDerivation {
public:
    PolyDerivation(SignaturePtr sig, std::vector<Polynomial> images);
    static PolyDerivation zero(SignaturePtr sig);

    const SignaturePtr& signature() const { return sig_; }
    std::size_t size() const { return images_.size(); }
    const Polynomial& image(std::size_t i) const { return images_[i]; }
    bool is_zero() const;

    PolyDerivation& add_scaled(const PolyDerivation& o, const Rational& c);

    friend bool operator==(const PolyDerivation& a, const PolyDerivation& b) {
        return *a.sig_ == *b.sig_ && a.images_ == b.images_;
    }

private:
    SignaturePtr sig_;
    std::vector<Polynomial> images_;
};

// Lexicographic order on image vectors; deterministic grouping key.
int compare(const PolyDerivation& a, const PolyDerivation& b);

struct DerivationLess {
    bool operator()(const PolyDerivation& a, const PolyDerivation& b) const {
        return compare(a, b) < 0;
    }
};

// Leibniz extension of the generator images: D(f) = sum_i (df/dx_i) D(x_i).
Polynomial apply_derivation(const PolyDerivation& d, const Polynomial& f);

// [D1, D2] as a derivation, via images [D1,D2](x_i) = D1(D2(x_i)) - D2(D1(x_i)).
PolyDerivation commutator(const PolyDerivation& d1, const PolyDerivation& d2);

}  // namespace psc
