#include "psc/poisson.hpp"

#include <stdexcept>
#include <tuple>

#include "psc/errors.hpp"

namespace psc {

PoissonAlgebra::PoissonAlgebra(SignaturePtr sig, std::vector<std::vector<Polynomial>> bracket_matrix)
    : sig_(std::move(sig)), b_(std::move(bracket_matrix)) {
    const std::size_t n = sig_->size();
    if (b_.size() != n) throw std::invalid_argument("bracket matrix has wrong row count");
    for (std::size_t i = 0; i < n; ++i) {
        if (b_[i].size() != n) throw std::invalid_argument("bracket matrix has wrong column count");
        for (std::size_t j = 0; j < n; ++j) require_same_signature(sig_, b_[i][j].signature(), "bracket matrix");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!b_[i][i].is_zero())
            throw std::invalid_argument("bracket matrix diagonal entry {" + sig_->name(i) + "," +
                                        sig_->name(i) + "} is not zero");
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(b_[i][j] + b_[j][i]).is_zero())
                throw std::invalid_argument("bracket matrix is not antisymmetric at {" +
                                            sig_->name(i) + "," + sig_->name(j) + "}");
    }
}

PoissonAlgebra PoissonAlgebra::from_upper_entries(
    SignaturePtr sig, const std::vector<std::tuple<std::size_t, std::size_t, Polynomial>>& entries) {
    const std::size_t n = sig->size();
    std::vector<std::vector<Polynomial>> b(n, std::vector<Polynomial>(n, Polynomial::zero(sig)));
    for (const auto& [i, j, p] : entries) {
        if (i >= n || j >= n || i >= j) throw std::invalid_argument("bad bracket entry indices");
        b[i][j] = p;
        b[j][i] = -p;
    }
    return PoissonAlgebra(std::move(sig), std::move(b));
}

void PoissonAlgebra::require_jacobi_verified(const char* op) const {
    if (!jacobi_verified_)
        throw PreconditionError(std::string(op) + ": algebra is not Jacobi-verified");
}

Polynomial bracket(const PoissonAlgebra& a, const Polynomial& f, const Polynomial& g) {
    require_same_signature(a.signature(), f.signature(), "bracket");
    require_same_signature(a.signature(), g.signature(), "bracket");
    const std::size_t n = a.n_vars();
    std::vector<Polynomial> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    Polynomial r(a.signature());
    for (std::size_t i = 0; i < n; ++i) {
        if (df[i].is_zero() && dg[i].is_zero()) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Polynomial& bij = a.bracket_entry(i, j);
            if (bij.is_zero()) continue;
            r += (df[i] * dg[j] - df[j] * dg[i]) * bij;
        }
    }
    return r;
}

JacobiReport verify_jacobi(PoissonAlgebra& a) {
    const std::size_t n = a.n_vars();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Polynomial residual = bracket(a, a.generator(i), a.bracket_entry(j, k));
                residual += bracket(a, a.generator(j), a.bracket_entry(k, i));
                residual += bracket(a, a.generator(k), a.bracket_entry(i, j));
                if (!residual.is_zero()) return {JacobiFailure{i, j, k, std::move(residual)}};
            }
    a.jacobi_verified_ = true;
    return {std::nullopt};
}

PolyDerivation::PolyDerivation(SignaturePtr sig, std::vector<Polynomial> images)
    : sig_(std::move(sig)), images_(std::move(images)) {
    if (images_.size() != sig_->size())
        throw std::invalid_argument("derivation image count does not match signature");
    for (const auto& p : images_) require_same_signature(sig_, p.signature(), "derivation");
}

PolyDerivation PolyDerivation::zero(SignaturePtr sig) {
    std::vector<Polynomial> images(sig->size(), Polynomial::zero(sig));
    return PolyDerivation(std::move(sig), std::move(images));
}

bool PolyDerivation::is_zero() const {
    for (const auto& p : images_)
        if (!p.is_zero()) return false;
    return true;
}

PolyDerivation& PolyDerivation::add_scaled(const PolyDerivation& o, const Rational& c) {
    require_same_signature(sig_, o.sig_, "derivation sum");
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += o.images_[i].scaled(c);
    return *this;
}

int compare(const PolyDerivation& a, const PolyDerivation& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = compare(a.image(i), b.image(i));
        if (c != 0) return c;
    }
    return 0;
}

Polynomial apply_derivation(const PolyDerivation& d, const Polynomial& f) {
    require_same_signature(d.signature(), f.signature(), "apply_derivation");
    Polynomial r(f.signature());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.image(i).is_zero()) continue;
        r += f.derivative(i) * d.image(i);
    }
    return r;
}

PolyDerivation commutator(const PolyDerivation& d1, const PolyDerivation& d2) {
    require_same_signature(d1.signature(), d2.signature(), "commutator");
    std::vector<Polynomial> images;
    images.reserve(d1.size());
    for (std::size_t i = 0; i < d1.size(); ++i)
        images.push_back(apply_derivation(d1, d2.image(i)) - apply_derivation(d2, d1.image(i)));
    return PolyDerivation(d1.signature(), std::move(images));
}

}  // namespace psc
