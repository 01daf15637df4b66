#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "psc/poisson.hpp"

namespace psc {

// Tests whether the principal ideal (a) is a Poisson ideal. On success
// returns the weight derivation lambda with {b, a} = lambda(b) * a,
// given by its generator images lambda(x_i) = {x_i, a} / a. Checking on
// generators suffices by the Leibniz rule.
// Requires: a != 0 (domain error), a Jacobi-verified algebra.
std::optional<PolyDerivation> is_poisson_normal(const PoissonAlgebra& a, const Polynomial& p);

// Certificate that an algebra is presented as a generalised Poisson
// affine space: every generator is Poisson normal and the generator
// weights pairwise commute.
class GpaCertificate {
public:
    GpaCertificate(PoissonAlgebra algebra, std::vector<PolyDerivation> generator_weights)
        : algebra_(std::move(algebra)), weights_(std::move(generator_weights)) {}

    const PoissonAlgebra& algebra() const { return algebra_; }
    const PolyDerivation& generator_weight(std::size_t i) const { return weights_[i]; }
    const std::vector<PolyDerivation>& generator_weights() const { return weights_; }

private:
    PoissonAlgebra algebra_;
    std::vector<PolyDerivation> weights_;
};

struct GpaFailure {
    struct NonCommutingPair {
        std::size_t i, j;
        PolyDerivation image;  // [lambda_i, lambda_j], nonzero
    };
    std::vector<std::size_t> non_normal;          // generators that are not Poisson normal
    std::vector<NonCommutingPair> non_commuting;  // among the normal generators' weights
};

using GpaResult = std::variant<GpaCertificate, GpaFailure>;

GpaResult gpa_certify(const PoissonAlgebra& a);

// Weight of a monomial in a certified algebra: sum_i exponents[i] * lambda_i.
PolyDerivation monomial_weight(const GpaCertificate& cert, const Monomial& m);

struct WeightComponent {
    PolyDerivation weight;
    Polynomial part;  // nonzero, homogeneous of that weight
};

// Components ordered by the deterministic derivation order; they sum to
// the decomposed element.
struct WeightDecomposition {
    std::vector<WeightComponent> components;
};

WeightDecomposition weight_decompose(const GpaCertificate& cert, const Polynomial& f);

// One reduction step a <- multiplier * a - {x_i, a}.
struct HomogenizationStep {
    std::size_t generator;
    Polynomial multiplier;
};

struct HomogenizationTrace {
    std::vector<HomogenizationStep> steps;
};

struct HomogenizationResult {
    Polynomial element;  // nonzero, homogeneous, lies in the Poisson ideal (input)
    HomogenizationTrace trace;
};

// Constructive homogeneous-element extraction: while the input has more
// than one weight component, pick the first generator on which two
// weights disagree, take as multiplier the grlex-least of the values
// there, and reduce. Every step strictly shrinks the component count.
HomogenizationResult extract_homogeneous(const GpaCertificate& cert, const Polynomial& a);

// Replays a trace from `input`; reproduces the extracted element exactly.
Polynomial replay_trace(const PoissonAlgebra& algebra, Polynomial input,
                        const HomogenizationTrace& trace);

}  // namespace psc
