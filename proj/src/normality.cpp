#include "psc/normality.hpp"

#include <map>
#include <stdexcept>

#include "psc/errors.hpp"

namespace psc {

std::optional<PolyDerivation> is_poisson_normal(const PoissonAlgebra& a, const Polynomial& p) {
    a.require_jacobi_verified("is_poisson_normal");
    require_same_signature(a.signature(), p.signature(), "is_poisson_normal");
    if (p.is_zero()) throw std::domain_error("is_poisson_normal: zero element");
    std::vector<Polynomial> images;
    images.reserve(a.n_vars());
    for (std::size_t i = 0; i < a.n_vars(); ++i) {
        auto q = exact_divide(bracket(a, a.generator(i), p), p);
        if (!q) return std::nullopt;
        images.push_back(std::move(*q));
    }
    return PolyDerivation(a.signature(), std::move(images));
}

GpaResult gpa_certify(const PoissonAlgebra& a) {
    a.require_jacobi_verified("gpa_certify");
    const std::size_t n = a.n_vars();
    GpaFailure failure;
    std::vector<std::optional<PolyDerivation>> weights(n);
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = is_poisson_normal(a, a.generator(i));
        if (!weights[i]) failure.non_normal.push_back(i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!weights[i] || !weights[j]) continue;
            PolyDerivation c = commutator(*weights[i], *weights[j]);
            if (!c.is_zero())
                failure.non_commuting.push_back({i, j, std::move(c)});
        }
    if (!failure.non_normal.empty() || !failure.non_commuting.empty()) return failure;
    std::vector<PolyDerivation> ws;
    ws.reserve(n);
    for (auto& w : weights) ws.push_back(std::move(*w));
    return GpaCertificate(a, std::move(ws));
}

PolyDerivation monomial_weight(const GpaCertificate& cert, const Monomial& m) {
    const auto& sig = cert.algebra().signature();
    if (m.size() != sig->size())
        throw std::invalid_argument("monomial length does not match signature");
    PolyDerivation w = PolyDerivation::zero(sig);
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m.exponent(i) != 0) w.add_scaled(cert.generator_weight(i), Rational(m.exponent(i)));
    return w;
}

WeightDecomposition weight_decompose(const GpaCertificate& cert, const Polynomial& f) {
    require_same_signature(cert.algebra().signature(), f.signature(), "weight_decompose");
    if (f.is_zero()) throw std::domain_error("weight_decompose: zero element");
    std::map<PolyDerivation, Polynomial, DerivationLess> parts;
    for (const auto& [m, c] : f.terms()) {
        PolyDerivation w = monomial_weight(cert, m);
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(std::move(w), Polynomial::zero(f.signature())).first;
        it->second.add_term(m, c);
    }
    WeightDecomposition dec;
    dec.components.reserve(parts.size());
    for (auto& [w, p] : parts) dec.components.push_back({w, std::move(p)});
    return dec;
}

HomogenizationResult extract_homogeneous(const GpaCertificate& cert, const Polynomial& a) {
    if (a.is_zero()) throw std::domain_error("extract_homogeneous: zero element");
    const PoissonAlgebra& alg = cert.algebra();
    const std::size_t n = alg.n_vars();
    Polynomial current = a;
    HomogenizationTrace trace;
    WeightDecomposition dec = weight_decompose(cert, current);
    while (dec.components.size() > 1) {
        // First generator on which the weights are not all equal; one
        // exists because distinct derivations differ on some generator.
        std::size_t gen = n;
        for (std::size_t i = 0; i < n && gen == n; ++i) {
            const Polynomial& head = dec.components.front().weight.image(i);
            for (std::size_t k = 1; k < dec.components.size(); ++k)
                if (!(dec.components[k].weight.image(i) == head)) {
                    gen = i;
                    break;
                }
        }
        if (gen == n)
            throw std::logic_error("extract_homogeneous: distinct weights with equal images");
        // Multiplier: grlex-least among the weight values at that generator.
        const Polynomial* least = &dec.components.front().weight.image(gen);
        for (std::size_t k = 1; k < dec.components.size(); ++k) {
            const Polynomial& v = dec.components[k].weight.image(gen);
            if (compare(v, *least) < 0) least = &v;
        }
        Polynomial multiplier = *least;
        Polynomial next = current * multiplier - bracket(alg, alg.generator(gen), current);
        // Every component whose weight takes the chosen value at x_gen is
        // annihilated; the survivors land in pairwise distinct spaces.
        std::size_t annihilated = 0;
        for (const auto& comp : dec.components)
            if (comp.weight.image(gen) == multiplier) ++annihilated;
        trace.steps.push_back({gen, std::move(multiplier)});
        if (next.is_zero())
            throw std::logic_error("extract_homogeneous: reduction step annihilated the element");
        WeightDecomposition next_dec = weight_decompose(cert, next);
        if (next_dec.components.size() != dec.components.size() - annihilated)
            throw std::logic_error("extract_homogeneous: component count did not drop as expected");
        current = std::move(next);
        dec = std::move(next_dec);
    }
    return {std::move(current), std::move(trace)};
}

Polynomial replay_trace(const PoissonAlgebra& algebra, Polynomial input,
                        const HomogenizationTrace& trace) {
    for (const auto& step : trace.steps)
        input = input * step.multiplier - bracket(algebra, algebra.generator(step.generator), input);
    return input;
}

}  // namespace psc
