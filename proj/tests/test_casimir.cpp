#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psc/casimir.hpp"
#include "psc/errors.hpp"
#include "psc/parse.hpp"
#include "support/random_gen.hpp"

using namespace psc;
using psc::testing::Rng;

namespace {

Polynomial P(const SignaturePtr& sig, const std::string& text) {
    return parse_polynomial(text, sig);
}

PoissonAlgebra sl2_algebra() {
    SignaturePtr sig = Signature::polynomial({"h", "e", "f"});
    PoissonAlgebra a = PoissonAlgebra::from_upper_entries(
        sig, {{0, 1, P(sig, "2*e")}, {0, 2, P(sig, "-2*f")}, {1, 2, P(sig, "h")}});
    REQUIRE(verify_jacobi(a).passed());
    return a;
}

PoissonAlgebra notP_algebra() {
    SignaturePtr sig = Signature::polynomial({"x", "y", "z"});
    PoissonAlgebra a = PoissonAlgebra::from_upper_entries(
        sig, {{0, 1, P(sig, "x*y*z")}, {0, 2, P(sig, "x")}, {1, 2, P(sig, "y")}});
    REQUIRE(verify_jacobi(a).passed());
    return a;
}

PoissonAlgebra pas_xy() {
    SignaturePtr sig = Signature::polynomial({"x", "y"});
    PoissonAlgebra a = PoissonAlgebra::from_upper_entries(sig, {{0, 1, P(sig, "x*y")}});
    REQUIRE(verify_jacobi(a).passed());
    return a;
}

// {x,y} = xy, {x,z} = xz, {y,z} = 0: y and z share the weight (x, 0, 0).
PoissonAlgebra pas3() {
    SignaturePtr sig = Signature::polynomial({"x", "y", "z"});
    PoissonAlgebra a = PoissonAlgebra::from_upper_entries(
        sig, {{0, 1, P(sig, "x*y")}, {0, 2, P(sig, "x*z")}});
    REQUIRE(verify_jacobi(a).passed());
    return a;
}

// Localised desk model: Y0 invertible, {X,Y0} = Y0^2, {X,Yi} = (1+i) Y0 Yi.
PoissonAlgebra a31() {
    SignaturePtr sig = Signature::make({"Y0", "X", "Y2", "Y3"}, {true, false, false, false});
    PoissonAlgebra a = PoissonAlgebra::from_upper_entries(
        sig,
        {{0, 1, P(sig, "-Y0^2")}, {1, 2, P(sig, "3*Y0*Y2")}, {1, 3, P(sig, "4*Y0*Y3")}});
    REQUIRE(verify_jacobi(a).passed());
    return a;
}

GpaCertificate certified(const PoissonAlgebra& a) {
    GpaResult r = gpa_certify(a);
    REQUIRE(std::holds_alternative<GpaCertificate>(r));
    return std::get<GpaCertificate>(std::move(r));
}

}  // namespace

TEST_CASE("is_casimir") {
    SUBCASE("the sl2 Casimir h^2 + 4ef") {
        PoissonAlgebra a = sl2_algebra();
        const auto& sig = a.signature();
        Polynomial cas = P(sig, "h^2 + 4*e*f");
        // The bracket with every generator vanishes individually.
        CHECK(bracket(a, P(sig, "h"), cas).is_zero());
        CHECK(bracket(a, P(sig, "e"), cas).is_zero());
        CHECK(bracket(a, P(sig, "f"), cas).is_zero());
        CHECK(is_casimir(a, cas));
        CHECK_FALSE(is_casimir(a, P(sig, "h^2 + 3*e*f")));
    }
    SUBCASE("x is not central in notP") {
        PoissonAlgebra a = notP_algebra();
        CHECK_FALSE(is_casimir(a, P(a.signature(), "x")));
    }
    SUBCASE("constants are central") {
        PoissonAlgebra a = notP_algebra();
        CHECK(is_casimir(a, P(a.signature(), "5/7")));
        CHECK(is_casimir(a, P(a.signature(), "0")));
    }
}

TEST_CASE("is_casimir_quotient") {
    SUBCASE("desk model: Y2^4 / Y3^3 is a rational Casimir") {
        PoissonAlgebra a = a31();
        const auto& sig = a.signature();
        CHECK(is_casimir_quotient(a, P(sig, "Y2^4"), P(sig, "Y3^3")));
        CHECK_FALSE(is_casimir_quotient(a, P(sig, "Y2"), P(sig, "Y3")));
    }
    SUBCASE("x / y is not a rational Casimir of k[x,y]") {
        PoissonAlgebra a = pas_xy();
        const auto& sig = a.signature();
        CHECK_FALSE(is_casimir_quotient(a, P(sig, "x"), P(sig, "y")));
    }
    SUBCASE("f / f is trivially a Casimir") {
        PoissonAlgebra a = pas_xy();
        Polynomial f = P(a.signature(), "x^2 + 3*x*y");
        CHECK(is_casimir_quotient(a, f, f));
    }
    SUBCASE("zero arguments are domain errors") {
        PoissonAlgebra a = pas_xy();
        const auto& sig = a.signature();
        CHECK_THROWS_AS(is_casimir_quotient(a, P(sig, "0"), P(sig, "x")), std::domain_error);
        CHECK_THROWS_AS(is_casimir_quotient(a, P(sig, "x"), P(sig, "0")), std::domain_error);
    }
}

TEST_CASE("same_weight_normal") {
    SUBCASE("scalar multiples share their weight") {
        PoissonAlgebra a = pas_xy();
        const auto& sig = a.signature();
        CHECK(same_weight_normal(a, P(sig, "x^2"), P(sig, "5*x^2")));
        CHECK_FALSE(same_weight_normal(a, P(sig, "x"), P(sig, "y")));
    }
    SUBCASE("y and z share the weight (x, 0, 0) in pas3") {
        PoissonAlgebra a = pas3();
        const auto& sig = a.signature();
        CHECK(same_weight_normal(a, P(sig, "y"), P(sig, "z")));
        auto w = is_poisson_normal(a, P(sig, "y"));
        REQUIRE(w.has_value());
        CHECK(w->image(0) == P(sig, "x"));
        CHECK(w->image(1).is_zero());
        CHECK(w->image(2).is_zero());
    }
    SUBCASE("non-normal arguments fail") {
        PoissonAlgebra a = notP_algebra();
        const auto& sig = a.signature();
        CHECK_FALSE(same_weight_normal(a, P(sig, "z"), P(sig, "z")));
    }
}

TEST_CASE("algebraic_relation") {
    PoissonAlgebra a = pas_xy();
    const auto& sig = a.signature();
    SUBCASE("forced syzygy between x^2 and x^3") {
        auto rel = algebraic_relation(P(sig, "x^2"), P(sig, "x^3"), 3);
        REQUIRE(rel.has_value());
        CHECK(rel->total_degree() == 3);
        // Canonical form: first nonzero coefficient (in the (total
        // degree, X-power) scan) is 1, so Y^2 carries the 1.
        RelationPolynomial::CoeffMap expected{{{0, 2}, Rational(1)}, {{3, 0}, Rational(-1)}};
        CHECK(rel->coefficients() == expected);
        CHECK(rel->str() == "-X^3 + Y^2");
        CHECK(rel->substitute(P(sig, "x^2"), P(sig, "x^3")).is_zero());
    }
    SUBCASE("collinear elements have a degree-1 relation") {
        auto rel = algebraic_relation(P(sig, "2*x"), P(sig, "3*x"), 1);
        REQUIRE(rel.has_value());
        // Proportional to 3X - 2Y; the canonical scan visits Y first.
        RelationPolynomial::CoeffMap expected{{{0, 1}, Rational(1)}, {{1, 0}, Rational(-3, 2)}};
        CHECK(rel->coefficients() == expected);
        CHECK(rel->substitute(P(sig, "2*x"), P(sig, "3*x")).is_zero());
    }
    SUBCASE("independent variables have no relation up to degree 3") {
        CHECK_FALSE(algebraic_relation(P(sig, "x"), P(sig, "y"), 3).has_value());
    }
    SUBCASE("the search returns the smallest degree first") {
        // x and x admit X - Y at degree 1; D = 3 must still find degree 1.
        auto rel = algebraic_relation(P(sig, "x"), P(sig, "x"), 3);
        REQUIRE(rel.has_value());
        CHECK(rel->total_degree() == 1);
    }
}

TEST_CASE("monomial_in_ideal") {
    SUBCASE("scalar-multiple case") {
        GpaCertificate cert = certified(pas_xy());
        const auto& sig = cert.algebra().signature();
        auto result = monomial_in_ideal(cert, P(sig, "5*x^2*y"), 2);
        REQUIRE(result.has_value());
        CHECK(result->base == Monomial({2, 1}));
        CHECK(result->relation_degree == 1);
        CHECK(result->min_index == 0);
        CHECK(result->power == P(sig, "x^2*y"));
        CHECK(replay_certificate(*result, P(sig, "5*x^2*y")).is_zero());
    }
    SUBCASE("algebraically independent same-weight pair is inconclusive") {
        GpaCertificate cert = certified(pas3());
        const auto& sig = cert.algebra().signature();
        // y + z is homogeneous (y and z share a weight) but no relation
        // with its leading monomial exists: y z^-1 is a rational Casimir.
        CHECK_FALSE(monomial_in_ideal(cert, P(sig, "y + z"), 4).has_value());
    }
    SUBCASE("non-homogeneous input is a precondition error") {
        GpaCertificate cert = certified(pas_xy());
        const auto& sig = cert.algebra().signature();
        CHECK_THROWS_AS(monomial_in_ideal(cert, P(sig, "x + y"), 2), PreconditionError);
    }
    SUBCASE("binomial with a genuine relation") {
        GpaCertificate cert = certified(pas3());
        const auto& sig = cert.algebra().signature();
        // a = y^2 + y z: leading monomial y^2; a * z - y^2 * (y + z) ... the
        // certificate machinery must find some power of y^2 in (a) if one
        // exists; verify only the replay identity on success.
        auto result = monomial_in_ideal(cert, P(sig, "y^2 + y*z"), 4);
        if (result) CHECK(replay_certificate(*result, P(sig, "y^2 + y*z")).is_zero());
    }
}

TEST_CASE("same weight implies Casimir quotient, randomized") {
    Rng rng(501);
    int checked = 0;
    while (checked < 100) {
        PoissonAlgebra alg = rng.affine_space(static_cast<std::size_t>(rng.uniform(2, 4)));
        const auto& sig = alg.signature();
        Monomial m = rng.monomial(sig, 3);
        // Force a same-weight pair by scaling the same monomial.
        Polynomial a = Polynomial::monomial(sig, m, rng.nonzero_rational());
        Polynomial b = Polynomial::monomial(sig, m, rng.nonzero_rational());
        REQUIRE(same_weight_normal(alg, a, b));
        CHECK(is_casimir_quotient(alg, a, b));
        ++checked;
    }
}

TEST_CASE("Casimir quotient agrees with same-weight on monomial pairs, randomized") {
    Rng rng(502);
    int checked = 0;
    while (checked < 100) {
        PoissonAlgebra alg =
            rng.affine_space(static_cast<std::size_t>(rng.uniform(2, 4)), true);
        const auto& sig = alg.signature();
        Polynomial a = Polynomial::monomial(sig, rng.monomial(sig, 4), rng.nonzero_rational());
        Polynomial b = Polynomial::monomial(sig, rng.monomial(sig, 4), rng.nonzero_rational());
        CHECK(is_casimir_quotient(alg, a, b) == same_weight_normal(alg, a, b));
        ++checked;
    }
}

TEST_CASE("is_casimir(f) iff is_casimir_quotient(f, 1)") {
    Rng rng(503);
    PoissonAlgebra alg = notP_algebra();
    const auto& sig = alg.signature();
    Polynomial one = P(sig, "1");
    for (int rep = 0; rep < 100; ++rep) {
        Polynomial f = rng.nonzero_polynomial(sig, 4, 4);
        CHECK(is_casimir(alg, f) == is_casimir_quotient(alg, f, one));
    }
}

TEST_CASE("returned relations substitute to zero, randomized") {
    Rng rng(504);
    SignaturePtr sig = Signature::polynomial({"u", "v"});
    for (int rep = 0; rep < 40; ++rep) {
        Polynomial a = rng.nonzero_polynomial(sig, 2, 2);
        Polynomial b = rng.nonzero_polynomial(sig, 2, 2);
        auto rel = algebraic_relation(a, b, 3);
        if (rel) CHECK(rel->substitute(a, b).is_zero());
    }
}

TEST_CASE("monomial_in_ideal certificates replay exactly, randomized") {
    Rng rng(505);
    int successes = 0;
    for (int rep = 0; rep < 60; ++rep) {
        PoissonAlgebra alg = rng.affine_space(static_cast<std::size_t>(rng.uniform(2, 3)));
        GpaCertificate cert = certified(alg);
        const auto& sig = alg.signature();
        Polynomial a = Polynomial::monomial(sig, rng.monomial(sig, 3), rng.nonzero_rational());
        auto result = monomial_in_ideal(cert, a, 3);
        REQUIRE(result.has_value());  // monomials always relate to their own base
        CHECK(replay_certificate(*result, a).is_zero());
        ++successes;
    }
    CHECK(successes == 60);
}
