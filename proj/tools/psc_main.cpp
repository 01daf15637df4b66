// Command line driver for the Poisson semicentre kernel.
//
// Exit codes: 0 the property holds / the value was computed,
//             1 the property fails (witness printed),
//             2 parse or usage error,
//             3 operation precondition violated.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

#include "psc/algfile.hpp"
#include "psc/casimir.hpp"
#include "psc/errors.hpp"
#include "psc/lie.hpp"
#include "psc/normality.hpp"
#include "psc/parse.hpp"
#include "psc/poisson.hpp"

using json = nlohmann::ordered_json;
using namespace psc;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct Printer {
    bool as_json = false;

    void emit(const json& doc, const std::string& text) const {
        if (as_json)
            std::cout << doc.dump(2) << "\n";
        else
            std::cout << text;
    }
};

json images_json(const PolyDerivation& d) {
    json obj = json::object();
    for (std::size_t i = 0; i < d.size(); ++i)
        obj[d.signature()->name(i)] = render_polynomial(d.image(i));
    return obj;
}

std::string images_text(const PolyDerivation& d, const std::string& indent) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i)
        out += indent + d.signature()->name(i) + " -> " + render_polynomial(d.image(i)) + "\n";
    return out;
}

PoissonAlgebra load_verified(const std::string& path) {
    AlgebraFile file = load_algebra_file_path(path);
    JacobiReport report = verify_jacobi(file.algebra);
    if (!report.passed()) {
        const auto& f = *report.failure;
        const Signature& sig = *file.algebra.signature();
        throw PreconditionError("bracket matrix fails the Jacobi identity on (" + sig.name(f.i) +
                                ", " + sig.name(f.j) + ", " + sig.name(f.k) +
                                "): residual " + render_polynomial(f.residual));
    }
    return std::move(file.algebra);
}

GpaCertificate load_certified(const std::string& path) {
    PoissonAlgebra algebra = load_verified(path);
    GpaResult result = gpa_certify(algebra);
    if (auto* failure = std::get_if<GpaFailure>(&result)) {
        std::string why;
        if (!failure->non_normal.empty())
            why = "generator " + algebra.signature()->name(failure->non_normal.front()) +
                  " is not Poisson normal";
        else
            why = "generator weights do not commute";
        throw PreconditionError("algebra is not a certified generalised Poisson affine space: " +
                                why);
    }
    return std::get<GpaCertificate>(std::move(result));
}

int cmd_jacobi(const Printer& p, const std::string& path) {
    AlgebraFile file = load_algebra_file_path(path);
    JacobiReport report = verify_jacobi(file.algebra);
    if (report.passed()) {
        p.emit({{"status", "pass"}}, "jacobi: pass\n");
        return kExitHolds;
    }
    const auto& f = *report.failure;
    const Signature& sig = *file.algebra.signature();
    json doc{{"status", "fail"},
             {"witness",
              {{"triple", {sig.name(f.i), sig.name(f.j), sig.name(f.k)}},
               {"residual", render_polynomial(f.residual)}}}};
    p.emit(doc, "jacobi: fail\nJ(" + sig.name(f.i) + ", " + sig.name(f.j) + ", " + sig.name(f.k) +
                    ") = " + render_polynomial(f.residual) + "\n");
    return kExitFails;
}

int cmd_bracket(const Printer& p, const std::string& path, const std::string& e1,
                const std::string& e2) {
    AlgebraFile file = load_algebra_file_path(path);
    const auto& sig = file.algebra.signature();
    Polynomial r = bracket(file.algebra, parse_polynomial(e1, sig), parse_polynomial(e2, sig));
    p.emit({{"status", "ok"}, {"result", render_polynomial(r)}}, render_polynomial(r) + "\n");
    return kExitHolds;
}

int cmd_normal(const Printer& p, const std::string& path, const std::string& expr) {
    PoissonAlgebra algebra = load_verified(path);
    Polynomial a = parse_polynomial(expr, algebra.signature());
    auto weight = is_poisson_normal(algebra, a);
    if (weight) {
        p.emit({{"status", "normal"}, {"weight_images", images_json(*weight)}},
               "normal: yes\nweight images:\n" + images_text(*weight, "  "));
        return kExitHolds;
    }
    // First generator whose bracket is not divisible.
    std::string witness;
    for (std::size_t i = 0; i < algebra.n_vars(); ++i)
        if (!exact_divide(bracket(algebra, algebra.generator(i), a), a)) {
            witness = algebra.signature()->name(i);
            break;
        }
    p.emit({{"status", "not_normal"}, {"witness", witness}},
           "normal: no\nbracket {" + witness + ", a} is not divisible by a\n");
    return kExitFails;
}

int cmd_awp(const Printer& p, const std::string& path) {
    PoissonAlgebra algebra = load_verified(path);
    const Signature& sig = *algebra.signature();
    GpaResult result = gpa_certify(algebra);
    if (auto* cert = std::get_if<GpaCertificate>(&result)) {
        json weights = json::array();
        std::string text = "awp: pass\n";
        for (std::size_t i = 0; i < sig.size(); ++i) {
            weights.push_back({{"generator", sig.name(i)},
                               {"weight_images", images_json(cert->generator_weight(i))}});
            text += "weight of " + sig.name(i) + ":\n" +
                    images_text(cert->generator_weight(i), "  ");
        }
        p.emit({{"status", "pass"}, {"weights", weights}}, text);
        return kExitHolds;
    }
    const auto& failure = std::get<GpaFailure>(result);
    json non_normal = json::array();
    std::string text = "awp: fail\n";
    for (std::size_t i : failure.non_normal) {
        non_normal.push_back(sig.name(i));
        text += "generator " + sig.name(i) + " is not Poisson normal\n";
    }
    json non_commuting = json::array();
    for (const auto& pair : failure.non_commuting) {
        non_commuting.push_back({{"pair", {sig.name(pair.i), sig.name(pair.j)}},
                                 {"images", images_json(pair.image)}});
        text += "commutator of weights (" + sig.name(pair.i) + ", " + sig.name(pair.j) +
                ") is nonzero:\n" + images_text(pair.image, "  ");
    }
    p.emit({{"status", "fail"},
            {"witness", {{"non_normal", non_normal}, {"non_commuting", non_commuting}}}},
           text);
    return kExitFails;
}

int cmd_decompose(const Printer& p, const std::string& path, const std::string& expr) {
    GpaCertificate cert = load_certified(path);
    Polynomial f = parse_polynomial(expr, cert.algebra().signature());
    WeightDecomposition dec = weight_decompose(cert, f);
    json components = json::array();
    std::string text = "components: " + std::to_string(dec.components.size()) + "\n";
    for (std::size_t k = 0; k < dec.components.size(); ++k) {
        const auto& c = dec.components[k];
        components.push_back(
            {{"weight_images", images_json(c.weight)}, {"part", render_polynomial(c.part)}});
        text += "component " + std::to_string(k + 1) + ":\n  part: " + render_polynomial(c.part) +
                "\n  weight:\n" + images_text(c.weight, "    ");
    }
    p.emit({{"status", "ok"}, {"components", components}}, text);
    return kExitHolds;
}

int cmd_homog(const Printer& p, const std::string& path, const std::string& expr) {
    GpaCertificate cert = load_certified(path);
    Polynomial a = parse_polynomial(expr, cert.algebra().signature());
    HomogenizationResult result = extract_homogeneous(cert, a);
    json trace = json::array();
    std::string text = "result: " + render_polynomial(result.element) + "\nsteps: " +
                       std::to_string(result.trace.steps.size()) + "\n";
    const Signature& sig = *cert.algebra().signature();
    for (std::size_t k = 0; k < result.trace.steps.size(); ++k) {
        const auto& step = result.trace.steps[k];
        trace.push_back({{"generator", sig.name(step.generator)},
                         {"multiplier", render_polynomial(step.multiplier)}});
        text += "step " + std::to_string(k + 1) + ": generator " + sig.name(step.generator) +
                ", multiplier " + render_polynomial(step.multiplier) + "\n";
    }
    p.emit({{"status", "ok"}, {"result", render_polynomial(result.element)}, {"trace", trace}},
           text);
    return kExitHolds;
}

int cmd_casimir(const Printer& p, const std::string& path, const std::string& expr) {
    PoissonAlgebra algebra = load_verified(path);
    Polynomial f = parse_polynomial(expr, algebra.signature());
    for (std::size_t i = 0; i < algebra.n_vars(); ++i) {
        Polynomial br = bracket(algebra, algebra.generator(i), f);
        if (!br.is_zero()) {
            p.emit({{"status", "no"},
                    {"witness",
                     {{"generator", algebra.signature()->name(i)},
                      {"bracket", render_polynomial(br)}}}},
                   "casimir: no\n{" + algebra.signature()->name(i) +
                       ", f} = " + render_polynomial(br) + "\n");
            return kExitFails;
        }
    }
    p.emit({{"status", "yes"}}, "casimir: yes\n");
    return kExitHolds;
}

int cmd_casq(const Printer& p, const std::string& path, const std::string& e1,
             const std::string& e2) {
    PoissonAlgebra algebra = load_verified(path);
    Polynomial a = parse_polynomial(e1, algebra.signature());
    Polynomial b = parse_polynomial(e2, algebra.signature());
    if (a.is_zero() || b.is_zero()) throw std::domain_error("casq: zero element");
    for (std::size_t i = 0; i < algebra.n_vars(); ++i) {
        Polynomial g = algebra.generator(i);
        Polynomial residual = b * bracket(algebra, g, a) - a * bracket(algebra, g, b);
        if (!residual.is_zero()) {
            p.emit({{"status", "no"},
                    {"witness",
                     {{"generator", algebra.signature()->name(i)},
                      {"residual", render_polynomial(residual)}}}},
                   "casimir quotient: no\nresidual at " + algebra.signature()->name(i) + ": " +
                       render_polynomial(residual) + "\n");
            return kExitFails;
        }
    }
    p.emit({{"status", "yes"}}, "casimir quotient: yes\n");
    return kExitHolds;
}

int cmd_relation(const Printer& p, const std::string& path, const std::string& e1,
                 const std::string& e2, int max_degree) {
    AlgebraFile file = load_algebra_file_path(path);
    const auto& sig = file.algebra.signature();
    auto rel = algebraic_relation(parse_polynomial(e1, sig), parse_polynomial(e2, sig), max_degree);
    if (!rel) {
        p.emit({{"status", "none"}},
               "relation: none up to degree " + std::to_string(max_degree) + "\n");
        return kExitFails;
    }
    json coeffs = json::array();
    for (const auto& [ij, c] : rel->coefficients())
        coeffs.push_back({{"x_power", ij.first}, {"y_power", ij.second}, {"value", c.str()}});
    p.emit({{"status", "found"},
            {"relation",
             {{"text", rel->str()}, {"degree", rel->total_degree()}, {"coefficients", coeffs}}}},
           "relation: " + rel->str() + "\n");
    return kExitHolds;
}

int cmd_monideal(const Printer& p, const std::string& path, const std::string& expr,
                 int max_degree) {
    GpaCertificate cert = load_certified(path);
    Polynomial a = parse_polynomial(expr, cert.algebra().signature());
    auto result = monomial_in_ideal(cert, a, max_degree);
    if (!result) {
        p.emit({{"status", "inconclusive"}},
               "monomial in ideal: inconclusive up to degree " + std::to_string(max_degree) + "\n");
        return kExitFails;
    }
    const Signature& sig = *cert.algebra().signature();
    json coeffs = json::array();
    for (const auto& c : result->s) coeffs.push_back(c.str());
    json doc{{"status", "found"},
             {"base", render_monomial(result->base, sig)},
             {"power", render_polynomial(result->power)},
             {"relation",
              {{"degree", result->relation_degree},
               {"min_index", result->min_index},
               {"coefficients", coeffs}}}};
    std::string text = "monomial power in ideal: " + render_polynomial(result->power) +
                       "\nbase: " + render_monomial(result->base, sig) +
                       "\nrelation degree: " + std::to_string(result->relation_degree) +
                       ", first nonzero index: " + std::to_string(result->min_index) + "\n";
    p.emit(doc, text);
    return kExitHolds;
}

int cmd_semiinv(const Printer& p, const std::string& path, int degree) {
    PoissonAlgebra algebra = load_verified(path);
    LieAlgebra lie = LieAlgebra::from_brackets(algebra);
    SemiInvariantSpace space = semi_invariants(lie, degree);
    const Signature& sig = *algebra.signature();
    json characters = json::array();
    std::string text = "degree " + std::to_string(degree) + ": " +
                       std::to_string(space.entries.size()) + " character(s)\n";
    for (std::size_t k = 0; k < space.entries.size(); ++k) {
        const auto& entry = space.entries[k];
        json chi = json::object();
        std::string chi_text;
        for (std::size_t i = 0; i < sig.size(); ++i) {
            chi[sig.name(i)] = entry.character.values[i].str();
            chi_text += (i ? ", " : "") + sig.name(i) + " -> " + entry.character.values[i].str();
        }
        json basis = json::array();
        text += "character " + std::to_string(k + 1) + ": " + chi_text + "\n";
        for (const auto& f : entry.basis) {
            basis.push_back(render_polynomial(f));
            text += "  basis: " + render_polynomial(f) + "\n";
        }
        characters.push_back({{"character", chi}, {"basis", basis}});
    }
    json unsplit = json::array();
    for (const auto& u : space.unsplit) {
        json vals = json::array();
        for (const auto& v : u.partial_values) vals.push_back(v.str());
        unsplit.push_back({{"partial_values", vals},
                           {"blocking_generator", sig.name(u.blocking_generator)},
                           {"dimension", u.dimension}});
        text += "unsplit over the rationals: dimension " + std::to_string(u.dimension) +
                " at generator " + sig.name(u.blocking_generator) + "\n";
    }
    p.emit({{"status", "ok"}, {"characters", characters}, {"unsplit", unsplit}}, text);
    return kExitHolds;
}

int cmd_pnormcheck(const Printer& p, const std::string& path, int degree) {
    PoissonAlgebra algebra = load_verified(path);
    LieAlgebra lie = LieAlgebra::from_brackets(algebra);
    auto witness = pnorm_crosscheck(lie, degree);
    if (!witness) {
        p.emit({{"status", "pass"}}, "pnormcheck: pass\n");
        return kExitHolds;
    }
    p.emit({{"status", "fail"},
            {"witness",
             {{"element", render_polynomial(witness->element)}, {"reason", witness->reason}}}},
           "pnormcheck: fail\nelement: " + render_polynomial(witness->element) + "\nreason: " +
               witness->reason + "\n");
    return kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel for Poisson structures on (Laurent) polynomial rings: "
                 "normal elements, weights, semicentre gradings, Casimirs and "
                 "semi-invariants of Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global flag after a subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, expr1, expr2;
    int max_degree = 0, degree = 0;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "algebra definition file")->required();
    };

    CLI::App* jacobi = app.add_subcommand("jacobi", "verify the Jacobi identity");
    add_file(jacobi);

    CLI::App* br = app.add_subcommand("bracket", "Poisson bracket of two expressions");
    add_file(br);
    br->add_option("expr1", expr1)->required();
    br->add_option("expr2", expr2)->required();

    CLI::App* normal = app.add_subcommand("normal", "test Poisson normality, report the weight");
    add_file(normal);
    normal->add_option("expr", expr1)->required();

    CLI::App* awp = app.add_subcommand("awp", "certify the abelian weight property");
    add_file(awp);

    CLI::App* decompose = app.add_subcommand("decompose", "weight space decomposition");
    add_file(decompose);
    decompose->add_option("expr", expr1)->required();

    CLI::App* homog = app.add_subcommand("homog", "extract a homogeneous ideal element");
    add_file(homog);
    homog->add_option("expr", expr1)->required();

    CLI::App* casimir = app.add_subcommand("casimir", "test Poisson centrality");
    add_file(casimir);
    casimir->add_option("expr", expr1)->required();

    CLI::App* casq = app.add_subcommand("casq", "test a quotient for rational Casimir");
    add_file(casq);
    casq->add_option("expr1", expr1)->required();
    casq->add_option("expr2", expr2)->required();

    CLI::App* relation = app.add_subcommand("relation", "search for an algebraic relation");
    add_file(relation);
    relation->add_option("expr1", expr1)->required();
    relation->add_option("expr2", expr2)->required();
    relation->add_option("--max-degree", max_degree, "relation degree bound")->required();

    CLI::App* monideal =
        app.add_subcommand("monideal", "monomial power inside a principal Poisson ideal");
    add_file(monideal);
    monideal->add_option("expr", expr1)->required();
    monideal->add_option("--max-degree", max_degree, "relation degree bound")->required();

    CLI::App* semiinv = app.add_subcommand("semiinv", "semi-invariants of a Lie algebra");
    add_file(semiinv);
    semiinv->add_option("--degree", degree, "symmetric power")->required();

    CLI::App* pnormcheck =
        app.add_subcommand("pnormcheck", "cross-check semi-invariants against normality");
    add_file(pnormcheck);
    pnormcheck->add_option("--degree", degree, "symmetric power")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    Printer printer{as_json};
    try {
        if (jacobi->parsed()) return cmd_jacobi(printer, file);
        if (br->parsed()) return cmd_bracket(printer, file, expr1, expr2);
        if (normal->parsed()) return cmd_normal(printer, file, expr1);
        if (awp->parsed()) return cmd_awp(printer, file);
        if (decompose->parsed()) return cmd_decompose(printer, file, expr1);
        if (homog->parsed()) return cmd_homog(printer, file, expr1);
        if (casimir->parsed()) return cmd_casimir(printer, file, expr1);
        if (casq->parsed()) return cmd_casq(printer, file, expr1, expr2);
        if (relation->parsed()) return cmd_relation(printer, file, expr1, expr2, max_degree);
        if (monideal->parsed()) return cmd_monideal(printer, file, expr1, max_degree);
        if (semiinv->parsed()) return cmd_semiinv(printer, file, degree);
        if (pnormcheck->parsed()) return cmd_pnormcheck(printer, file, degree);
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const FileFormatError& e) {
        std::cerr << "error: line " << e.line() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: position " << e.position() << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
