#include "psc/algfile.hpp"

#include <fstream>
#include <sstream>

#include "psc/errors.hpp"
#include "psc/parse.hpp"

namespace psc {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}


}  // namespace

AlgebraFile load_algebra_file(std::istream& in) {
    std::string name;
    SignaturePtr sig;
    std::vector<std::tuple<std::size_t, std::size_t, Polynomial>> entries;
    std::vector<std::vector<bool>> seen;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;
        std::istringstream is(line);
        std::string keyword;
        is >> keyword;

        if (keyword == "algebra") {
            if (!name.empty()) throw FileFormatError("duplicate 'algebra' line", lineno);
            std::string rest;
            std::getline(is, rest);
            name = strip(rest);
            if (name.empty()) throw FileFormatError("'algebra' line needs a name", lineno);
        } else if (keyword == "vars") {
            if (name.empty()) throw FileFormatError("'vars' before 'algebra'", lineno);
            if (sig) throw FileFormatError("duplicate 'vars' line", lineno);
            std::vector<std::string> names;
            std::vector<bool> inv;
            std::string w;
            while (is >> w) {
                bool invertible = w.size() > 1 && w.back() == '*';
                if (invertible) w.pop_back();
                names.push_back(w);
                inv.push_back(invertible);
            }
            if (names.empty()) throw FileFormatError("'vars' line names no variables", lineno);
            try {
                sig = Signature::make(std::move(names), std::move(inv));
            } catch (const std::invalid_argument& e) {
                throw FileFormatError(e.what(), lineno);
            }
            seen.assign(sig->size(), std::vector<bool>(sig->size(), false));
        } else if (keyword == "bracket") {
            if (!sig) throw FileFormatError("'bracket' before 'vars'", lineno);
            std::string v1, v2, eq;
            is >> v1 >> v2 >> eq;
            if (eq != "=") throw FileFormatError("expected 'bracket <v1> <v2> = <expr>'", lineno);
            auto i = sig->index_of(v1);
            auto j = sig->index_of(v2);
            if (!i) throw FileFormatError("unknown variable '" + v1 + "'", lineno);
            if (!j) throw FileFormatError("unknown variable '" + v2 + "'", lineno);
            if (*i == *j)
                throw FileFormatError("bracket of '" + v1 + "' with itself is identically zero",
                                      lineno);
            if (seen[*i][*j])
                throw FileFormatError("bracket for pair (" + v1 + ", " + v2 + ") given twice",
                                      lineno);
            seen[*i][*j] = seen[*j][*i] = true;
            std::string expr;
            std::getline(is, expr);
            Polynomial p(sig);
            try {
                p = parse_polynomial(expr, sig);
            } catch (const ParseError& e) {
                throw FileFormatError(std::string(e.what()), lineno);
            }
            if (*i < *j)
                entries.emplace_back(*i, *j, std::move(p));
            else
                entries.emplace_back(*j, *i, -p);
        } else {
            throw FileFormatError("unknown keyword '" + keyword + "'", lineno);
        }
    }
    if (name.empty()) throw FileFormatError("missing 'algebra' line", lineno ? lineno : 1);
    if (!sig) throw FileFormatError("missing 'vars' line", lineno ? lineno : 1);
    return {std::move(name), PoissonAlgebra::from_upper_entries(sig, entries)};
}

AlgebraFile load_algebra_file_path(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
    return load_algebra_file(in);
}

std::string render_algebra_file(const AlgebraFile& file) {
    const PoissonAlgebra& a = file.algebra;
    const Signature& sig = *a.signature();
    std::ostringstream os;
    os << "algebra " << file.name << "\n";
    os << "vars";
    for (std::size_t i = 0; i < sig.size(); ++i) {
        os << " " << sig.name(i);
        if (sig.invertible(i)) os << "*";
    }
    os << "\n";
    for (std::size_t i = 0; i < sig.size(); ++i)
        for (std::size_t j = i + 1; j < sig.size(); ++j)
            if (!a.bracket_entry(i, j).is_zero())
                os << "bracket " << sig.name(i) << " " << sig.name(j) << " = "
                   << render_polynomial(a.bracket_entry(i, j)) << "\n";
    return os.str();
}

}  // namespace psc
