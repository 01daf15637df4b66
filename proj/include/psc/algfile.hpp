#pragma once

#include <iosfwd>
#include <string>

#include "psc/poisson.hpp"

namespace psc {

// A parsed algebra definition:
//
//   # comment
//   algebra <name>
//   vars x y* z          (a trailing '*' marks the variable invertible)
//   bracket x y = x*y*z  (unlisted pairs default to 0)
//
// Each unordered generator pair may appear at most once. The loaded
// algebra is not yet Jacobi-verified.
struct AlgebraFile {
    std::string name;
    PoissonAlgebra algebra;
};

AlgebraFile load_algebra_file(std::istream& in);
AlgebraFile load_algebra_file_path(const std::string& path);

// Canonical rendering: vars in signature order, one bracket line per
// nonzero upper-triangle entry. Reloading reproduces the algebra.
std::string render_algebra_file(const AlgebraFile& file);

}  // namespace psc
