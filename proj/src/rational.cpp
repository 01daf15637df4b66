#include "psc/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "psc/errors.hpp"

namespace psc {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(Integer num, Integer den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(std::move(num)) / mpq_class(std::move(den));
}

Rational Rational::from_string(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + text + "'");
    if (sgn(v.get_den()) == 0) throw std::domain_error("rational with zero denominator");
    v.canonicalize();
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace psc
