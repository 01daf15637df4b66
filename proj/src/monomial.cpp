#include "psc/monomial.hpp"

#include <cassert>
#include <numeric>

namespace psc {

int Monomial::total_degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0);
}

bool Monomial::is_unit() const {
    for (int e : exp_)
        if (e != 0) return false;
    return true;
}

Monomial Monomial::times(const Monomial& o) const {
    assert(exp_.size() == o.exp_.size());
    std::vector<int> r(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) r[i] = exp_[i] + o.exp_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::divided_by(const Monomial& o) const {
    assert(exp_.size() == o.exp_.size());
    std::vector<int> r(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) r[i] = exp_[i] - o.exp_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::pow(int k) const {
    std::vector<int> r(exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i) r[i] = exp_[i] * k;
    return Monomial(std::move(r));
}

bool Monomial::divisible_by(const Monomial& o) const {
    assert(exp_.size() == o.exp_.size());
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] < o.exp_[i]) return false;
    return true;
}

int compare_grlex(const Monomial& a, const Monomial& b) {
    assert(a.size() == b.size());
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
    return 0;
}

}  // namespace psc
