#include "psc/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace psc {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

QVector QMatrix::column(std::size_t j) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

QVector QMatrix::row(std::size_t i) const {
    QVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    QMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return r;
}

QVector QMatrix::apply(const QVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    QVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix difference shape mismatch");
    QMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Rational QMatrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

QMatrix QMatrix::stacked(const QMatrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("stack shape mismatch");
    QMatrix r(rows_ + o.rows_, cols_);
    r.a_ = a_;
    r.a_.insert(r.a_.end(), o.a_.begin(), o.a_.end());
    return r;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols) {
    if (cols.empty()) throw std::invalid_argument("from_columns: no columns");
    QMatrix r(cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != r.rows()) throw std::invalid_argument("from_columns: ragged columns");
        for (std::size_t i = 0; i < r.rows(); ++i) r.at(i, j) = cols[j][i];
    }
    return r;
}

namespace {

// Row echelon form of the row-wise integerised matrix, by Bareiss
// one-step fraction-free elimination. Returns the echelon matrix (over
// the integers) together with the pivot column of each pivot row.
struct IntEchelon {
    std::vector<std::vector<Integer>> m;
    std::vector<std::size_t> pivot_cols;
};

IntEchelon integer_echelon(const QMatrix& q) {
    const std::size_t rows = q.rows(), cols = q.cols();
    std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer lcm = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            Integer den = q.at(i, j).denominator();
            lcm = lcm / gcd(lcm, den) * den;
        }
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = q.at(i, j).numerator() * (lcm / q.at(i, j).denominator());
    }

    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m[p][c]) == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        const Integer pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = m[i][j] * pivot - m[i][c] * m[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][c] = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::vector<QVector> kernel_basis(const QMatrix& q) {
    const std::size_t cols = q.cols();
    IntEchelon ech = integer_echelon(q);
    const auto& pivots = ech.pivot_cols;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<QVector> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        QVector x(cols);
        x[fc] = Rational(1);
        for (std::size_t rr = pivots.size(); rr-- > 0;) {
            std::size_t pc = pivots[rr];
            Rational acc;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (sgn(ech.m[rr][j]) == 0 || x[j].is_zero()) continue;
                acc += Rational(ech.m[rr][j], Integer(1)) * x[j];
            }
            x[pc] = -acc / Rational(ech.m[rr][pc], Integer(1));
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

Rref rref(QMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m.at(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        Rational inv = Rational(1) / m.at(r, c);
        for (std::size_t j = c; j < cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Rational f = m.at(i, c);
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const QMatrix& m) { return integer_echelon(m).pivot_cols.size(); }

std::optional<QVector> solve_consistent(const QMatrix& b, const QVector& y) {
    if (y.size() != b.rows()) throw std::invalid_argument("solve shape mismatch");
    QMatrix aug(b.rows(), b.cols() + 1);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, j) = b.at(i, j);
        aug.at(i, b.cols()) = y[i];
    }
    Rref r = rref(std::move(aug));
    QVector x(b.cols());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
        if (r.pivot_cols[k] == b.cols()) return std::nullopt;  // inconsistent
        x[r.pivot_cols[k]] = r.mat.at(k, b.cols());
    }
    return x;
}

std::vector<Rational> char_poly(const QMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    QMatrix b = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        b = m * b;
        Rational a = -(b.trace() / Rational(static_cast<long>(k)));
        c[n - k] = a;
        for (std::size_t i = 0; i < n; ++i) b.at(i, i) += a;
    }
    return c;
}

namespace {

Integer isqrt(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Integer p(r) by Horner.
Integer eval_int(const std::vector<Integer>& p, const Integer& r) {
    Integer acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * r + p[i];
    return acc;
}

// Exact synthetic division of p by (t - r); p(r) must be zero.
std::vector<Integer> deflate(const std::vector<Integer>& p, const Integer& r) {
    std::vector<Integer> q(p.size() - 1);
    Integer carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * r;
    }
    return q;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots_monic(const std::vector<Rational>& coeffs) {
    if (coeffs.empty() || !coeffs.back().is_one())
        throw std::invalid_argument("rational_roots_monic: polynomial is not monic");
    const std::size_t deg = coeffs.size() - 1;
    std::vector<std::pair<Rational, int>> roots;
    if (deg == 0) return roots;

    // Substitute t = s / D with D the common denominator: the result is
    // a monic integer polynomial in s whose integer roots are D * t.
    Integer d = 1;
    for (const auto& c : coeffs) {
        Integer den = c.denominator();
        d = d / gcd(d, den) * den;
    }
    std::vector<Integer> p(deg + 1);
    Integer dpow = 1;
    for (std::size_t i = deg + 1; i-- > 0;) {
        Rational scaled = coeffs[i] * Rational(dpow, Integer(1));
        p[i] = scaled.numerator();  // exact: dpow clears the denominator
        dpow *= d;
    }

    // Roots at zero.
    int zero_mult = 0;
    while (p.size() > 1 && sgn(p.front()) == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);

    if (p.size() > 1) {
        // Any integer root divides the constant term and obeys the
        // Cauchy bound 1 + max |coefficient| for a monic polynomial.
        Integer bound = 1;
        for (const auto& c : p) {
            Integer a = abs(c);
            if (a > bound) bound = a;
        }
        bound += 1;

        Integer n = abs(p.front());
        std::vector<Integer> primes;
        std::vector<int> mult;
        Integer limit = std::min(isqrt(n), bound);
        for (Integer f = 2; f <= limit; ++f) {
            if (n % f == 0) {
                primes.push_back(f);
                mult.push_back(0);
                while (n % f == 0) {
                    n /= f;
                    ++mult.back();
                }
                limit = std::min(isqrt(n), bound);
            }
        }
        if (n > 1 && n <= bound) {
            primes.push_back(n);
            mult.push_back(1);
        }

        std::vector<Integer> divisors{1};
        for (std::size_t i = 0; i < primes.size(); ++i) {
            std::size_t count = divisors.size();
            Integer pw = 1;
            for (int e = 1; e <= mult[i]; ++e) {
                pw *= primes[i];
                for (std::size_t k = 0; k < count; ++k) {
                    Integer v = divisors[k] * pw;
                    if (v <= bound) divisors.push_back(v);
                }
            }
        }
        std::sort(divisors.begin(), divisors.end());

        for (const Integer& v : divisors) {
            for (Integer cand : {v, Integer(-v)}) {
                int k = 0;
                while (p.size() > 1 && sgn(eval_int(p, cand)) == 0) {
                    p = deflate(p, cand);
                    ++k;
                }
                if (k > 0) roots.emplace_back(Rational(cand, d), k);
            }
        }
    }

    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

}  // namespace psc
