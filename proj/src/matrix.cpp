#include "mhahn/matrix.hpp"

#include <cstdlib>
#include <utility>

namespace mhahn {

RMatrix RMatrix::identity(std::size_t dim) {
    RMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

RMatrix RMatrix::diagonal(const std::vector<Rational>& entries) {
    RMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

RMatrix RMatrix::scalar(std::size_t dim, const Rational& value) {
    RMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = value;
    return m;
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
    if (dim_ != o.dim_) throw Error("matrix dimension mismatch in +");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
    return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
    if (dim_ != o.dim_) throw Error("matrix dimension mismatch in -");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
    return *this;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
    if (a.dim_ != b.dim_) throw Error("matrix dimension mismatch in *");
    const std::size_t n = a.dim_;
    RMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const Rational& bkj = b(k, j);
                if (!bkj.is_zero()) c(i, j) += aik * bkj;
            }
        }
    return c;
}

RMatrix operator*(const Rational& c, RMatrix m) {
    for (auto& x : m.e_) x *= c;
    return m;
}

bool RMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<Rational> RMatrix::as_scalar() const {
    if (dim_ == 0) return Rational(0);
    const Rational c = (*this)(0, 0);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j ? ((*this)(i, j) != c) : !(*this)(i, j).is_zero())
                return std::nullopt;
        }
    return c;
}

RMatrix RMatrix::transpose() const {
    RMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Rational RMatrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

std::vector<Rational> RMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != dim_) throw Error("vector length mismatch in apply");
    std::vector<Rational> r(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
}

std::size_t RMatrix::bandwidth() const {
    std::size_t b = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            if (!(*this)(i, j).is_zero()) {
                std::size_t d = i > j ? i - j : j - i;
                if (d > b) b = d;
            }
    return b;
}

RMatrix RMatrix::principal_submatrix(std::size_t k) const {
    if (k > dim_) throw Error("principal submatrix larger than matrix");
    RMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = (*this)(i, j);
    return m;
}

RMatrix RMatrix::inverse() const {
    const std::size_t n = dim_;
    RMatrix a(*this), inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw SingularMatrix("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            const Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational RMatrix::determinant() const {
    const std::size_t n = dim_;
    RMatrix a(*this);
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        const Rational p = a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            const Rational f = a(i, col) / p;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

namespace {

// Reduced row echelon form in place; returns pivot column per row used.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        const Rational p = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rational>> kernel_basis(const std::vector<std::vector<Rational>>& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    auto m = a;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolveResult solve_linear(const std::vector<std::vector<Rational>>& a,
                               const std::vector<Rational>& b) {
    LinearSolveResult res;
    if (a.size() != b.size()) throw Error("solve_linear shape mismatch");
    if (a.empty()) {
        res.consistent = true;
        return res;
    }
    const std::size_t cols = a[0].size();
    auto m = a;
    for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    auto pivots = rref(m);
    // A pivot in the appended column marks inconsistency.
    if (!pivots.empty() && pivots.back() == cols) {
        res.consistent = false;
        return res;
    }
    res.consistent = true;
    res.particular.assign(cols, Rational(0));
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        is_pivot[pivots[r]] = true;
        res.particular[pivots[r]] = m[r][cols];
    }
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(cols);
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m[r][free_col];
        res.kernel.push_back(std::move(v));
    }
    return res;
}

std::vector<std::vector<Rational>> RMatrix::nullspace() const {
    std::vector<std::vector<Rational>> rows(dim_, std::vector<Rational>(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) rows[i][j] = (*this)(i, j);
    return kernel_basis(rows);
}

std::vector<Rational> RMatrix::char_poly() const {
    const std::size_t n = dim_;
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    if (n == 0) return c;
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr M_1,
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k.
    RMatrix m = *this;
    c[n - 1] = -m.trace();
    for (std::size_t k = 2; k <= n; ++k) {
        RMatrix shifted = m;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
        m = (*this) * shifted;
        c[n - k] = -(m.trace() / Rational(static_cast<long>(k)));
    }
    return c;
}

std::vector<Rational> poly_from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> p{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> q(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= r * p[i];
        }
        p = std::move(q);
    }
    return p;
}

Rational poly_eval(const std::vector<Rational>& ascending, const Rational& x) {
    Rational v;
    for (std::size_t i = ascending.size(); i-- > 0;) v = v * x + ascending[i];
    return v;
}

} // namespace mhahn

namespace mhahn {

bool spectrum_equals(const RMatrix& a, const std::vector<Rational>& roots) {
    return a.dim() == roots.size() && a.char_poly() == poly_from_roots(roots);
}

} // namespace mhahn
