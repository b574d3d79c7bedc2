#include "cayley/matrix.hpp"

#include "cayley/error.hpp"

namespace cayley {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::anti_identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    RatMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw PreconditionError("ragged initializer");
        int j = 0;
        for (const auto& x : row) m(i, j++) = x;
        ++i;
    }
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch in +");
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix shape mismatch in -");
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix shape mismatch in *");
    RatMatrix m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (b != 0) m(i, j) += a * b;
            }
        }
    return m;
}

RatMatrix RatMatrix::operator*(const Rational& s) const {
    RatMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
    return m;
}

RatMatrix RatMatrix::operator-() const { return *this * Rational(-1); }

RatMatrix RatMatrix::transpose() const {
    RatMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Rational RatMatrix::trace() const {
    Rational t = 0;
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (x != 0) return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

RatVector RatMatrix::col(int j) const {
    RatVector v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatVector RatMatrix::row(int i) const {
    RatVector v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

void RatMatrix::set_col(int j, const RatVector& v) {
    if (static_cast<int>(v.size()) != rows_) throw PreconditionError("set_col size mismatch");
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

RatVector RatMatrix::vectorize() const { return e_; }

RatMatrix RatMatrix::from_vector(const RatVector& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols)
        throw PreconditionError("from_vector size mismatch");
    RatMatrix m(rows, cols);
    m.e_ = v;
    return m;
}

RatMatrix RatMatrix::hstack(const RatMatrix& right) const {
    if (rows_ != right.rows_) throw PreconditionError("hstack row mismatch");
    RatMatrix m(rows_, cols_ + right.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (int j = 0; j < right.cols_; ++j) m(i, cols_ + j) = right(i, j);
    }
    return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& below) const {
    if (cols_ != below.cols_) throw PreconditionError("vstack column mismatch");
    RatMatrix m(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(rows_ + i, j) = below(i, j);
    return m;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
    if (m.cols() != static_cast<int>(v.size())) throw PreconditionError("mat*vec shape mismatch");
    RatVector r(m.rows(), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && v[j] != 0) r[i] += m(i, j) * v[j];
    return r;
}

RatVector operator+(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw PreconditionError("vector size mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVector operator-(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw PreconditionError("vector size mismatch");
    RatVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVector operator*(const Rational& s, const RatVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

bool is_zero(const RatVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw PreconditionError("dot size mismatch");
    Rational r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

RatVector unit_vector(int n, int i) {
    RatVector v(n, Rational(0));
    v[i] = 1;
    return v;
}

RrefResult rref(const RatMatrix& m) {
    RatMatrix w = m;
    const int rows = w.rows(), cols = w.cols();
    std::vector<int> pivots;
    int r = 0;
    Rational prev = 1;
    // Fraction-free forward pass. After step k the surviving entries are
    // (up to sign) minors of the original matrix, so the division by the
    // previous pivot is exact even before reduction to lowest terms.
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (w(i, c) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols; ++j) std::swap(w(r, j), w(pr, j));
        const Rational p = w(r, c);
        for (int i = r + 1; i < rows; ++i) {
            const Rational f = w(i, c);
            for (int j = c; j < cols; ++j) w(i, j) = (w(i, j) * p - f * w(r, j)) / prev;
        }
        prev = p;
        pivots.push_back(c);
        ++r;
    }
    // Normalize pivots to 1, then eliminate above.
    for (int k = 0; k < r; ++k) {
        const Rational p = w(k, pivots[k]);
        for (int j = pivots[k]; j < cols; ++j) w(k, j) /= p;
    }
    for (int k = r - 1; k >= 0; --k) {
        const int c = pivots[k];
        for (int i = 0; i < k; ++i) {
            const Rational f = w(i, c);
            if (f == 0) continue;
            for (int j = c; j < cols; ++j) w(i, j) -= f * w(k, j);
        }
    }
    return {w, r, pivots};
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("det: matrix not square");
    const int n = m.rows();
    if (n == 0) return 1;
    RatMatrix w = m;
    Rational prev = 1;
    int sign = 1;
    for (int k = 0; k < n; ++k) {
        int pr = -1;
        for (int i = k; i < n; ++i)
            if (w(i, k) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != k) {
            for (int j = 0; j < n; ++j) std::swap(w(k, j), w(pr, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
        prev = w(k, k);
    }
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse: matrix not square");
    const int n = m.rows();
    auto res = rref(m.hstack(RatMatrix::identity(n)));
    // Invertible iff every pivot lands in the left block, i.e. columns 0..n-1.
    if (res.rank < n || res.pivots[n - 1] != n - 1)
        throw PreconditionError("inverse: singular matrix");
    RatMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = res.r(i, n + j);
    return inv;
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b) {
    if (m.rows() != static_cast<int>(b.size())) throw PreconditionError("solve shape mismatch");
    RatMatrix rhs(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) rhs(i, 0) = b[i];
    auto res = rref(m.hstack(rhs));
    for (int k = 0; k < res.rank; ++k)
        if (res.pivots[k] == m.cols()) return std::nullopt;  // pivot in the RHS column
    RatVector x(m.cols(), Rational(0));
    for (int k = 0; k < res.rank; ++k) x[res.pivots[k]] = res.r(k, m.cols());
    return x;
}

}  // namespace cayley
