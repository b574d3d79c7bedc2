#include "cayley/poly.hpp"

#include <numeric>
#include <sstream>

#include "cayley/error.hpp"

namespace cayley {

bool GrevlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw PreconditionError("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(Exponents exp, const Rational& c) {
    MultiPoly p(static_cast<int>(exp.size()));
    p.add_term(exp, c);
    return p;
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    // Map order is graded, so the last term carries the total degree.
    const Exponents& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0);
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw PreconditionError("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("polynomial arity mismatch");
    MultiPoly r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    MultiPoly r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

MultiPoly MultiPoly::operator-() const { return *this * Rational(-1); }

MultiPoly MultiPoly::diff(int var) const {
    if (var < 0 || var >= nvars_) throw PreconditionError("variable index out of range");
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        --d[var];
        r.add_term(d, c * e[var]);
    }
    return r;
}

Rational MultiPoly::eval(const RatVector& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw PreconditionError("eval arity mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars_; ++i) t *= rat_pow(point[i], e[i]);
        total += t;
    }
    return total;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw PreconditionError("substitute expects one image per variable");
    const int out_vars = nvars_ == 0 ? 0 : images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != out_vars) throw PreconditionError("images must share one variable set");
    // Cache powers of each image up to the largest exponent that occurs.
    std::vector<int> max_exp(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], e[i]);
    std::vector<std::vector<MultiPoly>> pow(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        pow[i].push_back(MultiPoly::constant(out_vars, 1));
        for (int k = 1; k <= max_exp[i]; ++k) pow[i].push_back(pow[i][k - 1] * images[i]);
    }
    MultiPoly r(out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * pow[i][e[i]];
        r = r + t;
    }
    return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool is_const = std::accumulate(e.begin(), e.end(), 0) == 0;
        if (a != 1 || is_const) {
            out << rat_str(a);
            if (!is_const) out << "*";
        }
        bool first_var = true;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << "x" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (int i = 0; i < n; ++i) m(i, i) = MultiPoly::constant(nvars, 1);
    return m;
}

PolyMatrix PolyMatrix::from_constant(const RatMatrix& c, int nvars) {
    PolyMatrix m(c.rows(), c.cols(), nvars);
    for (int i = 0; i < c.rows(); ++i)
        for (int j = 0; j < c.cols(); ++j)
            if (c(i, j) != 0) m(i, j) = MultiPoly::constant(nvars, c(i, j));
    return m;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || nvars_ != o.nvars_)
        throw PreconditionError("poly matrix shape mismatch in +");
    PolyMatrix m(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
    return m;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || nvars_ != o.nvars_)
        throw PreconditionError("poly matrix shape mismatch in -");
    PolyMatrix m(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_ || nvars_ != o.nvars_)
        throw PreconditionError("poly matrix shape mismatch in *");
    PolyMatrix m(rows_, o.cols_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const MultiPoly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o(k, j).is_zero()) continue;
                m(i, j) = m(i, j) + a * o(k, j);
            }
        }
    return m;
}

PolyMatrix PolyMatrix::operator*(const MultiPoly& p) const {
    PolyMatrix m(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * p;
    return m;
}

PolyMatrix PolyMatrix::scale(const Rational& s) const {
    PolyMatrix m(rows_, cols_, nvars_);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix m(cols_, rows_, nvars_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

RatMatrix PolyMatrix::eval(const RatVector& point) const {
    RatMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(point);
    return m;
}

MultiPoly polymat_det(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("polymat_det: matrix not square");
    const int n = m.rows();
    if (n == 0) return MultiPoly::constant(m.nvars(), 1);
    // d[mask] = det of the submatrix on rows 0..popcount(mask)-1 and the
    // column set encoded by mask. Filled in order of increasing popcount.
    std::vector<MultiPoly> d(std::size_t(1) << n, MultiPoly(m.nvars()));
    d[0] = MultiPoly::constant(m.nvars(), 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int k = __builtin_popcount(mask) - 1;  // row index to expand
        MultiPoly acc(m.nvars());
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const MultiPoly& a = m(k, j);
            if (!a.is_zero()) {
                MultiPoly t = a * d[mask & ~(1u << j)];
                acc = ((k + pos) % 2 == 0) ? acc + t : acc - t;
            }
            ++pos;
        }
        d[mask] = acc;
    }
    return d[(std::size_t(1) << n) - 1];
}

PolyMatrix hessian(const MultiPoly& p) {
    const int n = p.nvars();
    PolyMatrix h(n, n, n);
    for (int i = 0; i < n; ++i) {
        MultiPoly di = p.diff(i);
        for (int j = i; j < n; ++j) {
            h(i, j) = di.diff(j);
            if (j != i) h(j, i) = h(i, j);
        }
    }
    return h;
}

std::vector<MultiPoly> operator*(const PolyMatrix& m, const std::vector<MultiPoly>& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw PreconditionError("poly mat*vec shape mismatch");
    std::vector<MultiPoly> r(m.rows(), MultiPoly(m.nvars()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + m(i, j) * v[j];
    return r;
}

}  // namespace cayley
