#include "cayley/subspace.hpp"

#include "cayley/error.hpp"

namespace cayley {

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, RatMatrix(ambient_dim, 0)); }

Subspace Subspace::full(int ambient_dim) {
    return Subspace(ambient_dim, RatMatrix::identity(ambient_dim));
}

Subspace Subspace::span(const RatMatrix& generators) {
    // Reduced column echelon = transpose of the rref of the transpose.
    auto res = rref(generators.transpose());
    RatMatrix basis(generators.rows(), res.rank);
    for (int k = 0; k < res.rank; ++k)
        for (int i = 0; i < generators.rows(); ++i) basis(i, k) = res.r(k, i);
    return Subspace(generators.rows(), basis);
}

Subspace Subspace::span(int ambient_dim, const std::vector<RatVector>& generators) {
    RatMatrix g(ambient_dim, static_cast<int>(generators.size()));
    for (int j = 0; j < g.cols(); ++j) {
        if (static_cast<int>(generators[j].size()) != ambient_dim)
            throw PreconditionError("generator has wrong ambient dimension");
        g.set_col(j, generators[j]);
    }
    return span(g);
}

bool Subspace::contains(const RatVector& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw PreconditionError("ambient dim mismatch");
    RatMatrix aug(ambient_, dim() + 1);
    for (int j = 0; j < dim(); ++j) aug.set_col(j, basis_.col(j));
    aug.set_col(dim(), v);
    return rref(aug).rank == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw PreconditionError("ambient dim mismatch");
    return sum(other).dim() == dim();
}

Subspace Subspace::sum(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw PreconditionError("ambient dim mismatch");
    return span(basis_.hstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (ambient_ != other.ambient_) throw PreconditionError("ambient dim mismatch");
    // x in both spans: x = A u = B w. Kernel vectors of [A | -B] give the u's.
    if (dim() == 0 || other.dim() == 0) return zero(ambient_);
    RatMatrix sys = basis_.hstack(-other.basis_);
    Subspace ker = nullspace(sys);
    std::vector<RatVector> gens;
    for (int j = 0; j < ker.dim(); ++j) {
        RatVector kv = ker.basis_vector(j);
        RatVector u(kv.begin(), kv.begin() + dim());
        gens.push_back(basis_ * u);
    }
    return span(ambient_, gens);
}

Subspace nullspace(const RatMatrix& m) {
    auto res = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : res.pivots) is_pivot[c] = true;
    std::vector<RatVector> gens;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RatVector v(n, Rational(0));
        v[f] = 1;
        for (int k = 0; k < res.rank; ++k) v[res.pivots[k]] = -res.r(k, f);
        gens.push_back(v);
    }
    return Subspace::span(n, gens);
}

Subspace perp(const Subspace& w, const RatMatrix& h) {
    if (h.rows() != h.cols() || h.rows() != w.ambient_dim())
        throw PreconditionError("perp: form has wrong shape");
    if (!h.is_symmetric()) throw PreconditionError("perp: form must be symmetric");
    // One constraint row (h y)' per basis vector y of w.
    RatMatrix constraints(w.dim(), w.ambient_dim());
    for (int k = 0; k < w.dim(); ++k) {
        RatVector hy = h * w.basis_vector(k);
        for (int j = 0; j < w.ambient_dim(); ++j) constraints(k, j) = hy[j];
    }
    if (w.dim() == 0) return Subspace::full(w.ambient_dim());
    return nullspace(constraints);
}

}  // namespace cayley
