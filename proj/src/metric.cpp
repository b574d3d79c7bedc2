#include "cayley/metric.hpp"

#include "cayley/error.hpp"

namespace cayley {

InnerProduct::InnerProduct(RatMatrix h) : h_(std::move(h)) {
    if (h_.rows() != h_.cols()) throw PreconditionError("inner product matrix must be square");
    if (!h_.is_symmetric()) throw PreconditionError("inner product matrix must be symmetric");
}

InnerProduct canonical_filiform_metric(int n) { return InnerProduct(RatMatrix::anti_identity(n)); }

InnerProduct direct_sum(const InnerProduct& a, const InnerProduct& b) {
    const int n = a.dim(), m = b.dim();
    RatMatrix h(n + m, n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h(i, j) = a.matrix()(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) h(n + i, n + j) = b.matrix()(i, j);
    return InnerProduct(h);
}

HessianTypeReport check_hessian_type(const Lsa& a, const InnerProduct& h) {
    if (h.dim() != a.dim()) throw PreconditionError("metric dimension mismatch");
    const int n = a.dim();
    for (int i = 0; i < n; ++i) {
        RatVector ei = unit_vector(n, i);
        for (int j = 0; j < n; ++j) {
            RatVector ej = unit_vector(n, j);
            RatVector ij = a.lambda(i).col(j), ji = a.lambda(j).col(i);
            for (int k = 0; k < n; ++k) {
                RatVector ik = a.lambda(i).col(k), jk = a.lambda(j).col(k);
                RatVector ek = unit_vector(n, k);
                Rational lhs = h.pair(ei, jk) - h.pair(ij, ek);
                Rational rhs = h.pair(ej, ik) - h.pair(ji, ek);
                if (lhs != rhs) return {false, {i + 1, j + 1, k + 1}};
            }
        }
    }
    return {true, {0, 0, 0}};
}

bool verify_duality(const Lsa& a, const InnerProduct& h) {
    if (!check_abelian(a).ok)
        throw PreconditionError("duality requires an abelian algebra");
    if (!check_complete(a).complete())
        throw PreconditionError("duality requires a complete algebra");
    if (!h.nondegenerate()) throw PreconditionError("duality requires a nondegenerate metric");
    if (!check_hessian_type(a, h).ok)
        throw PreconditionError("duality requires a Hessian-type metric");
    IdealChain desc = descending_series(a);
    IdealChain asc = ascending_series(a);
    const int m = desc.terminal_index;
    if (asc.terminal_index != m) return false;
    for (int i = 1; i <= m; ++i) {
        // C_i = (A^{i+1})^perp; descending stores A^{i+1} at offset i.
        if (!(asc.subspaces[i] == perp(desc.subspaces[i], h.matrix()))) return false;
        // dim C_i / C_{i-1} = dim A^i / A^{i+1}.
        int lhs = asc.subspaces[i].dim() - asc.subspaces[i - 1].dim();
        int rhs = desc.subspaces[i - 1].dim() - desc.subspaces[i].dim();
        if (lhs != rhs) return false;
    }
    return true;
}

CanonicalMetricResult canonicalize_filiform_metric(const Lsa& a, const InnerProduct& h) {
    const int n = a.dim();
    if (h.dim() != n) throw PreconditionError("metric dimension mismatch");
    if (!h.nondegenerate())
        throw PreconditionError("canonicalization requires a nondegenerate metric");
    if (!check_hessian_type(a, h).ok)
        throw PreconditionError("canonicalization requires a Hessian-type metric");

    RatMatrix p = strongly_adequate_basis(a);  // throws unless abelian filiform
    const Lsa standard = Lsa::standard_filiform(n);
    RatMatrix hc = p.transpose() * h.matrix() * p;

    // In a strongly adequate basis <e_i, e_j> depends only on i + j and
    // vanishes for i + j > n + 1. Both facts follow from the Hessian
    // compatibility law, so a violation means an internal inconsistency.
    auto check_hankel = [&](const RatMatrix& m) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i + j + 2 > n + 1 && m(i, j) != 0)
                    throw Error("canonicalization: metric does not vanish beyond the anti-diagonal");
                if (i + 1 <= j && m(i, j) != m(i + 1, j - 1))
                    throw Error("canonicalization: metric is not constant on anti-diagonals");
            }
    };
    check_hankel(hc);

    // Scale the generator by t > 0: e_1 -> t e_1 turns s_{n+1} into
    // t^{n+1} s_{n+1}, so |s_{n+1}| is normalized to 1 and the sign stays.
    const Rational s_top = hc(0, n - 1);
    const int sign = rat_sign(s_top);
    auto root = rational_nth_root(Rational(sign) / s_top, n + 1);
    if (!root)
        throw Error(
            "canonicalization: |<e1, e^n>| is not an (n+1)-st power of a rational, "
            "so the metric cannot be normalized over Q");
    const Rational t = *root;
    RatMatrix scale(n, n);
    Rational tp = 1;
    for (int i = 0; i < n; ++i) {
        tp *= t;
        scale(i, i) = tp;
    }
    p = p * scale;
    hc = scale.transpose() * hc * scale;

    // Kill s_k for k = n down to 2 with e_1 -> e_1 - sign * (s_k / k) *
    // e_{n-k+2}; higher anti-diagonals are unaffected.
    for (int k = n; k >= 2; --k) {
        const Rational s_k = hc(0, k - 2);
        if (s_k == 0) continue;
        RatVector gen = unit_vector(n, 0);
        gen[n - k + 1] = -Rational(sign) * s_k / k;
        RatMatrix step(n, n);
        RatVector power = gen;
        step.set_col(0, power);
        for (int i = 1; i < n; ++i) {
            power = standard.product(gen, power);
            step.set_col(i, power);
        }
        p = p * step;
        hc = step.transpose() * hc * step;
        check_hankel(hc);
    }

    if (!(hc == RatMatrix::anti_identity(n) * Rational(sign)))
        throw Error("canonicalization failed to reach the anti-diagonal form");
    if (!(transform_basis(a, p) == standard))
        throw Error("canonicalization left the strongly adequate family");
    return {p, InnerProduct(hc), sign};
}

}  // namespace cayley
