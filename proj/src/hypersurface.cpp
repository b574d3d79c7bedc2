#include "cayley/hypersurface.hpp"

#include <random>

#include "cayley/error.hpp"

namespace cayley {

namespace {

void validate_pair(const Lsa& a, const InnerProduct& h) {
    if (h.dim() != a.dim()) throw PreconditionError("metric dimension mismatch");
    if (!check_abelian(a).ok)
        throw PreconditionError("hypersurface construction requires an abelian algebra");
    auto comp = check_complete(a);
    if (!comp.complete() || !(comp.symbolic_nilpotent && *comp.symbolic_nilpotent))
        throw PreconditionError("hypersurface construction requires a complete algebra");
    if (!h.nondegenerate())
        throw PreconditionError("hypersurface construction requires a nondegenerate metric");
    if (!check_hessian_type(a, h).ok)
        throw PreconditionError("hypersurface construction requires a Hessian-type metric");
    Rational d = det(h.matrix());
    if (d != 1 && d != -1)
        throw PreconditionError("hypersurface construction requires |det H| = 1");
}

std::vector<MultiPoly> variables(int nvars, int from, int count) {
    std::vector<MultiPoly> xs;
    xs.reserve(count);
    for (int i = 0; i < count; ++i) xs.push_back(MultiPoly::variable(nvars, from + i));
    return xs;
}

bool all_zero(const std::vector<MultiPoly>& v) {
    for (const MultiPoly& p : v)
        if (!p.is_zero()) return false;
    return true;
}

// (I + lam)^{-1} = I - lam + lam^2 - ...; throws when the series fails to
// terminate, i.e. lam is not nilpotent. The result is verified to invert
// I + lam exactly.
PolyMatrix neumann_inverse(const PolyMatrix& lam) {
    const int n = lam.rows();
    PolyMatrix acc = PolyMatrix::identity(n, lam.nvars());
    PolyMatrix power = acc;
    for (int k = 1; k <= n && !power.is_zero(); ++k) {
        power = power * lam;
        acc = (k % 2 == 0) ? acc + power : acc - power;
    }
    if (!power.is_zero())
        throw PreconditionError("left multiplication is not nilpotent; the series diverges");
    if (!((PolyMatrix::identity(n, lam.nvars()) + lam) * acc ==
          PolyMatrix::identity(n, lam.nvars())))
        throw Error("series inverse failed to invert I + lambda_x");
    return acc;
}

MultiPoly bilinear_in(const RatMatrix& h, const std::vector<MultiPoly>& left,
                      const std::vector<MultiPoly>& right, int nvars) {
    MultiPoly out(nvars);
    for (int p = 0; p < h.rows(); ++p)
        for (int q = 0; q < h.cols(); ++q)
            if (h(p, q) != 0) out = out + left[p] * right[q] * h(p, q);
    return out;
}

}  // namespace

AffineElement AffineElement::compose(const AffineElement& o) const {
    return {linear * o.linear, linear * o.translation + translation};
}

RatVector AffineElement::apply(const RatVector& v) const { return linear * v + translation; }

HypersurfaceModel build_polynomial(const Lsa& a, const InnerProduct& h) {
    validate_pair(a, h);
    const int n = a.dim();
    PolyMatrix lam = a.left_mult_symbolic();
    std::vector<MultiPoly> xs = variables(n, 0, n);

    // F = sum_k (-1)^k/(k+2) x'H lam^k x, terminating by nilpotency.
    MultiPoly f(n);
    std::vector<MultiPoly> v = xs;
    for (int k = 0; !all_zero(v); ++k) {
        if (k > n) throw PreconditionError("left multiplication is not nilpotent");
        MultiPoly term = bilinear_in(h.matrix(), xs, v, n);
        f = f + term * Rational(k % 2 == 0 ? 1 : -1, k + 2);
        v = lam * v;
    }

    HypersurfaceModel m{n, f, h, a};
    if (!f.homogeneous_part(0).is_zero() || !f.homogeneous_part(1).is_zero())
        throw Error("graph function has nonzero constant or linear part");
    PolyMatrix hess = hessian(f);
    if (!(hess.eval(RatVector(n, Rational(0))) == h.matrix()))
        throw Error("DdF at the origin differs from the metric");
    if (!(polymat_det(hess) == MultiPoly::constant(n, det(h.matrix()))))
        throw Error("hessian determinant of the graph function is not constant det H");
    if (!gradient_identity_check(m)) throw Error("gradient identity failed");
    return m;
}

MultiPoly build_polynomial_via_b(const Lsa& a, const InnerProduct& h, const RatMatrix& b) {
    validate_pair(a, h);
    const int n = a.dim();
    if (b.rows() != n || b.cols() != n)
        throw PreconditionError("similarity derivation has the wrong shape");
    if (!satisfies_derivation_law(a, b) || !satisfies_similarity_law(b, h))
        throw PreconditionError("the given matrix is not a similarity derivation of the pair");
    if (b.trace() * 2 != Rational(n))
        throw PreconditionError("the similarity derivation must have trace n/2");

    std::vector<MultiPoly> xs = variables(n, 0, n);
    std::vector<MultiPoly> bx = PolyMatrix::from_constant(b, n) * xs;
    std::vector<MultiPoly> u = neumann_inverse(a.left_mult_symbolic()) * bx;
    return bilinear_in(h.matrix(), xs, u, n);
}

bool gradient_identity_check(const HypersurfaceModel& m) {
    const int n = m.n;
    PolyMatrix iplus =
        PolyMatrix::identity(n, n) + m.algebra.left_mult_symbolic();
    std::vector<MultiPoly> grad;
    grad.reserve(n);
    for (int i = 0; i < n; ++i) grad.push_back(m.f.diff(i));
    std::vector<MultiPoly> xs = variables(n, 0, n);
    for (int j = 0; j < n; ++j) {
        MultiPoly lhs(n), rhs(n);
        for (int p = 0; p < n; ++p) {
            lhs = lhs + grad[p] * iplus(p, j);
            rhs = rhs + xs[p] * m.h.matrix()(p, j);
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

AffineElement group_element(const HypersurfaceModel& m, const RatVector& x) {
    const int n = m.n;
    if (static_cast<int>(x.size()) != n) throw PreconditionError("point dimension mismatch");
    RatMatrix lin(n + 1, n + 1);
    RatMatrix lx = m.algebra.left_mult(x);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lin(i, j) = (i == j ? Rational(1) : Rational(0)) + lx(i, j);
    RatVector hx = m.h.matrix() * x;
    for (int q = 0; q < n; ++q) lin(n, q) = hx[q];
    lin(n, n) = 1;
    RatVector tr = x;
    tr.push_back(m.f.eval(x));
    return {lin, tr};
}

bool verify_group_law(const HypersurfaceModel& m, const GroupLawMode& mode) {
    const int n = m.n;
    if (mode.symbolic) {
        const int nn = 2 * n;
        // z = (I + lambda_x) y + x in the joint variables (x_1.., y_1..).
        std::vector<MultiPoly> z;
        z.reserve(n);
        for (int i = 0; i < n; ++i) {
            MultiPoly zi = MultiPoly::variable(nn, i) + MultiPoly::variable(nn, n + i);
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) {
                    const Rational& c = m.algebra.lambda(k)(i, j);
                    if (c == 0) continue;
                    Exponents e(nn, 0);
                    e[k] += 1;
                    e[n + j] += 1;
                    zi.add_term(e, c);
                }
            z.push_back(zi);
        }
        MultiPoly lhs = m.f.substitute(z);
        MultiPoly fx = m.f.substitute(variables(nn, 0, n));
        MultiPoly fy = m.f.substitute(variables(nn, n, n));
        MultiPoly xhy =
            bilinear_in(m.h.matrix(), variables(nn, 0, n), variables(nn, n, n), nn);
        return lhs == xhy + fx + fy;
    }

    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    auto point = [&] {
        RatVector p(n);
        for (int i = 0; i < n; ++i) p[i] = Rational(num(rng), den(rng));
        return p;
    };
    for (int s = 0; s < mode.samples; ++s) {
        RatVector x = point(), y = point();
        RatVector z = x + y + m.algebra.left_mult(x) * y;
        Rational lhs = m.f.eval(z);
        Rational rhs = dot(x, m.h.matrix() * y) + m.f.eval(x) + m.f.eval(y);
        if (lhs != rhs) return false;
    }
    return true;
}

bool verify_group_law(const HypersurfaceModel& m) {
    return verify_group_law(m, GroupLawMode::automatic(m.n));
}

Lsa recover_lsa(const MultiPoly& f, const InnerProduct& h) {
    const int n = h.dim();
    if (f.nvars() != n) throw PreconditionError("polynomial/metric dimension mismatch");
    if (!f.homogeneous_part(0).is_zero() || !f.homogeneous_part(1).is_zero())
        throw PreconditionError("graph function must have zero constant and linear parts");
    if (!h.nondegenerate()) throw PreconditionError("metric must be nondegenerate");
    if (!(hessian(f).eval(RatVector(n, Rational(0))) == h.matrix()))
        throw PreconditionError("DdF at the origin differs from the metric");

    // v = H^{-1} (dF)'; its quadratic part is -x*x, so polarizing the
    // squaring map recovers the product on basis pairs.
    RatMatrix hinv = inverse(h.matrix());
    std::vector<MultiPoly> quad(n, MultiPoly(n));
    for (int p = 0; p < n; ++p) {
        MultiPoly vp(n);
        for (int q = 0; q < n; ++q) vp = vp + f.diff(q) * hinv(p, q);
        quad[p] = vp.homogeneous_part(2);
    }
    Lsa::Constants c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatVector ei = unit_vector(n, i), ej = unit_vector(n, j);
            RatVector eij = ei + ej;
            for (int p = 0; p < n; ++p) {
                Rational val =
                    (quad[p].eval(eij) - quad[p].eval(ei) - quad[p].eval(ej)) / Rational(-2);
                if (val != 0) c[{i, j, p}] = val;
            }
        }
    Lsa out(n, std::move(c));
    if (!check_left_symmetric(out).ok || !check_abelian(out).ok)
        throw Error("recovered product is not abelian left-symmetric; "
                    "the graph function is not of the constructed family");
    auto comp = check_complete(out);
    if (!comp.complete() || !(comp.symbolic_nilpotent && *comp.symbolic_nilpotent))
        throw Error("recovered product is not complete; "
                    "the graph function is not of the constructed family");
    return out;
}

bool isotropy_predicate(const HypersurfaceModel& m, const RatMatrix& a_mat, const Rational& t) {
    const int n = m.n;
    if (a_mat.rows() != n || a_mat.cols() != n)
        throw PreconditionError("isotropy candidate has the wrong shape");
    Rational d = det(a_mat);
    if (d == 0) throw PreconditionError("isotropy candidate must be invertible");
    if (rat_pow(t, n) != d * d)
        throw PreconditionError("inconsistent scale: t^n must equal det(A)^2");

    std::vector<MultiPoly> ax;
    ax.reserve(n);
    for (int i = 0; i < n; ++i) {
        MultiPoly zi(n);
        for (int j = 0; j < n; ++j)
            if (a_mat(i, j) != 0) zi = zi + MultiPoly::variable(n, j) * a_mat(i, j);
        ax.push_back(zi);
    }
    bool polynomial_side = m.f.substitute(ax) == m.f * t;

    bool automorphism = true;
    for (int i = 0; i < n && automorphism; ++i)
        for (int j = 0; j < n && automorphism; ++j) {
            RatVector lhs = a_mat * m.algebra.product(unit_vector(n, i), unit_vector(n, j));
            RatVector rhs = m.algebra.product(a_mat.col(i), a_mat.col(j));
            automorphism = lhs == rhs;
        }
    bool algebra_side =
        automorphism && a_mat.transpose() * m.h.matrix() * a_mat == m.h.matrix() * t;

    if (polynomial_side != algebra_side)
        throw Error("isotropy conditions disagree between the polynomial and algebraic forms");
    return polynomial_side;
}

}  // namespace cayley
