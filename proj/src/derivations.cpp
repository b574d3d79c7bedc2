#include "cayley/derivations.hpp"

#include "cayley/error.hpp"

namespace cayley {

namespace {

// Rows of the linear system "B is a derivation" in the n^2 unknowns
// vec(B) (row-major): for each j the matrix identity
// B lambda_j - lambda_j B - lambda_{B e_j} = 0, one row per entry (p, q).
RatMatrix derivation_rows(const Lsa& a) {
    const int n = a.dim();
    RatMatrix rows(n * n * n, n * n);
    int r = 0;
    for (int j = 0; j < n; ++j) {
        const RatMatrix& lj = a.lambda(j);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q, ++r)
                for (int m = 0; m < n; ++m) {
                    rows(r, p * n + m) += lj(m, q);           // (B lambda_j)(p,q)
                    rows(r, m * n + q) -= lj(p, m);           // (lambda_j B)(p,q)
                    rows(r, m * n + j) -= a.lambda(m)(p, q);  // lambda_{B e_j}(p,q)
                }
    }
    return rows;
}

// Rows of B'H + HB - (2/n)(tr B) H = 0 (with_scale), resp. B'H + HB = 0
// followed by tr B = 0 (without), one row per entry (p, q).
RatMatrix metric_rows(const RatMatrix& h, bool with_scale) {
    const int n = h.rows();
    RatMatrix rows(n * n + (with_scale ? 0 : 1), n * n);
    int r = 0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q, ++r)
            for (int m = 0; m < n; ++m) {
                rows(r, m * n + p) += h(m, q);  // (B'H)(p,q)
                rows(r, m * n + q) += h(p, m);  // (HB)(p,q)
                if (with_scale) rows(r, m * n + m) -= Rational(2, n) * h(p, q);
            }
    if (!with_scale)
        for (int m = 0; m < n; ++m) rows(r, m * n + m) = 1;
    return rows;
}

DerivationSpace solve_space(DerivationKind kind, const Lsa& a, const RatMatrix& system,
                            const InnerProduct* h) {
    const int n = a.dim();
    Subspace sol = nullspace(system);
    DerivationSpace out{kind, {}};
    out.basis.reserve(sol.dim());
    for (int j = 0; j < sol.dim(); ++j) {
        RatMatrix b = RatMatrix::from_vector(sol.basis_vector(j), n, n);
        // Defensive re-verification, independent of the solver.
        if (!satisfies_derivation_law(a, b))
            throw Error("derivation solver produced a non-derivation");
        if (kind == DerivationKind::sDer && !satisfies_similarity_law(b, *h))
            throw Error("derivation solver violated the similarity law");
        if (kind == DerivationKind::iDer && (!satisfies_isometry_law(b, *h) || b.trace() != 0))
            throw Error("derivation solver violated the isometry law");
        out.basis.push_back(std::move(b));
    }
    return out;
}

}  // namespace

bool DerivationSpace::contains(const RatMatrix& b) const {
    if (basis.empty()) return b.is_zero();
    const int nn = b.rows() * b.cols();
    RatMatrix gens(nn, dim());
    for (int j = 0; j < dim(); ++j) gens.set_col(j, basis[j].vectorize());
    return Subspace::span(gens).contains(b.vectorize());
}

Rational similarity_scale(const RatMatrix& b) {
    return Rational(2) * b.trace() / Rational(b.rows());
}

bool satisfies_derivation_law(const Lsa& a, const RatMatrix& b) {
    const int n = a.dim();
    if (b.rows() != n || b.cols() != n)
        throw PreconditionError("derivation candidate has the wrong shape");
    for (int j = 0; j < n; ++j)
        if (!(b * a.lambda(j) == a.left_mult(b.col(j)) + a.lambda(j) * b)) return false;
    return true;
}

bool satisfies_similarity_law(const RatMatrix& b, const InnerProduct& h) {
    const RatMatrix& m = h.matrix();
    return b.transpose() * m + m * b == m * similarity_scale(b);
}

bool satisfies_isometry_law(const RatMatrix& b, const InnerProduct& h) {
    const RatMatrix& m = h.matrix();
    return (b.transpose() * m + m * b).is_zero();
}

DerivationSpace derivation_space(const Lsa& a) {
    return solve_space(DerivationKind::Der, a, derivation_rows(a), nullptr);
}

DerivationSpace similarity_derivation_space(const Lsa& a, const InnerProduct& h) {
    if (h.dim() != a.dim()) throw PreconditionError("metric dimension mismatch");
    return solve_space(DerivationKind::sDer, a,
                       derivation_rows(a).vstack(metric_rows(h.matrix(), true)), &h);
}

DerivationSpace isometry_derivation_space(const Lsa& a, const InnerProduct& h) {
    if (h.dim() != a.dim()) throw PreconditionError("metric dimension mismatch");
    return solve_space(DerivationKind::iDer, a,
                       derivation_rows(a).vstack(metric_rows(h.matrix(), false)), &h);
}

RatMatrix filiform_similarity_derivation(int n) {
    if (n < 1) throw PreconditionError("filiform_similarity_derivation requires n >= 1");
    RatMatrix b(n, n);
    for (int k = 1; k <= n; ++k) b(k - 1, k - 1) = Rational(k, n + 1);
    return b;
}

RatMatrix construct_isometry_derivation(const Lsa& a, const InnerProduct& h) {
    const int n = a.dim();
    if (h.dim() != n) throw PreconditionError("metric dimension mismatch");
    if (!check_abelian(a).ok)
        throw PreconditionError("isometry derivation construction requires an abelian algebra");
    if (!check_complete(a).complete())
        throw PreconditionError("isometry derivation construction requires a complete algebra");
    if (!h.nondegenerate())
        throw PreconditionError("isometry derivation construction requires a nondegenerate metric");
    if (!check_hessian_type(a, h).ok)
        throw PreconditionError("isometry derivation construction requires a Hessian-type metric");
    Subspace ann = annihilator(a);
    if (ann.dim() < 2)
        throw PreconditionError(
            "isometry derivation construction requires an annihilator of dimension >= 2");

    const RatVector z1 = ann.basis_vector(0), z2 = ann.basis_vector(1);
    const Subspace z = Subspace::span(n, {z1, z2});
    const Subspace zperp = perp(z, h.matrix());
    const Subspace radical = z.intersect(zperp);

    // Row pair <z_i, .> used to solve for dual vectors.
    auto pairing_rows = [&](const RatVector& u, const RatVector& v) {
        RatMatrix m(2, n);
        RatVector hu = h.matrix() * u, hv = h.matrix() * v;
        for (int q = 0; q < n; ++q) {
            m(0, q) = hu[q];
            m(1, q) = hv[q];
        }
        return m;
    };

    // Assemble B from its action on the columns of p: column j of p maps to
    // column j of images.
    RatMatrix p(n, n), images(n, n);
    auto fill_complement = [&](const Subspace& w, int from) {
        for (int j = 0; j < w.dim(); ++j) p.set_col(from + j, w.basis_vector(j));
    };

    if (radical.dim() == 2) {
        // Z totally isotropic: pick e1, e2 with <e1,z1> = 0, <e1,z2> = 1,
        // <e2,z1> = 1, <e2,z2> = 0; B e1 = -z1, B e2 = z2, B = 0 on Z^perp.
        RatMatrix rows = pairing_rows(z1, z2);
        auto e1 = solve(rows, {Rational(0), Rational(1)});
        auto e2 = solve(rows, {Rational(1), Rational(0)});
        if (!e1 || !e2) throw Error("isometry derivation: dual pair is unsolvable");
        p.set_col(0, *e1);
        p.set_col(1, *e2);
        fill_complement(zperp, 2);
        images.set_col(0, RatVector(n, Rational(0)) - z1);
        images.set_col(1, z2);
    } else if (radical.dim() == 1) {
        // One isotropic direction zr; some generator w of Z has <w,w> != 0
        // (otherwise the radical could not be one-dimensional). Pair zr with
        // e1 and set B e1 = -w, B w = <w,w> zr, B = 0 on {zr, w}^perp.
        const RatVector zr = radical.basis_vector(0);
        const RatVector w = h.pair(z1, z1) != 0 ? z1 : z2;
        const Rational nu = h.pair(w, w);
        if (nu == 0) throw Error("isometry derivation: no anisotropic vector in Z");
        auto e1 = solve(pairing_rows(zr, w), {Rational(1), Rational(0)});
        if (!e1) throw Error("isometry derivation: dual vector is unsolvable");
        p.set_col(0, *e1);
        p.set_col(1, w);
        fill_complement(perp(Subspace::span(n, {zr, w}), h.matrix()), 2);
        images.set_col(0, RatVector(n, Rational(0)) - w);
        images.set_col(1, nu * zr);
    } else {
        // Z nondegenerate: embed the one-dimensional isometry algebra of the
        // restricted metric (a rotation or boost generator).
        RatMatrix g(2, 2);
        g(0, 0) = h.pair(z1, z1);
        g(0, 1) = g(1, 0) = h.pair(z1, z2);
        g(1, 1) = h.pair(z2, z2);
        Subspace skew = nullspace(metric_rows(g, false));
        if (skew.dim() != 1)
            throw Error("isometry derivation: restricted isometry algebra is not a line");
        // The canonical kernel vector leads with +1; the rotation generator
        // convention puts -1 above the diagonal, so flip the line's sign.
        RatMatrix bbar = -RatMatrix::from_vector(skew.basis_vector(0), 2, 2);
        p.set_col(0, z1);
        p.set_col(1, z2);
        fill_complement(zperp, 2);
        images.set_col(0, bbar(0, 0) * z1 + bbar(1, 0) * z2);
        images.set_col(1, bbar(0, 1) * z1 + bbar(1, 1) * z2);
    }

    RatMatrix b = images * inverse(p);
    if (b.is_zero()) throw Error("isometry derivation: construction degenerated to zero");
    if (!satisfies_derivation_law(a, b) || !satisfies_isometry_law(b, h))
        throw Error("isometry derivation: constructed map fails its defining equations");
    return b;
}

}  // namespace cayley
