#include "cayley/lsa.hpp"

#include "cayley/error.hpp"

namespace cayley {

Lsa::Lsa(int dim, Constants constants) : dim_(dim), c_(std::move(constants)) {
    if (dim < 1) throw PreconditionError("algebra dimension must be >= 1");
    for (auto it = c_.begin(); it != c_.end();) {
        const auto& [i, j, k] = it->first;
        if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
            throw PreconditionError("structure constant index out of range");
        it = it->second == 0 ? c_.erase(it) : std::next(it);
    }
    lambda_.assign(dim_, RatMatrix(dim_, dim_));
    rho_.assign(dim_, RatMatrix(dim_, dim_));
    for (const auto& [ijk, coef] : c_) {
        const auto& [i, j, k] = ijk;
        lambda_[i](k, j) = coef;  // (e_i e_j)_k
        rho_[j](k, i) = coef;
    }
}

Lsa Lsa::trivial(int n) { return Lsa(n, {}); }

Lsa Lsa::standard_filiform(int n) {
    Constants c;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j) c[{i - 1, j - 1, i + j - 1}] = 1;
    return Lsa(n, std::move(c));
}

RatVector Lsa::product(const RatVector& a, const RatVector& b) const {
    return left_mult(a) * b;
}

RatMatrix Lsa::left_mult(const RatVector& x) const {
    if (static_cast<int>(x.size()) != dim_) throw PreconditionError("left_mult arity mismatch");
    RatMatrix m(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        if (x[i] != 0) m = m + lambda_[i] * x[i];
    return m;
}

PolyMatrix Lsa::left_mult_symbolic() const {
    PolyMatrix m(dim_, dim_, dim_);
    for (const auto& [ijk, coef] : c_) {
        const auto& [i, j, k] = ijk;
        Exponents e(dim_, 0);
        e[i] = 1;
        m(k, j) = m(k, j) + MultiPoly::monomial(e, coef);
    }
    return m;
}

LeftSymmetryReport check_left_symmetric(const Lsa& a) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;  // (a,a,c) = (a,a,c) trivially
            for (int k = 0; k < n; ++k) {
                // (e_i, e_j, e_k) - (e_j, e_i, e_k), associator difference.
                RatVector ij = a.lambda(i).col(j), ji = a.lambda(j).col(i);
                RatVector jk = a.lambda(j).col(k), ik = a.lambda(i).col(k);
                RatVector lhs = a.left_mult(ij) * unit_vector(n, k) - a.lambda(i) * jk;
                RatVector rhs = a.left_mult(ji) * unit_vector(n, k) - a.lambda(j) * ik;
                if (lhs != rhs) return {false, {i + 1, j + 1, k + 1}};
            }
        }
    return {true, {0, 0, 0}};
}

AbelianReport check_abelian(const Lsa& a) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a.lambda(i).col(j) != a.lambda(j).col(i)) return {false, {i + 1, j + 1}};
    return {true, {0, 0}};
}

CompletenessReport check_complete(const Lsa& a) {
    CompletenessReport rep{true, 0, std::nullopt};
    for (int i = 0; i < a.dim(); ++i)
        if (a.rho(i).trace() != 0) {
            rep.trace_zero = false;
            rep.bad_trace_index = i + 1;
            break;
        }
    if (check_abelian(a).ok) {
        PolyMatrix lam = a.left_mult_symbolic();
        PolyMatrix power = PolyMatrix::identity(a.dim(), a.dim());
        bool nil = false;
        for (int k = 0; k < a.dim(); ++k) {
            power = power * lam;
            if (power.is_zero()) {
                nil = true;
                break;
            }
        }
        rep.symbolic_nilpotent = nil;
    }
    return rep;
}

std::vector<int> IdealChain::dims() const {
    std::vector<int> d;
    d.reserve(subspaces.size());
    for (const auto& s : subspaces) d.push_back(s.dim());
    return d;
}

IdealChain descending_series(const Lsa& a) {
    const int n = a.dim();
    IdealChain chain{IdealChain::Kind::descending, {Subspace::full(n)}, 0};
    while (chain.subspaces.back().dim() > 0) {
        if (static_cast<int>(chain.subspaces.size()) > n + 1)
            throw PreconditionError("power ideal chain does not reach zero: algebra is not nilpotent");
        const Subspace& prev = chain.subspaces.back();
        std::vector<RatVector> gens;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < prev.dim(); ++j) gens.push_back(a.lambda(i) * prev.basis_vector(j));
        chain.subspaces.push_back(Subspace::span(n, gens));
    }
    chain.terminal_index = static_cast<int>(chain.subspaces.size()) - 1;
    return chain;
}

IdealChain ascending_series(const Lsa& a) {
    const int n = a.dim();
    IdealChain chain{IdealChain::Kind::ascending, {Subspace::zero(n)}, 0};
    IdealChain desc = descending_series(a);
    // C_i = { x : x v = 0 for every v spanning A^i }; the map x -> x v has
    // columns e_j v.
    for (int i = 1; i < static_cast<int>(desc.subspaces.size()); ++i) {
        const Subspace& ai = desc.subspaces[i - 1];  // A^i (descending index i)
        RatMatrix stacked(0, n);
        for (int v = 0; v < ai.dim(); ++v) {
            RatMatrix mv(n, n);
            for (int j = 0; j < n; ++j) mv.set_col(j, a.lambda(j) * ai.basis_vector(v));
            stacked = stacked.rows() == 0 ? mv : stacked.vstack(mv);
        }
        Subspace ci = ai.dim() == 0 ? Subspace::full(n) : nullspace(stacked);
        if (ci.dim() <= chain.subspaces.back().dim() && ci.dim() < n)
            throw PreconditionError("center chain stalls: algebra is not complete");
        chain.subspaces.push_back(ci);
        if (ci.dim() == n) break;
    }
    if (chain.subspaces.back().dim() != n)
        throw PreconditionError("center chain does not reach the full space");
    chain.terminal_index = static_cast<int>(chain.subspaces.size()) - 1;
    return chain;
}

Subspace annihilator(const Lsa& a) {
    const int n = a.dim();
    RatMatrix stacked(0, n);
    for (int j = 0; j < n; ++j) {
        // x -> e_j x
        stacked = stacked.rows() == 0 ? a.lambda(j) : stacked.vstack(a.lambda(j));
        // x -> x e_j
        stacked = stacked.vstack(a.rho(j));
    }
    return nullspace(stacked);
}

namespace {

// Chain of right powers A_1 = A, A_{i+1} = A_i * A, capped at dim+1 steps.
std::vector<int> right_power_dims(const Lsa& a) {
    const int n = a.dim();
    std::vector<int> dims;
    Subspace cur = Subspace::full(n);
    dims.push_back(cur.dim());
    for (int step = 0; step < n + 1 && cur.dim() > 0; ++step) {
        std::vector<RatVector> gens;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < cur.dim(); ++j) gens.push_back(a.rho(i) * cur.basis_vector(j));
        cur = Subspace::span(n, gens);
        dims.push_back(cur.dim());
    }
    return dims;
}

}  // namespace

bool is_filiform(const Lsa& a) {
    const int n = a.dim();
    std::vector<int> left;
    try {
        left = descending_series(a).dims();
    } catch (const PreconditionError&) {
        return false;
    }
    if (static_cast<int>(left.size()) != n + 1) return false;
    for (int i = 0; i <= n; ++i)
        if (left[i] != n - i) return false;
    std::vector<int> right = right_power_dims(a);
    if (static_cast<int>(right.size()) != n + 1) return false;
    for (int i = 0; i <= n; ++i)
        if (right[i] != n - i) return false;
    return true;
}

RatMatrix strongly_adequate_basis(const Lsa& a) {
    const int n = a.dim();
    if (!check_abelian(a).ok || !is_filiform(a))
        throw PreconditionError("strongly adequate basis requires an abelian filiform algebra");
    const Subspace a2 = descending_series(a).subspaces[1];
    int gen = -1;
    for (int i = 0; i < n; ++i)
        if (!a2.contains(unit_vector(n, i))) {
            gen = i;
            break;
        }
    if (gen < 0) throw PreconditionError("no standard basis vector generates the algebra");
    RatMatrix p(n, n);
    RatVector power = unit_vector(n, gen);
    p.set_col(0, power);
    for (int k = 1; k < n; ++k) {
        power = a.product(p.col(0), power);
        p.set_col(k, power);
    }
    if (det(p) == 0)
        throw PreconditionError("powers of the chosen generator do not form a basis");
    if (!(transform_basis(a, p) == Lsa::standard_filiform(n)))
        throw PreconditionError("algebra is not standard filiform in its power basis");
    return p;
}

Lsa transform_basis(const Lsa& a, const RatMatrix& p) {
    const int n = a.dim();
    if (p.rows() != n || p.cols() != n) throw PreconditionError("basis change has wrong shape");
    RatMatrix pinv = inverse(p);
    Lsa::Constants c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            RatVector prod = pinv * a.product(p.col(i), p.col(j));
            for (int k = 0; k < n; ++k)
                if (prod[k] != 0) c[{i, j, k}] = prod[k];
        }
    return Lsa(n, std::move(c));
}

Lsa direct_sum(const Lsa& a, const Lsa& b) {
    Lsa::Constants c;
    for (const auto& [ijk, coef] : a.constants()) c[ijk] = coef;
    const int off = a.dim();
    for (const auto& [ijk, coef] : b.constants()) {
        const auto& [i, j, k] = ijk;
        c[{i + off, j + off, k + off}] = coef;
    }
    return Lsa(a.dim() + b.dim(), std::move(c));
}

}  // namespace cayley
