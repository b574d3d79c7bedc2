#pragma once

#include <array>
#include <map>
#include <optional>
#include <tuple>

#include "cayley/poly.hpp"
#include "cayley/subspace.hpp"

namespace cayley {

// A finite-dimensional algebra over Q given by structure constants
// e_i e_j = sum_k c_{ij}^k e_k. Stored sparsely; indices are 0-based in
// memory and 1-based on the wire and in reported witnesses. Nothing here
// assumes the product is left-symmetric: that is what check_left_symmetric
// is for, and the higher layers state which axioms they require.
class Lsa {
  public:
    using Constants = std::map<std::tuple<int, int, int>, Rational>;

    Lsa(int dim, Constants constants);

    static Lsa trivial(int n);  // zero product
    // e_i e_j = e_{i+j} while i + j <= n; the model filiform algebra.
    static Lsa standard_filiform(int n);

    int dim() const { return dim_; }
    const Constants& constants() const { return c_; }

    // lambda(i) is left multiplication by e_i; rho(i) is right
    // multiplication by e_i, both as matrices acting on coordinates.
    const RatMatrix& lambda(int i) const { return lambda_[i]; }
    const RatMatrix& rho(int i) const { return rho_[i]; }

    RatVector product(const RatVector& a, const RatVector& b) const;
    // Left multiplication by the coordinate vector x.
    RatMatrix left_mult(const RatVector& x) const;
    // Left multiplication by the generic element x = (x1..xn): a matrix of
    // linear forms, the symbolic lambda_x used by the hypersurface layer.
    PolyMatrix left_mult_symbolic() const;

    bool operator==(const Lsa& o) const { return dim_ == o.dim_ && c_ == o.c_; }

  private:
    int dim_;
    Constants c_;
    std::vector<RatMatrix> lambda_, rho_;
};

struct LeftSymmetryReport {
    bool ok;
    std::array<int, 3> witness;  // 1-based (i, j, k) violating triple when !ok
};
// Associator symmetry (a, b, c) = (b, a, c) on all basis triples.
LeftSymmetryReport check_left_symmetric(const Lsa& a);

struct AbelianReport {
    bool ok;
    std::array<int, 2> witness;  // 1-based (i, j) with e_i e_j != e_j e_i
};
AbelianReport check_abelian(const Lsa& a);

struct CompletenessReport {
    // Completeness is equivalent to tr rho_a = 0 for all a; by linearity it
    // suffices to test basis elements.
    bool trace_zero;
    int bad_trace_index;  // 1-based index of the first nonzero trace, 0 if none
    // For abelian algebras: whether lambda_x^dim vanishes identically as a
    // matrix of polynomials. Unset for non-abelian input.
    std::optional<bool> symbolic_nilpotent;
    bool complete() const { return trace_zero; }
};
CompletenessReport check_complete(const Lsa& a);

struct IdealChain {
    enum class Kind { descending, ascending };
    Kind kind;
    // descending: A^1 = A, ..., A^{m+1} = 0 (m + 1 entries).
    // ascending: C_0 = 0, C_1 = Ann(A), ..., C_{m'} = A.
    std::vector<Subspace> subspaces;
    int terminal_index;  // m, resp. m'
    std::vector<int> dims() const;
};

// Power ideals A^{i+1} = A * A^i. Throws PreconditionError if the chain has
// not reached zero after dim+1 steps (the algebra is not nilpotent, hence
// not complete).
IdealChain descending_series(const Lsa& a);

// Ascending chain via C_i = { x : x * A^i = 0 }. Throws PreconditionError
// if the chain stalls before reaching the full space.
IdealChain ascending_series(const Lsa& a);

// Ann(A) = { x : x y = 0 = y x for all y }, as the kernel of the stacked
// left- and right-multiplication maps.
Subspace annihilator(const Lsa& a);

// dim A^i = n + 1 - i for both the left power chain and the right power
// chain A_{i+1} = A_i * A.
bool is_filiform(const Lsa& a);

// For an abelian filiform algebra: an invertible P whose columns are the
// powers e, e^2, ..., e^n of the lexicographically first standard basis
// vector e outside A^2. In that basis the structure constants are exactly
// standard_filiform(n). Throws PreconditionError otherwise.
RatMatrix strongly_adequate_basis(const Lsa& a);

// The same algebra expressed in the basis given by the columns of P.
Lsa transform_basis(const Lsa& a, const RatMatrix& p);

Lsa direct_sum(const Lsa& a, const Lsa& b);

}  // namespace cayley
