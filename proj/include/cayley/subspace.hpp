#pragma once

#include "cayley/matrix.hpp"

namespace cayley {

// A linear subspace of Q^n held in a canonical basis: the reduced column
// echelon form of any spanning set (columns ordered by ascending pivot row).
// Two Subspace values are equal as sets iff their representations are equal
// componentwise, which is what operator== compares.
class Subspace {
  public:
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    // Span of the columns of `generators` (ambient_dim x k, any k >= 0).
    static Subspace span(const RatMatrix& generators);
    static Subspace span(int ambient_dim, const std::vector<RatVector>& generators);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.cols(); }
    // ambient_dim x dim matrix, canonical as described above.
    const RatMatrix& basis() const { return basis_; }
    RatVector basis_vector(int j) const { return basis_.col(j); }

    bool contains(const RatVector& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const = default;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

  private:
    Subspace(int ambient, RatMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
    int ambient_;
    RatMatrix basis_;
};

// Kernel of m as a canonical subspace of Q^cols.
Subspace nullspace(const RatMatrix& m);

// Orthogonal complement of w with respect to the symmetric bilinear form h:
// { x : x' h y = 0 for all y in w }. h need not be nondegenerate.
Subspace perp(const Subspace& w, const RatMatrix& h);

}  // namespace cayley
