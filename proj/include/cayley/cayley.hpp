#pragma once

#include "cayley/hypersurface.hpp"

namespace cayley {

// The canonical model in dimension n: the Cayley polynomial together with
// the standard filiform algebra, the anti-diagonal metric and the diagonal
// similarity derivation that jointly generate it.
struct CayleyBundle {
    int n;
    MultiPoly f;
    Lsa algebra;
    InnerProduct h;
    RatMatrix b;
};

// Direct combinatorial expansion: for d = 2..n+1 and every ordered d-tuple
// (i, j, ..., m) of indices in 1..n with i + j + ... + m = n + 1, add the
// monomial x_i x_j ... x_m with coefficient (-1)^d/d. Ordered tuples count
// with multiplicity.
MultiPoly cayley_polynomial(int n);

// Builds the bundle and asserts that both hypersurface constructions
// reproduce cayley_polynomial(n) exactly before returning.
CayleyBundle cayley_bundle(int n);

// Literal coefficient equality with the Cayley polynomial in the same
// number of variables. Affine changes of coordinates are deliberately not
// normalized away; congruence detection goes through recovery,
// filiform detection and metric canonicalization instead.
bool is_cayley(const MultiPoly& f);

}  // namespace cayley
