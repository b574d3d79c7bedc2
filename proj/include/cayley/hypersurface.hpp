#pragma once

#include <cstdint>

#include "cayley/derivations.hpp"

namespace cayley {

// A graph hypersurface x_{n+1} = F(x_1..x_n) built from a complete abelian
// algebra and a nondegenerate Hessian-type metric with |det H| = 1. F has
// zero constant and linear parts, DdF at the origin equals H, and
// det(hessian F) is constant.
struct HypersurfaceModel {
    int n;
    MultiPoly f;
    InnerProduct h;
    Lsa algebra;

    bool operator==(const HypersurfaceModel& o) const = default;
};

// Affine map z -> linear z + translation on the ambient (n+1)-space. Group
// elements carry the block form [[I + lambda_x, 0], [x'H, 1]] with
// translation (x, F(x)).
struct AffineElement {
    RatMatrix linear;
    RatVector translation;

    bool operator==(const AffineElement& o) const = default;
    AffineElement compose(const AffineElement& o) const;
    RatVector apply(const RatVector& v) const;
};

// F(x) = x'H(1/2 I - 1/3 lambda_x + 1/4 lambda_x^2 - ...)x; the series
// terminates because lambda_x is nilpotent. All model invariants (zero
// low-order parts, DdF_0 = H, constant Hessian determinant, gradient
// identity) are verified before returning.
HypersurfaceModel build_polynomial(const Lsa& a, const InnerProduct& h);

// F(x) = x'H(I + lambda_x)^{-1}Bx for B in sDer with tr B = n/2; the
// symbolic inverse is the terminating Neumann series. Agrees with
// build_polynomial(a, h).f.
MultiPoly build_polynomial_via_b(const Lsa& a, const InnerProduct& h, const RatMatrix& b);

// The polynomial identity dF_x (I + lambda_x) = x'H, checked componentwise.
bool gradient_identity_check(const HypersurfaceModel& m);

// g_x = ((I + lambda_x, 0; x'H, 1), (x, F(x))); maps the origin to
// (x, F(x)) and graph points to graph points.
AffineElement group_element(const HypersurfaceModel& m, const RatVector& x);

// How to check the group law F((I + lambda_x)y + x) = x'Hy + F(y) + F(x):
// either as an exact identity of polynomials in 2n variables, or on k
// seeded random rational points (exact arithmetic either way).
struct GroupLawMode {
    bool symbolic;
    int samples;
    std::uint64_t seed;

    static GroupLawMode symbolic_mode() { return {true, 0, 0}; }
    static GroupLawMode sampled(int k, std::uint64_t seed) { return {false, k, seed}; }
    // Full expansion through n = 4, sampled(20) beyond.
    static GroupLawMode automatic(int n) { return n <= 4 ? symbolic_mode() : sampled(20, 0); }
};

bool verify_group_law(const HypersurfaceModel& m, const GroupLawMode& mode);
bool verify_group_law(const HypersurfaceModel& m);

// Reads the algebra back from the graph function: v(x) = H^{-1}(dF_x)' has
// quadratic part -x*x, and polarization of the squaring map recovers the
// product. Throws unless the recovered product is a complete abelian
// left-symmetric structure (the signal that F is not of the constructed
// family).
Lsa recover_lsa(const MultiPoly& f, const InnerProduct& h);

// Checks the two equivalent isotropy conditions independently:
// (c) F(Ax) = t F(x), and (d) A is an algebra automorphism with A'HA = tH.
// Requires t^n = det(A)^2; throws Error if (c) and (d) ever disagree, since
// their equivalence is a theorem about valid models.
bool isotropy_predicate(const HypersurfaceModel& m, const RatMatrix& a_mat, const Rational& t);

}  // namespace cayley
