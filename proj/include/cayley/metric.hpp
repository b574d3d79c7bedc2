#pragma once

#include "cayley/lsa.hpp"

namespace cayley {

// Symmetric bilinear form on the algebra's coordinate space. Symmetry is a
// construction invariant; nondegeneracy is checked by the operations that
// need it.
class InnerProduct {
  public:
    explicit InnerProduct(RatMatrix h);

    int dim() const { return h_.rows(); }
    const RatMatrix& matrix() const { return h_; }
    Rational pair(const RatVector& a, const RatVector& b) const { return dot(a, h_ * b); }
    bool nondegenerate() const { return det(h_) != 0; }

    bool operator==(const InnerProduct& o) const = default;

  private:
    RatMatrix h_;
};

// <e_i, e_j> = 1 when i + j = n + 1 (1-based), else 0. The canonical metric
// of the standard filiform algebra.
InnerProduct canonical_filiform_metric(int n);

InnerProduct direct_sum(const InnerProduct& a, const InnerProduct& b);

struct HessianTypeReport {
    bool ok;
    std::array<int, 3> witness;  // 1-based basis triple violating the identity
};
// The compatibility law <a, bc> - <ab, c> = <b, ac> - <ba, c> on all basis
// triples (sufficient by trilinearity).
HessianTypeReport check_hessian_type(const Lsa& a, const InnerProduct& h);

// For complete abelian a with nondegenerate Hessian-type h: the ascending
// chain is the orthogonal complement of the descending chain,
// C_i = (A^{i+1})^perp, and the successive quotients match in dimension.
// Throws PreconditionError when the preconditions fail; returns the verdict
// of the duality itself (true unless something is deeply wrong).
bool verify_duality(const Lsa& a, const InnerProduct& h);

struct CanonicalMetricResult {
    RatMatrix p;             // columns: the strongly adequate basis reaching the form
    InnerProduct canonical;  // p' h p, exactly sign * anti-diagonal
    int sign;                // +1 or -1
};

// Brings a nondegenerate Hessian-type metric on an abelian filiform algebra
// to the form <e_i, e_j> = sign * [i + j = n + 1] by a change of strongly
// adequate basis; the generator is rescaled by a positive factor, so
// sign = sgn(<e_1, e_n>) in any power basis. Over Q this requires
// |<e_1, e_n>| to be an (n+1)-st power of a rational; otherwise an Error
// explains that the metric is not rationally normalizable.
CanonicalMetricResult canonicalize_filiform_metric(const Lsa& a, const InnerProduct& h);

}  // namespace cayley
