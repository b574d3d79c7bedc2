#pragma once

#include "cayley/metric.hpp"

namespace cayley {

enum class DerivationKind { Der, sDer, iDer };

// Canonical basis of a space of derivations of an algebra, as n x n
// matrices. Der is the full derivation algebra; sDer restricts to
// infinitesimal similarities of a metric (B'H + HB = s H with the scale s
// fixed by the trace); iDer restricts further to infinitesimal isometries
// (B'H + HB = 0 and tr B = 0).
struct DerivationSpace {
    DerivationKind kind;
    std::vector<RatMatrix> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    // Membership in the spanned subspace of gl(n), via vectorization.
    bool contains(const RatMatrix& b) const;
};

// The similarity scale attached to B: s = (2/n) tr B.
Rational similarity_scale(const RatMatrix& b);

// The defining laws, checked directly by matrix arithmetic so they are
// independent of the nullspace solver that produced a candidate.
// Derivation law: B lambda_{e_j} = lambda_{B e_j} + lambda_{e_j} B for all j.
bool satisfies_derivation_law(const Lsa& a, const RatMatrix& b);
// Similarity law: B'H + HB = (2/n)(tr B) H.
bool satisfies_similarity_law(const RatMatrix& b, const InnerProduct& h);
// Isometry law: B'H + HB = 0.
bool satisfies_isometry_law(const RatMatrix& b, const InnerProduct& h);

DerivationSpace derivation_space(const Lsa& a);
DerivationSpace similarity_derivation_space(const Lsa& a, const InnerProduct& h);
DerivationSpace isometry_derivation_space(const Lsa& a, const InnerProduct& h);

// B = diag(1/(n+1), ..., n/(n+1)): the canonical similarity derivation of
// the standard filiform pair, with tr B = n/2 and scale s = 1.
RatMatrix filiform_similarity_derivation(int n);

// For a complete abelian algebra with nondegenerate Hessian-type metric
// whose annihilator has dimension >= 2: a nonzero B with B'H + HB = 0
// satisfying the derivation law. Z is the span of the first two canonical
// annihilator basis vectors and the construction branches on
// r = dim(Z intersect Z^perp): r = 2 builds a dual pair against the
// isotropic Z, r = 1 pairs the isotropic line with an anisotropic vector of
// Z, r = 0 embeds the one-dimensional isometry algebra of the restricted
// metric. The output is re-verified against both defining laws.
RatMatrix construct_isometry_derivation(const Lsa& a, const InnerProduct& h);

}  // namespace cayley
