#pragma once

#include <string>
#include <vector>

#include "cayley/error.hpp"
#include "cayley/metric.hpp"
#include "support/test_util.hpp"

namespace cayley::testutil {

// A named algebra/metric pair satisfying the standing hypotheses: complete
// abelian left-symmetric with a nondegenerate Hessian-type unimodular
// metric. Used by the property tests and the acceptance run.
struct SuitePair {
    std::string name;
    Lsa a;
    InnerProduct h;
};

inline SuitePair checked(std::string name, Lsa a, InnerProduct h) {
    if (!check_left_symmetric(a).ok || !check_abelian(a).ok)
        throw Error("suite: " + name + " is not abelian left-symmetric");
    if (!check_complete(a).complete())
        throw Error("suite: " + name + " is not complete");
    if (!check_hessian_type(a, h).ok)
        throw Error("suite: " + name + " metric is not Hessian-type");
    const Rational d = det(h.matrix());
    if (d != 1 && d != -1)
        throw Error("suite: " + name + " metric is not unimodular");
    return SuitePair{std::move(name), std::move(a), std::move(h)};
}

// The same pair in a random integer basis of determinant +-1; this keeps
// the metric unimodular and exercises generic coordinates.
inline SuitePair conjugated(const SuitePair& p, std::mt19937_64& rng) {
    RatMatrix u = random_unimodular(rng, p.a.dim());
    return checked(p.name + "/conj", transform_basis(p.a, u),
                   InnerProduct(u.transpose() * p.h.matrix() * u));
}

inline SuitePair filiform_pair(int n) {
    return checked("filiform_n" + std::to_string(n), Lsa::standard_filiform(n),
                   canonical_filiform_metric(n));
}

inline SuitePair sum_pair(std::string name, std::vector<int> parts) {
    Lsa a = Lsa::standard_filiform(parts[0]);
    InnerProduct h = canonical_filiform_metric(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) {
        a = direct_sum(a, Lsa::standard_filiform(parts[i]));
        h = direct_sum(h, canonical_filiform_metric(parts[i]));
    }
    return checked(std::move(name), std::move(a), std::move(h));
}

inline SuitePair trivial_pair(std::string name, int n, RatMatrix h) {
    return checked(std::move(name), Lsa::trivial(n), InnerProduct(std::move(h)));
}

// Two generators mapping onto a two-dimensional socle: e1e1 = e3,
// e1e2 = e2e1 = e4. A quotient-type complete abelian algebra that is not a
// direct sum of filiforms.
inline SuitePair two_generator_pair() {
    Lsa::Constants c;
    c[{0, 0, 2}] = 1;
    c[{0, 1, 3}] = 1;
    c[{1, 0, 3}] = 1;
    return checked("two_generator_n4", Lsa(4, std::move(c)),
                   InnerProduct(RatMatrix::anti_identity(4)));
}

inline SuitePair extended(std::string name, const SuitePair& p, int k) {
    return checked(std::move(name), direct_sum(p.a, Lsa::standard_filiform(k)),
                   direct_sum(p.h, canonical_filiform_metric(k)));
}

// At least five non-filiform pairs in each dimension 3..6, mixing direct
// sums, trivial algebras under various unimodular metrics, the
// two-generator algebra, and random-basis conjugates of each shape.
inline std::vector<SuitePair> nonfiliform_suite() {
    std::mt19937_64 rng(20240811);
    std::vector<SuitePair> s;

    auto push = [&s](SuitePair p) {
        if (is_filiform(p.a)) throw Error("suite: " + p.name + " is unexpectedly filiform");
        s.push_back(std::move(p));
    };

    // n = 3
    push(sum_pair("f1+f2", {1, 2}));
    push(sum_pair("f2+f1", {2, 1}));
    push(trivial_pair("trivial3/identity", 3, RatMatrix::identity(3)));
    push(trivial_pair("trivial3/mixed", 3,
                      RatMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}})));
    push(trivial_pair("trivial3/antidiag", 3, RatMatrix::anti_identity(3)));
    push(conjugated(s[0], rng));
    push(conjugated(s[2], rng));

    // n = 4
    push(sum_pair("f2+f2", {2, 2}));
    push(sum_pair("f1+f3", {1, 3}));
    push(sum_pair("f3+f1", {3, 1}));
    push(two_generator_pair());
    push(trivial_pair("trivial4/split", 4,
                      RatMatrix::from_rows(
                          {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}})));
    push(sum_pair("f1+f1+f2", {1, 1, 2}));
    push(conjugated(s[7], rng));
    push(conjugated(s[10], rng));

    // n = 5
    push(sum_pair("f2+f3", {2, 3}));
    push(sum_pair("f3+f2", {3, 2}));
    push(sum_pair("f1+f4", {1, 4}));
    push(extended("two_generator+f1", two_generator_pair(), 1));
    push(trivial_pair("trivial5/antidiag", 5, RatMatrix::anti_identity(5)));
    push(sum_pair("f1+f2+f2", {1, 2, 2}));
    push(conjugated(s[15], rng));

    // n = 6
    push(sum_pair("f3+f3", {3, 3}));
    push(sum_pair("f2+f4", {2, 4}));
    push(sum_pair("f1+f5", {1, 5}));
    push(sum_pair("f2+f2+f2", {2, 2, 2}));
    push(extended("two_generator+f2", two_generator_pair(), 2));
    push(trivial_pair("trivial6/split", 6,
                      RatMatrix::from_rows({{1, 0, 0, 0, 0, 0},
                                            {0, 1, 0, 0, 0, 0},
                                            {0, 0, 1, 0, 0, 0},
                                            {0, 0, 0, -1, 0, 0},
                                            {0, 0, 0, 0, -1, 0},
                                            {0, 0, 0, 0, 0, -1}})));
    push(conjugated(s[22], rng));
    push(conjugated(s[26], rng));

    return s;
}

// Pairs with dim Ann >= 2 covering all three cases of the metric restricted
// to the plane Z spanned by the first two canonical annihilator vectors:
// totally isotropic (r = 2), rank-one (r = 1), and nondegenerate (r = 0) in
// both the definite and indefinite flavors.
inline std::vector<SuitePair> big_annihilator_suite() {
    std::mt19937_64 rng(77001);
    std::vector<SuitePair> s;

    // r = 2: both annihilator tops isotropic.
    s.push_back(sum_pair("r2/f2+f2", {2, 2}));
    s.push_back(sum_pair("r2/f2+f3", {2, 3}));
    s.push_back(sum_pair("r2/f3+f3", {3, 3}));
    s.push_back(two_generator_pair());
    s.push_back(conjugated(s[0], rng));

    // r = 1: one isotropic direction, one anisotropic vector.
    s.push_back(sum_pair("r1/f1+f2", {1, 2}));
    s.push_back(sum_pair("r1/f1+f3", {1, 3}));
    s.push_back(trivial_pair("r1/trivial3_antidiag", 3, RatMatrix::anti_identity(3)));
    s.push_back(conjugated(s[5], rng));

    // r = 0: Z nondegenerate, definite and indefinite.
    s.push_back(trivial_pair("r0/trivial2_identity", 2, RatMatrix::identity(2)));
    s.push_back(trivial_pair("r0/trivial2_lorentz", 2,
                             RatMatrix::from_rows({{1, 0}, {0, -1}})));
    s.push_back(trivial_pair("r0/trivial3_identity", 3, RatMatrix::identity(3)));
    s.push_back(trivial_pair("r0/trivial4_alternating", 4,
                             RatMatrix::from_rows({{1, 0, 0, 0},
                                                   {0, -1, 0, 0},
                                                   {0, 0, 1, 0},
                                                   {0, 0, 0, -1}})));

    for (const SuitePair& p : s)
        if (annihilator(p.a).dim() < 2)
            throw Error("suite: " + p.name + " does not have a large annihilator");
    return s;
}

// Standard filiform pairs plus a random-basis conjugate of each.
inline std::vector<SuitePair> filiform_suite(int lo, int hi) {
    std::mt19937_64 rng(5150);
    std::vector<SuitePair> s;
    for (int n = lo; n <= hi; ++n) {
        s.push_back(filiform_pair(n));
        if (n >= 2) s.push_back(conjugated(s.back(), rng));
    }
    return s;
}

// A random metric on the standard filiform algebra that is guaranteed to be
// Hessian-type (constant on anti-diagonals, zero past the main one) and
// rationally normalizable (the leading value is sign * r^{n+1}).
inline InnerProduct random_achievable_metric(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(1, 4), den(1, 3), coin(0, 1);
    const Rational r(num(rng), den(rng));
    Rational top = rat_pow(r, n + 1);
    if (coin(rng)) top = -top;
    RatMatrix m(n, n);
    std::vector<Rational> anti(n + 2, Rational(0));
    anti[n + 1] = top;
    for (int k = 2; k <= n; ++k) anti[k] = random_rational(rng, 6, 4);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i + j <= n + 1) m(i - 1, j - 1) = anti[i + j];
    return InnerProduct(std::move(m));
}

}  // namespace cayley::testutil
