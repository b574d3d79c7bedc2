#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/error.hpp"
#include "cayley/poly.hpp"
#include "support/test_util.hpp"

using namespace cayley;
using testutil::random_rational;

namespace {

// F = x1*x2 - 1/3*x1^3, the degree-3 ground truth used across the suite.
MultiPoly ground_truth_n2() {
    MultiPoly f(2);
    f.add_term({1, 1}, 1);
    f.add_term({3, 0}, Rational(-1, 3));
    return f;
}

MultiPoly random_poly(std::mt19937_64& rng, int nvars, int max_deg, int nterms) {
    MultiPoly p(nvars);
    std::uniform_int_distribution<int> ed(0, max_deg);
    for (int t = 0; t < nterms; ++t) {
        Exponents e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = ed(rng) / nvars;
        p.add_term(e, random_rational(rng, 5, 3));
    }
    return p;
}

// Independent determinant oracle over the polynomial ring: Laplace
// expansion along the first row, no memoization.
MultiPoly laplace_det(const PolyMatrix& m) {
    const int n = m.rows();
    if (n == 0) return MultiPoly::constant(m.nvars(), 1);
    if (n == 1) return m(0, 0);
    MultiPoly d(m.nvars());
    for (int j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        PolyMatrix minor(n - 1, n - 1, m.nvars());
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        MultiPoly term = m(0, j) * laplace_det(minor);
        d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
}

}  // namespace

TEST_CASE("zero polynomial") {
    MultiPoly z(3);
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.str() == "0");
    CHECK(z + z == z);
    CHECK(z * MultiPoly::variable(3, 0) == z);
    // Terms that cancel vanish from the map entirely.
    MultiPoly p = MultiPoly::variable(3, 1);
    CHECK((p - p) == z);
    CHECK((p - p).terms().empty());
}

TEST_CASE("grevlex term order, ascending") {
    // Degree-2 monomials in three variables, expected ascending order.
    MultiPoly p(3);
    p.add_term({2, 0, 0}, 1);
    p.add_term({0, 2, 0}, 1);
    p.add_term({0, 0, 2}, 1);
    p.add_term({1, 1, 0}, 1);
    p.add_term({1, 0, 1}, 1);
    p.add_term({0, 1, 1}, 1);
    p.add_term({1, 0, 0}, 1);  // lower degree sorts first
    std::vector<Exponents> got;
    for (const auto& [e, c] : p.terms()) got.push_back(e);
    std::vector<Exponents> want = {{1, 0, 0}, {0, 0, 2}, {0, 1, 1}, {1, 0, 1},
                                   {0, 2, 0}, {1, 1, 0}, {2, 0, 0}};
    CHECK(got == want);
}

TEST_CASE("printing matches the pinned rendering") {
    CHECK(ground_truth_n2().str() == "x1*x2 - 1/3*x1^3");
    MultiPoly c = MultiPoly::constant(2, Rational(-5, 2));
    CHECK(c.str() == "-5/2");
    MultiPoly q(2);
    q.add_term({0, 1}, -1);
    q.add_term({2, 0}, Rational(1, 4));
    CHECK(q.str() == "-x2 + 1/4*x1^2");
}

TEST_CASE("scalar multiple, term by term") {
    MultiPoly f = ground_truth_n2();
    MultiPoly want(2);
    want.add_term({1, 1}, 3);
    want.add_term({3, 0}, -1);
    CHECK(f * Rational(3) == want);
}

TEST_CASE("partial derivative by the power rule") {
    MultiPoly f = ground_truth_n2();
    MultiPoly want(2);
    want.add_term({0, 1}, 1);
    want.add_term({2, 0}, -1);
    CHECK(f.diff(0) == want);  // x2 - x1^2
    CHECK(f.diff(1) == MultiPoly::variable(2, 0));
}

TEST_CASE("hessian of the ground truth polynomial") {
    PolyMatrix h = hessian(ground_truth_n2());
    PolyMatrix want(2, 2, 2);
    want(0, 0) = MultiPoly::variable(2, 0) * Rational(-2);
    want(0, 1) = MultiPoly::constant(2, 1);
    want(1, 0) = MultiPoly::constant(2, 1);
    CHECK(h == want);
    CHECK(polymat_det(h) == MultiPoly::constant(2, -1));
}

TEST_CASE("evaluation") {
    CHECK(ground_truth_n2().eval({1, 1}) == Rational(2, 3));
    CHECK(ground_truth_n2().eval({0, 0}) == 0);
}

TEST_CASE("hessian is symmetric and mixed partials commute") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 15; ++rep) {
        MultiPoly p = random_poly(rng, 3, 6, 8);
        PolyMatrix h = hessian(p);
        CHECK(h == h.transpose());
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(p.diff(i).diff(j) == p.diff(j).diff(i));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        MultiPoly p = random_poly(rng, 3, 4, 6), q = random_poly(rng, 3, 4, 6);
        RatVector pt{random_rational(rng), random_rational(rng), random_rational(rng)};
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    }
}

TEST_CASE("substitution composes with evaluation") {
    std::mt19937_64 rng(31337);
    for (int rep = 0; rep < 10; ++rep) {
        MultiPoly p = random_poly(rng, 2, 4, 5);
        std::vector<MultiPoly> images{random_poly(rng, 3, 2, 4), random_poly(rng, 3, 2, 4)};
        MultiPoly comp = p.substitute(images);
        RatVector pt{random_rational(rng, 3), random_rational(rng, 3), random_rational(rng, 3)};
        CHECK(comp.eval(pt) == p.eval({images[0].eval(pt), images[1].eval(pt)}));
    }
    // Identity substitution is the identity.
    MultiPoly f = ground_truth_n2();
    CHECK(f.substitute({MultiPoly::variable(2, 0), MultiPoly::variable(2, 1)}) == f);
}

TEST_CASE("homogeneous parts sum to the polynomial") {
    MultiPoly f = ground_truth_n2();
    MultiPoly sum(2);
    for (int d = 0; d <= f.degree(); ++d) sum = sum + f.homogeneous_part(d);
    CHECK(sum == f);
    CHECK(f.homogeneous_part(2).str() == "x1*x2");
    CHECK(f.homogeneous_part(3).str() == "-1/3*x1^3");
    CHECK(f.homogeneous_part(1).is_zero());
}

TEST_CASE("polymat_det agrees with Laplace expansion") {
    std::mt19937_64 rng(404);
    for (int n = 1; n <= 4; ++n)
        for (int rep = 0; rep < 8; ++rep) {
            PolyMatrix m(n, n, 2);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m(i, j) = random_poly(rng, 2, 2, 2);
            CHECK(polymat_det(m) == laplace_det(m));
        }
    CHECK(polymat_det(PolyMatrix::identity(5, 3)) == MultiPoly::constant(3, 1));
}

TEST_CASE("poly matrix product evaluates pointwise") {
    std::mt19937_64 rng(11);
    PolyMatrix a(3, 3, 2), b(3, 3, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a(i, j) = random_poly(rng, 2, 2, 3);
            b(i, j) = random_poly(rng, 2, 2, 3);
        }
    RatVector pt{Rational(1, 2), Rational(-2, 3)};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
}
