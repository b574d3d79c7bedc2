#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/error.hpp"
#include "cayley/lsa.hpp"
#include "support/test_util.hpp"

using namespace cayley;

namespace {

// n = 2 algebra that is neither abelian nor left-symmetric:
// e1 e1 = e2, e2 e1 = e1.
Lsa broken_n2() {
    Lsa::Constants c;
    c[{0, 0, 1}] = 1;
    c[{1, 0, 0}] = 1;
    return Lsa(2, std::move(c));
}

// e1 e1 = e1: left-symmetric and abelian but not complete.
Lsa idempotent_n1() {
    Lsa::Constants c;
    c[{0, 0, 0}] = 1;
    return Lsa(1, std::move(c));
}

bool is_associative(const Lsa& a) {
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                RatVector lhs = a.product(a.product(unit_vector(n, i), unit_vector(n, j)),
                                          unit_vector(n, k));
                RatVector rhs = a.product(unit_vector(n, i),
                                          a.product(unit_vector(n, j), unit_vector(n, k)));
                if (lhs != rhs) return false;
            }
    return true;
}

}  // namespace

TEST_CASE("left multiplication by e1 in the filiform algebra") {
    Lsa f3 = Lsa::standard_filiform(3);
    RatMatrix want = RatMatrix::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}});
    CHECK(f3.left_mult(unit_vector(3, 0)) == want);
    CHECK(f3.lambda(0) == want);
    // lambda_x is linear in x.
    RatVector x{Rational(2), Rational(-1, 3), Rational(5)};
    CHECK(f3.left_mult(x) ==
          f3.lambda(0) * x[0] + f3.lambda(1) * x[1] + f3.lambda(2) * x[2]);
    // The symbolic operator specializes to the concrete one.
    CHECK(f3.left_mult_symbolic().eval(x) == f3.left_mult(x));
}

TEST_CASE("left symmetry check") {
    CHECK(check_left_symmetric(Lsa::standard_filiform(4)).ok);
    CHECK(check_left_symmetric(Lsa::trivial(3)).ok);
    auto rep = check_left_symmetric(broken_n2());
    CHECK(!rep.ok);
    CHECK(rep.witness == std::array<int, 3>{1, 2, 1});
}

TEST_CASE("abelian check") {
    CHECK(check_abelian(Lsa::standard_filiform(5)).ok);
    auto rep = check_abelian(broken_n2());
    CHECK(!rep.ok);
    CHECK(rep.witness == std::array<int, 2>{1, 2});
}

TEST_CASE("completeness check") {
    auto good = check_complete(Lsa::standard_filiform(4));
    CHECK(good.complete());
    CHECK(good.symbolic_nilpotent.has_value());
    CHECK(*good.symbolic_nilpotent);

    auto bad = check_complete(idempotent_n1());
    CHECK(!bad.complete());
    CHECK(bad.bad_trace_index == 1);
    CHECK(!*bad.symbolic_nilpotent);

    CHECK(check_complete(Lsa::trivial(3)).complete());
}

TEST_CASE("abelian left-symmetric algebras are associative") {
    CHECK(is_associative(Lsa::standard_filiform(5)));
    CHECK(is_associative(Lsa::trivial(4)));
    CHECK(is_associative(direct_sum(Lsa::standard_filiform(2), Lsa::standard_filiform(3))));
    CHECK(!is_associative(broken_n2()));
}

TEST_CASE("powers of the left multiplication operator track algebra powers") {
    // Abelian: lambda_a^k = lambda_{a^k}.
    Lsa f4 = Lsa::standard_filiform(4);
    RatVector a{Rational(1), Rational(1, 2), Rational(0), Rational(-3)};
    RatVector a2 = f4.product(a, a);
    RatVector a3 = f4.product(a, a2);
    CHECK(f4.left_mult(a) * f4.left_mult(a) == f4.left_mult(a2));
    CHECK(f4.left_mult(a) * f4.left_mult(a2) == f4.left_mult(a3));
}

TEST_CASE("descending and ascending series of the filiform algebra") {
    Lsa f4 = Lsa::standard_filiform(4);
    auto desc = descending_series(f4);
    CHECK(desc.dims() == std::vector<int>{4, 3, 2, 1, 0});
    CHECK(desc.terminal_index == 4);
    auto asc = ascending_series(f4);
    CHECK(asc.dims() == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(asc.terminal_index == 4);
    // A^i and C_i are explicit coordinate subspaces here.
    CHECK(desc.subspaces[1] ==
          Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 3)}));
    CHECK(asc.subspaces[1] == Subspace::span(4, {unit_vector(4, 3)}));
}

TEST_CASE("series of the trivial algebra terminate at index 1") {
    Lsa t = Lsa::trivial(3);
    auto desc = descending_series(t);
    CHECK(desc.dims() == std::vector<int>{3, 0});
    CHECK(desc.terminal_index == 1);
    auto asc = ascending_series(t);
    CHECK(asc.dims() == std::vector<int>{0, 3});
    CHECK(asc.terminal_index == 1);
}

TEST_CASE("series failures are reported") {
    CHECK_THROWS_AS(descending_series(idempotent_n1()), PreconditionError);
    CHECK_THROWS_AS(ascending_series(idempotent_n1()), PreconditionError);
}

TEST_CASE("descending index equals ascending index on complete abelian algebras") {
    std::vector<Lsa> algebras{Lsa::standard_filiform(3), Lsa::trivial(4),
                              direct_sum(Lsa::standard_filiform(2), Lsa::standard_filiform(2)),
                              direct_sum(Lsa::standard_filiform(3), Lsa::trivial(1))};
    for (const auto& a : algebras) {
        auto desc = descending_series(a), asc = ascending_series(a);
        CHECK(desc.terminal_index == asc.terminal_index);
        // A^{m-i} is contained in C_{i+1}.
        const int m = desc.terminal_index;
        for (int i = 0; i + 1 <= asc.terminal_index && m - i >= 1; ++i)
            CHECK(asc.subspaces[i + 1].contains(desc.subspaces[m - i - 1]));
    }
}

TEST_CASE("annihilator") {
    CHECK(annihilator(Lsa::standard_filiform(3)) == Subspace::span(3, {unit_vector(3, 2)}));
    CHECK(annihilator(Lsa::trivial(4)).dim() == 4);
    Lsa sum = direct_sum(Lsa::standard_filiform(2), Lsa::standard_filiform(2));
    Subspace ann = annihilator(sum);
    CHECK(ann.dim() == 2);
    CHECK(ann == Subspace::span(4, {unit_vector(4, 1), unit_vector(4, 3)}));
    CHECK(annihilator(idempotent_n1()).dim() == 0);
}

TEST_CASE("filiform detection") {
    for (int n = 1; n <= 6; ++n) CHECK(is_filiform(Lsa::standard_filiform(n)));
    CHECK(is_filiform(Lsa::trivial(1)));
    CHECK(!is_filiform(Lsa::trivial(2)));
    CHECK(!is_filiform(direct_sum(Lsa::standard_filiform(2), Lsa::standard_filiform(2))));
    CHECK(!is_filiform(idempotent_n1()));
}

TEST_CASE("strongly adequate basis of the standard filiform algebra is the identity") {
    for (int n : {2, 4, 5}) {
        RatMatrix p = strongly_adequate_basis(Lsa::standard_filiform(n));
        CHECK(p == RatMatrix::identity(n));
    }
}

TEST_CASE("strongly adequate basis of a re-presented filiform algebra") {
    // Present the n = 2 filiform algebra in the basis u1 = e1, u2 = e1 + e2,
    // where the product picks up a correction term: u1 u1 = u2 - u1.
    Lsa f2 = Lsa::standard_filiform(2);
    RatMatrix q = RatMatrix::from_rows({{1, 1}, {0, 1}});
    Lsa presented = transform_basis(f2, q);
    CHECK(!(presented == f2));
    RatMatrix p = strongly_adequate_basis(presented);
    CHECK(transform_basis(presented, p) == f2);
    // First power is the first standard basis vector outside A^2,
    // second power is its square: (1,0) and its product (-1,1).
    CHECK(p.col(0) == RatVector{1, 0});
    CHECK(p.col(1) == presented.product(RatVector{1, 0}, RatVector{1, 0}));
}

TEST_CASE("strongly adequate basis under random unimodular presentations") {
    std::mt19937_64 rng(606);
    for (int n = 2; n <= 5; ++n)
        for (int rep = 0; rep < 6; ++rep) {
            Lsa f = Lsa::standard_filiform(n);
            RatMatrix q = testutil::random_unimodular(rng, n);
            Lsa presented = transform_basis(f, q);
            CHECK(is_filiform(presented));
            RatMatrix p = strongly_adequate_basis(presented);
            CHECK(transform_basis(presented, p) == f);
        }
}

TEST_CASE("strongly adequate basis rejects unsuitable algebras") {
    CHECK_THROWS_AS(strongly_adequate_basis(Lsa::trivial(3)), PreconditionError);
    CHECK_THROWS_AS(strongly_adequate_basis(
                        direct_sum(Lsa::standard_filiform(2), Lsa::standard_filiform(2))),
                    PreconditionError);
}

TEST_CASE("basis transforms preserve structural invariants") {
    std::mt19937_64 rng(90210);
    Lsa sum = direct_sum(Lsa::standard_filiform(3), Lsa::standard_filiform(2));
    for (int rep = 0; rep < 8; ++rep) {
        RatMatrix q = testutil::random_unimodular(rng, 5);
        Lsa t = transform_basis(sum, q);
        CHECK(check_left_symmetric(t).ok);
        CHECK(check_abelian(t).ok);
        CHECK(check_complete(t).complete());
        CHECK(annihilator(t).dim() == annihilator(sum).dim());
        CHECK(descending_series(t).dims() == descending_series(sum).dims());
        CHECK(ascending_series(t).dims() == ascending_series(sum).dims());
        CHECK(is_filiform(t) == is_filiform(sum));
    }
    // Round trip: conjugating by P then by P^{-1} restores the constants.
    RatMatrix q = testutil::random_unimodular(rng, 5);
    CHECK(transform_basis(transform_basis(sum, q), inverse(q)) == sum);
}

TEST_CASE("direct sums multiply blockwise") {
    Lsa sum = direct_sum(Lsa::standard_filiform(2), Lsa::standard_filiform(3));
    CHECK(sum.dim() == 5);
    // e1 e1 = e2 in the first block.
    CHECK(sum.product(unit_vector(5, 0), unit_vector(5, 0)) == unit_vector(5, 1));
    // e3 e4 = e5 in the second block (offset by 2).
    CHECK(sum.product(unit_vector(5, 2), unit_vector(5, 3)) == unit_vector(5, 4));
    // Cross-block products vanish.
    CHECK(is_zero(sum.product(unit_vector(5, 0), unit_vector(5, 2))));
    CHECK(descending_series(sum).dims() == std::vector<int>{5, 3, 1, 0});
}

TEST_CASE("structure constant validation") {
    Lsa::Constants bad;
    bad[{0, 0, 5}] = 1;
    CHECK_THROWS_AS(Lsa(2, bad), PreconditionError);
    CHECK_THROWS_AS(Lsa(0, {}), PreconditionError);
    // Explicit zeros are dropped, so equal algebras compare equal.
    Lsa::Constants with_zero;
    with_zero[{0, 0, 1}] = 1;
    with_zero[{1, 1, 0}] = 0;
    CHECK(Lsa(2, with_zero) == Lsa::standard_filiform(2));
}
