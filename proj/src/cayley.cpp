#include "cayley/cayley.hpp"

#include <functional>

#include "cayley/derivations.hpp"
#include "cayley/error.hpp"
#include "cayley/metric.hpp"

namespace cayley {

MultiPoly cayley_polynomial(int n) {
    if (n < 1)
        throw PreconditionError("cayley_polynomial requires n >= 1");
    MultiPoly f(n);
    Exponents exp(n, 0);
    // Ordered compositions of n + 1 into parts from 1..n. Every composition
    // has at least two parts since a single part is at most n.
    std::function<void(int, int)> walk = [&](int remaining, int d) {
        if (remaining == 0) {
            f.add_term(exp, Rational(d % 2 == 0 ? 1 : -1, d));
            return;
        }
        const int top = remaining < n ? remaining : n;
        for (int part = 1; part <= top; ++part) {
            ++exp[part - 1];
            walk(remaining - part, d + 1);
            --exp[part - 1];
        }
    };
    walk(n + 1, 0);
    return f;
}

CayleyBundle cayley_bundle(int n) {
    Lsa algebra = Lsa::standard_filiform(n);
    InnerProduct h = canonical_filiform_metric(n);
    RatMatrix b = filiform_similarity_derivation(n);
    MultiPoly f = cayley_polynomial(n);
    if (build_polynomial(algebra, h).f != f)
        throw Error("cayley_bundle: series construction disagrees with the "
                    "combinatorial expansion");
    if (build_polynomial_via_b(algebra, h, b) != f)
        throw Error("cayley_bundle: derivation-based construction disagrees "
                    "with the combinatorial expansion");
    return CayleyBundle{n, f, algebra, h, b};
}

bool is_cayley(const MultiPoly& f) {
    if (f.nvars() < 1)
        return false;
    return f == cayley_polynomial(f.nvars());
}

}  // namespace cayley
