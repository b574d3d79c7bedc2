#pragma once

#include <random>

#include "cayley/matrix.hpp"

namespace cayley::testutil {

// Independent determinant oracle: plain Laplace expansion along the first
// row. Deliberately naive so it shares no code with the Bareiss routine it
// cross-checks.
inline Rational cofactor_det(const RatMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational d = 0;
    for (int j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        Rational term = m(0, j) * cofactor_det(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

inline Rational random_rational(std::mt19937_64& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int max_num = 9) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = random_rational(rng, max_num);
    return m;
}

// Random integer matrix with determinant +-1, built from shear and swap
// operations on the identity.
inline RatMatrix random_unimodular(std::mt19937_64& rng, int n, int steps = 12) {
    RatMatrix m = RatMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<int> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> op(0, 3);
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        if (op(rng) == 0) {
            for (int c = 0; c < n; ++c) std::swap(m(i, c), m(j, c));
        } else {
            Rational f(coef(rng));
            for (int c = 0; c < n; ++c) m(i, c) += f * m(j, c);
        }
    }
    return m;
}

}  // namespace cayley::testutil
