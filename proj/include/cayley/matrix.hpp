#pragma once

#include <initializer_list>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

using RatVector = std::vector<Rational>;

// Dense matrix over the rationals, row-major. Dimensions in this library
// stay tiny (<= a few hundred rows for stacked constraint systems), so no
// attempt is made at sparsity.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}

    static RatMatrix identity(int n);
    static RatMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
    // Anti-diagonal ones: entry (i, j) = 1 iff i + j == n - 1 (0-based).
    static RatMatrix anti_identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const RatMatrix& o) const = default;

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator*(const Rational& s) const;
    RatMatrix operator-() const;

    RatMatrix transpose() const;
    Rational trace() const;
    bool is_zero() const;
    bool is_symmetric() const;

    RatVector col(int j) const;
    RatVector row(int i) const;
    void set_col(int j, const RatVector& v);

    // Row-major flattening; used to treat matrices as vectors of an n^2
    // dimensional space (derivation solvers, membership tests).
    RatVector vectorize() const;
    static RatMatrix from_vector(const RatVector& v, int rows, int cols);

    RatMatrix hstack(const RatMatrix& right) const;
    RatMatrix vstack(const RatMatrix& below) const;

  private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

RatVector operator*(const RatMatrix& m, const RatVector& v);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
bool is_zero(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);
RatVector unit_vector(int n, int i);

struct RrefResult {
    RatMatrix r;             // reduced row-echelon form
    int rank;
    std::vector<int> pivots; // pivot column per pivot row, ascending
};

// Reduced row-echelon form. Fraction-free (Bareiss) forward elimination to
// keep intermediate numerators/denominators small, then exact normalization.
// Pivot choice is deterministic: first row with a nonzero entry, scanning
// columns left to right.
RrefResult rref(const RatMatrix& m);

// Determinant by fraction-free Bareiss elimination. Square input.
Rational det(const RatMatrix& m);

// Inverse via Gauss-Jordan on [m | I]. Throws PreconditionError if singular.
RatMatrix inverse(const RatMatrix& m);

// Particular solution of m x = b, or nullopt when inconsistent. Free
// variables are set to zero, which makes the result deterministic.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

}  // namespace cayley
