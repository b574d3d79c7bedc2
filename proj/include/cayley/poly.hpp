#pragma once

#include <map>
#include <string>
#include <vector>

#include "cayley/matrix.hpp"
#include "cayley/rational.hpp"

namespace cayley {

using Exponents = std::vector<int>;

// Ascending graded reverse lexicographic order: lower total degree first;
// within a degree, a precedes b when the last differing exponent of a is
// larger. Term maps iterate in this order, which fixes the serialization
// and printing order once and for all.
struct GrevlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients in
// variables x1..xn. The zero polynomial is the empty term map.
class MultiPoly {
  public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int i);  // x_{i+1}, 0-based i
    static MultiPoly monomial(Exponents exp, const Rational& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    const std::map<Exponents, Rational, GrevlexLess>& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const = default;

    MultiPoly diff(int var) const;
    Rational eval(const RatVector& point) const;
    // Substitute images[i] for x_{i+1}; all images share one variable set,
    // which becomes the variable set of the result.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;
    MultiPoly homogeneous_part(int d) const;

    std::string str() const;

  private:
    int nvars_;
    std::map<Exponents, Rational, GrevlexLess> terms_;
};

// Dense matrix of polynomials sharing one variable set.
class PolyMatrix {
  public:
    PolyMatrix() : rows_(0), cols_(0), nvars_(0) {}
    PolyMatrix(int rows, int cols, int nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          e_(static_cast<std::size_t>(rows) * cols, MultiPoly(nvars)) {}

    static PolyMatrix identity(int n, int nvars);
    static PolyMatrix from_constant(const RatMatrix& m, int nvars);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int nvars() const { return nvars_; }

    MultiPoly& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const MultiPoly& operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }
    bool operator==(const PolyMatrix& o) const = default;

    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix operator-(const PolyMatrix& o) const;
    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator*(const MultiPoly& p) const;
    PolyMatrix scale(const Rational& s) const;
    PolyMatrix transpose() const;
    bool is_zero() const;

    RatMatrix eval(const RatVector& point) const;

  private:
    int rows_, cols_, nvars_;
    std::vector<MultiPoly> e_;
};

// Determinant by expansion along rows with memoization over column subsets
// (2^n minors instead of n! products). Division-free, so it works over the
// polynomial ring directly. Intended for the small matrices this library
// handles (n <= 10).
MultiPoly polymat_det(const PolyMatrix& m);

// Matrix of second partials, symmetric by construction.
PolyMatrix hessian(const MultiPoly& p);

std::vector<MultiPoly> operator*(const PolyMatrix& m, const std::vector<MultiPoly>& v);

}  // namespace cayley
