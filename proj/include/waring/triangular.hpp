#pragma once

#include <map>
#include <vector>

#include "waring/cpoly.hpp"
#include "waring/ncpoly.hpp"

namespace waring {

// n x n upper triangular matrix over Q, sparse, 1-based indexing.
class UTMatrix {
public:
    explicit UTMatrix(int n);

    int n() const { return n_; }
    const std::map<std::pair<int, int>, Rational>& entries() const { return e_; }

    Rational get(int row, int col) const;
    void set(int row, int col, const Rational& value);

    bool is_zero() const { return e_.empty(); }

    UTMatrix& operator+=(const UTMatrix& o);
    UTMatrix& operator-=(const UTMatrix& o);
    friend UTMatrix operator+(UTMatrix a, const UTMatrix& b) { return a += b; }
    friend UTMatrix operator-(UTMatrix a, const UTMatrix& b) { return a -= b; }
    UTMatrix operator*(const UTMatrix& o) const;
    UTMatrix scaled(const Rational& c) const;

    bool operator==(const UTMatrix&) const = default;

    std::string str() const;

private:
    void check_pos(int row, int col) const;

    int n_;
    std::map<std::pair<int, int>, Rational> e_;
};

// Same shape with commutative-polynomial entries; the result type of
// evaluating a noncommutative polynomial on generic matrices.
class SymUTMatrix {
public:
    explicit SymUTMatrix(int n);

    int n() const { return n_; }
    const CPoly& get(int row, int col) const;
    void set(int row, int col, CPoly value);

    SymUTMatrix& operator+=(const SymUTMatrix& o);
    SymUTMatrix operator*(const SymUTMatrix& o) const;
    SymUTMatrix scaled(const Rational& c) const;

    bool operator==(const SymUTMatrix&) const = default;

private:
    int n_;
    std::map<std::pair<int, int>, CPoly> e_;
};

// Band parameter t >= 0 selecting the ideal of matrices whose (i,j) entry
// vanishes whenever j - i <= t.
struct BandSpec {
    int t;
};

// True when every entry of a at depth j - i <= t is zero. Requires
// 0 <= t <= n-1.
bool band_check(const UTMatrix& a, BandSpec band);

// Evaluates p at an m-tuple of matrices of equal size.
UTMatrix mat_eval(const NcPoly& p, const std::vector<UTMatrix>& inputs);

// Evaluates p at the generic upper triangular tuple of size n; entry (j,j)
// of input i is the symbol diag(j,i), entry (j,k) is entry(j,k,i).
SymUTMatrix sym_eval(const NcPoly& p, int n);

// The (s,t) entry of sym_eval(p, n) computed directly as a sum over weakly
// increasing index paths, with symbols listed in `fixed` replaced by their
// values. Never materializes the full matrix product.
CPoly entry_polynomial(const NcPoly& p, int n, int s, int t,
                       const PointAssignment& fixed);

} // namespace waring
