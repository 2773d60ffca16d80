#pragma once

#include <map>
#include <optional>

#include "waring/triangular.hpp"

namespace waring {

// Result of the order scan. `order` is the least r such that p vanishes
// identically on triangular matrices of size r but not of size r+1 (0 when
// the commutative image is already nonzero). `certificate` is the
// lexicographically least word of length r whose coefficient polynomial is
// nonzero; absent when order is 0. `checked_up_to` is the largest matrix
// size whose behaviour the scan established.
struct OrderReport {
    int order = 0;
    std::optional<Word> certificate;
    int checked_up_to = 0;
};

// p with every variable sent to a commuting unknown; expressed in the
// diagonal slot symbols diag(1, i).
CPoly commutative_image(const NcPoly& p);

// The coefficient polynomial of a word (i1..ik): the coefficient of
// a_{1,2}(i1) * a_{2,3}(i2) * ... * a_{k,k+1}(ik) in the (1, k+1) entry of
// sym_eval(p, k+1), a polynomial in the diagonal slots diag(1..k+1, *).
CPoly coefficient_poly(const NcPoly& p, const Word& word);

// All coefficient polynomials of length k at once, extracted from a single
// symbolic evaluation. Words with zero coefficient polynomial are omitted.
std::map<Word, CPoly> coefficient_table(const NcPoly& p, int k);

// Direct numeric evaluation of coefficient_poly(p, word) with slot l of
// variable i set to slots[l-1][i-1]; slots.size() must be word.size()+1.
// Computed by embedding `word` into the words of p, independently of the
// symbolic route.
Rational coefficient_value(const NcPoly& p, const Word& word,
                           const std::vector<std::vector<Rational>>& slots);

// Scans sizes upward until the first nonzero coefficient polynomial
// appears; throws order_exceeds_cap when no certificate exists at length
// <= cap. p must be nonzero.
OrderReport compute_order(const NcPoly& p, int cap = 12);

} // namespace waring
