#pragma once

#include <map>
#include <string>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// A word in the free monoid on x1, x2, ...; letters are 1-based variable
// indexes and words are never empty inside an NcPoly.
using Word = std::vector<int>;

// Noncommutative polynomial with zero constant term, stored as a sparse map
// word -> coefficient with no zero coefficients. The zero polynomial is
// representable (empty map) so arithmetic stays total; call require_nonzero
// where a zero result is a caller error.
class NcPoly {
public:
    NcPoly() = default;

    static NcPoly var(int index);
    static NcPoly from_terms(std::map<Word, Rational> terms);

    // Parses the expression grammar:
    //   poly     := term (('+'|'-') term)*
    //   term     := factor ('*' factor)*
    //   factor   := base ('^' nat)?
    //   base     := var | rational | '(' poly ')' | '[' poly ',' poly ']'
    //   var      := 'x' nat            (index >= 1)
    //   rational := ('-')? nat ('/' nat)?
    // Whitespace is insignificant, juxtaposition is not multiplication, and
    // [a,b] abbreviates a*b - b*a. Rejects expressions with a nonzero
    // constant term and expressions that simplify to zero.
    static NcPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    int var_count() const { return var_count_; }
    int degree() const;
    const std::map<Word, Rational>& terms() const { return terms_; }
    Rational coeff(const Word& w) const;

    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    NcPoly operator*(const NcPoly& o) const;
    NcPoly scaled(const Rational& c) const;

    // Equality is on term content. var_count is evaluation-arity metadata:
    // it follows the largest index mentioned at construction and may exceed
    // the largest letter in the surviving terms.
    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    // Canonical text form; parse(str()) reproduces the terms exactly.
    std::string str() const;

private:
    void add_term(const Word& w, const Rational& coeff);

    std::map<Word, Rational> terms_;
    int var_count_ = 0;
};

NcPoly pow(const NcPoly& base, int exponent);
NcPoly commutator(const NcPoly& a, const NcPoly& b);

// Identity on nonzero input; throws zero_polynomial otherwise. Used by
// callers for which a vanishing combination indicates a mistake.
const NcPoly& require_nonzero(const NcPoly& p);

} // namespace waring
