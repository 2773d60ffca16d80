#pragma once

#include <map>
#include <set>
#include <string>

#include "waring/rational.hpp"
#include "waring/symbols.hpp"

namespace waring {

using PointAssignment = std::map<SymId, Rational>;

// Commutative polynomial with rational coefficients in SymId unknowns.
// Terms are kept in a map keyed by monomial; zero coefficients are never
// stored, so the zero polynomial is the empty map and equality is structural.
class CPoly {
public:
    CPoly() = default;

    static CPoly zero() { return CPoly(); }
    static CPoly constant(const Rational& c);
    static CPoly var(SymId id);

    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    void add_term(const Monomial& mono, const Rational& coeff);

    CPoly& operator+=(const CPoly& o);
    CPoly& operator-=(const CPoly& o);
    friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
    friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
    CPoly operator*(const CPoly& o) const;
    CPoly operator-() const;
    CPoly scaled(const Rational& c) const;

    bool operator==(const CPoly&) const = default;

    // Full evaluation; every symbol in the support must be assigned.
    Rational eval(const PointAssignment& point) const;

    // Partial evaluation; unassigned symbols stay symbolic.
    CPoly substitute(const PointAssignment& partial) const;

    // Symbol-for-symbol renaming; ids missing from the map are kept.
    CPoly rename(const std::map<SymId, SymId>& map) const;

    std::set<SymId> support() const;

    // Affine views (degree <= 1). coeff_of/constant_term work on any poly.
    bool is_affine() const { return total_degree() <= 1; }
    Rational constant_term() const;
    Rational coeff_of(SymId id) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

} // namespace waring
