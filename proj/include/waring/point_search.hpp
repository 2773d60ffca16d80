#pragma once

#include <cstdint>
#include <vector>

#include "waring/cpoly.hpp"

namespace waring {

// SplitMix64 stream; fixed algorithm so seeded runs reproduce across
// platforms and standard library versions.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform over {lo, ..., hi} via rejection.
    std::uint64_t in_range(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return lo + v % span;
    }
};

// A common point where every given polynomial is nonzero. Tries 32 seeded
// random assignments with coordinates in {1..64}; if all fail, falls back to
// scanning the grid {1..D+1}^vars where D is the sum of the total degrees,
// which must contain such a point. The returned assignment covers exactly
// `vars` and is re-checked by evaluation before returning.
PointAssignment nonvanishing_point(const std::vector<CPoly>& polys,
                                   const std::vector<SymId>& vars,
                                   std::uint64_t seed);

// Diagonal tuples c_1..c_n in Q^m such that P stays nonzero under every
// instantiation of its slot rows 1..slot_count by an increasing subset of
// {1..n}. P lives in the symbols diag(l, i), l <= slot_count, i <= m.
std::vector<std::vector<Rational>> subset_tuple_point(const CPoly& P, int slot_count,
                                                      int m, int n, std::uint64_t seed);

// Degree-one form over SymIds.
struct AffineForm {
    std::map<SymId, Rational> coeffs;
    Rational constant;

    static AffineForm from_cpoly(const CPoly& p);
    CPoly to_cpoly() const;
    Rational eval(const PointAssignment& point) const;
    Rational coeff_of(SymId id) const;
    bool has_coeffs() const { return !coeffs.empty(); }
};

// Solves target = b for the pivot variable while keeping every form in
// keep_nonzero away from zero. target and the side forms must have zero
// constant; the pivot coefficient of target and b must be nonzero; each side
// form needs at least one nonzero coefficient. Free variables are chosen by
// seeded search, the pivot by exact back substitution, and the whole
// solution is re-verified before returning.
PointAssignment constrained_linear_solve(const AffineForm& target, const Rational& b,
                                         const std::vector<AffineForm>& keep_nonzero,
                                         SymId pivot, std::uint64_t seed);

} // namespace waring
