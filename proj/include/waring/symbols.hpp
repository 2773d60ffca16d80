#pragma once

#include <compare>
#include <string>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

enum class SymRole : int { diag = 0, entry = 1 };

// One scalar unknown of a generic upper triangular matrix tuple:
// either a diagonal slot z_row(var) or a strict entry a_{row,col}(var),
// where var is the 1-based index of the matrix variable it belongs to.
// Ordering is lexicographic on (role, row, col, var).
struct SymId {
    SymRole role;
    int row;
    int col;
    int var;

    auto operator<=>(const SymId&) const = default;

    static SymId diag(int j, int i) {
        if (j < 1 || i < 1)
            throw Error(errc::bad_input, "diagonal symbol needs row >= 1, var >= 1");
        return SymId{SymRole::diag, j, j, i};
    }

    static SymId entry(int j, int k, int i) {
        if (j < 1 || k <= j || i < 1)
            throw Error(errc::bad_input, "entry symbol needs 1 <= row < col, var >= 1");
        return SymId{SymRole::entry, j, k, i};
    }

    std::string str() const {
        if (role == SymRole::diag)
            return "z" + std::to_string(row) + "(" + std::to_string(var) + ")";
        return "a" + std::to_string(row) + "," + std::to_string(col) +
               "(" + std::to_string(var) + ")";
    }
};

// Power product of SymIds, kept sorted with positive exponents.
struct Monomial {
    std::vector<std::pair<SymId, int>> factors;

    auto operator<=>(const Monomial&) const = default;

    static Monomial one() { return Monomial{}; }

    static Monomial var(SymId id) { return Monomial{{{id, 1}}}; }

    bool is_one() const { return factors.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [id, e] : factors) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial out;
        auto a = factors.begin(), b = o.factors.begin();
        while (a != factors.end() && b != o.factors.end()) {
            if (a->first < b->first) out.factors.push_back(*a++);
            else if (b->first < a->first) out.factors.push_back(*b++);
            else {
                out.factors.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        out.factors.insert(out.factors.end(), a, factors.end());
        out.factors.insert(out.factors.end(), b, o.factors.end());
        return out;
    }

    std::string str() const {
        if (factors.empty()) return "1";
        std::string s;
        for (const auto& [id, e] : factors) {
            if (!s.empty()) s += "*";
            s += id.str();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

} // namespace waring
