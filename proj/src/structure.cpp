#include "waring/structure.hpp"

#include <algorithm>

#include "waring/errors.hpp"

namespace waring {

CPoly commutative_image(const NcPoly& p) {
    CPoly acc;
    for (const auto& [word, coeff] : p.terms()) {
        Monomial mono;
        for (int letter : word) mono = mono * Monomial::var(SymId::diag(1, letter));
        acc.add_term(mono, coeff);
    }
    return acc;
}

std::map<Word, CPoly> coefficient_table(const NcPoly& p, int k) {
    if (k < 1) throw Error(errc::bad_input, "word length must be >= 1");
    const CPoly corner = entry_polynomial(p, k + 1, 1, k + 1, {});

    // A monomial of the (1, k+1) entry contributes to a length-k coefficient
    // polynomial exactly when its strict-entry part is the full unit path
    // a_{1,2} a_{2,3} ... a_{k,k+1}; the letters along the path spell the word
    // and the diagonal part is the monomial that survives.
    std::map<Word, CPoly> table;
    for (const auto& [mono, coeff] : corner.terms()) {
        Word word(k, 0);
        Monomial diag_part;
        int path_steps = 0;
        bool unit_path = true;
        for (const auto& [id, e] : mono.factors) {
            if (id.role == SymRole::diag) {
                diag_part.factors.push_back({id, e});
                continue;
            }
            if (id.col != id.row + 1 || e != 1 || word[id.row - 1] != 0) {
                unit_path = false;
                break;
            }
            word[id.row - 1] = id.var;
            ++path_steps;
        }
        if (!unit_path || path_steps != k) continue;
        table[word].add_term(diag_part, coeff);
    }

    for (auto it = table.begin(); it != table.end();)
        it = it->second.is_zero() ? table.erase(it) : std::next(it);
    return table;
}

CPoly coefficient_poly(const NcPoly& p, const Word& word) {
    if (word.empty()) throw Error(errc::bad_input, "empty word");
    auto table = coefficient_table(p, static_cast<int>(word.size()));
    auto it = table.find(word);
    return it == table.end() ? CPoly::zero() : it->second;
}

Rational coefficient_value(const NcPoly& p, const Word& word,
                           const std::vector<std::vector<Rational>>& slots) {
    const int k = static_cast<int>(word.size());
    if (static_cast<int>(slots.size()) != k + 1)
        throw Error(errc::bad_input, "need one slot tuple per word position plus one");

    auto slot_value = [&](int slot, int letter) -> const Rational& {
        if (letter > static_cast<int>(slots[slot].size()))
            throw Error(errc::missing_assignment, "slot tuple too short for letter");
        return slots[slot][letter - 1];
    };

    Rational acc;
    for (const auto& [w, coeff] : p.terms()) {
        const int len = static_cast<int>(w.size());
        if (len < k) continue;
        // dp[j] after scanning a prefix: sum over embeddings of the first j
        // word letters into that prefix, of the product of slot values of the
        // absorbed letters. Absorbed letters between matches j and j+1 read
        // from slot j+1.
        std::vector<Rational> dp(k + 1);
        dp[0] = Rational(1);
        for (int pos = 0; pos < len; ++pos) {
            const int letter = w[pos];
            for (int j = std::min(pos, k); j >= 0; --j) {
                Rational absorbed = dp[j] * slot_value(j, letter);
                if (j < k && letter == word[j])
                    dp[j + 1] += dp[j];
                dp[j] = std::move(absorbed);
            }
        }
        acc += coeff * dp[k];
    }
    return acc;
}

OrderReport compute_order(const NcPoly& p, int cap) {
    if (p.is_zero()) throw Error(errc::zero_polynomial_input, "order of zero polynomial");
    if (cap < 0) throw Error(errc::bad_input, "cap must be >= 0");

    if (!commutative_image(p).is_zero()) return OrderReport{0, std::nullopt, 1};

    const int degree = p.degree();
    for (int k = 1; k <= std::min(cap, degree); ++k) {
        auto table = coefficient_table(p, k);
        if (table.empty()) continue;
        // Keys are same-length words under std::map's lexicographic order,
        // so the first entry is the least certificate.
        return OrderReport{k, table.begin()->first, k + 1};
    }
    if (degree <= cap)
        throw Error(errc::internal_verification_failure,
                    "no certificate up to the degree of a nonzero polynomial");
    throw Error(errc::order_exceeds_cap,
                "order exceeds cap " + std::to_string(cap));
}

} // namespace waring
