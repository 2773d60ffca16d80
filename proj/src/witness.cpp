#include "waring/witness.hpp"

#include <algorithm>
#include <set>

#include "waring/errors.hpp"
#include "waring/point_search.hpp"

namespace waring {

namespace {

void for_each_word(int m, int len, const std::function<void(const Word&)>& fn) {
    Word w(len, 1);
    while (true) {
        fn(w);
        int l = 0;
        while (l < len && w[l] == m) w[l++] = 1;
        if (l == len) return;
        ++w[l];
    }
}

[[noreturn]] void internal(const std::string& what) {
    throw Error(errc::internal_verification_failure, what);
}

// Shared state of one witness construction: the certificate data, the chosen
// diagonal tuples, and the progressively extended assignment of strict
// entries. Entries absent from `fixed` are still unknown.
struct Builder {
    const NcPoly& p;
    int n;
    int r;
    int m;
    Word word;
    std::set<int> letters;
    std::vector<std::vector<Rational>> tuples;
    PointAssignment fixed;

    Builder(const NcPoly& poly, int size, int order, Word cert)
        : p(poly), n(size), r(order), m(poly.var_count()), word(std::move(cert)),
          letters(word.begin(), word.end()) {}

    void fix_diagonals() {
        for (int j = 1; j <= n; ++j)
            for (int i = 1; i <= m; ++i)
                fixed[SymId::diag(j, i)] = tuples[j - 1][i - 1];
    }

    // Slot tuples for a window starting at row s with final column r+s+t:
    // the diagonals s..r+s-1 followed by the diagonal at r+s+t.
    std::vector<std::vector<Rational>> window_slots(int s, int t) const {
        std::vector<std::vector<Rational>> slots;
        slots.reserve(r + 1);
        for (int j = s; j <= r + s - 1; ++j) slots.push_back(tuples[j - 1]);
        slots.push_back(tuples[r + s + t - 1]);
        return slots;
    }

    // The form f(s, e; t): sum over all words (i_1..i_q), q = e-s, of the
    // coefficient value of (i_1..i_q, suffix of the certificate) on the
    // window slots, times the product of first-superdiagonal entries
    // a_{j,j+1}(i_{j-s+1}) for j = s..e-1. Entries present in `fixed` are
    // substituted; the rest stay symbolic. Key affine structure: the
    // coefficient of the symbol a_{e-1,e}(word[q-1]) in f(s, e; t) equals
    // f(s, e-1; t), which drives the nonvanishing induction across steps.
    CPoly prefix_form(int s, int e, int t) const {
        const auto slots = window_slots(s, t);
        const int q = e - s;
        CPoly acc;
        for_each_word(m, q, [&](const Word& prefix) {
            Word full = word;
            for (int l = 0; l < q; ++l) full[l] = prefix[l];
            Rational scalar = coefficient_value(p, full, slots);
            if (scalar.is_zero()) return;
            Monomial mono;
            for (int l = 0; l < q; ++l) {
                SymId id = SymId::entry(s + l, s + l + 1, prefix[l]);
                auto it = fixed.find(id);
                if (it == fixed.end()) {
                    mono = mono * Monomial::var(id);
                } else {
                    if (it->second.is_zero()) { scalar = Rational(0); break; }
                    scalar *= it->second;
                }
            }
            acc.add_term(mono, scalar);
        });
        return acc;
    }

    std::vector<UTMatrix> assemble() const {
        std::vector<UTMatrix> u(m, UTMatrix(n));
        for (int i = 1; i <= m; ++i) {
            for (int j = 1; j <= n; ++j) u[i - 1].set(j, j, tuples[j - 1][i - 1]);
            for (int j = 1; j <= n; ++j)
                for (int k = j + 1; k <= n; ++k) {
                    auto it = fixed.find(SymId::entry(j, k, i));
                    if (it == fixed.end()) internal("entry left unassigned");
                    u[i - 1].set(j, k, it->second);
                }
        }
        return u;
    }
};

OrderReport checked_order(const NcPoly& p, int order_cap) {
    return compute_order(require_nonzero(p), order_cap);
}

} // namespace

std::vector<std::pair<int, int>> step_order(int n, int r) {
    std::vector<std::pair<int, int>> steps;
    for (int t = 0; t <= n - r - 1; ++t)
        for (int s = 1; s <= n - r - t; ++s) steps.push_back({s, r + s + t});
    return steps;
}

WitnessBundle image_witness(const NcPoly& p, int n, const UTMatrix& target,
                            std::uint64_t seed, int order_cap) {
    if (target.n() != n) throw Error(errc::dimension_mismatch, "target size differs from n");
    const OrderReport rep = checked_order(p, order_cap);
    const int r = rep.order;
    if (r <= 1 || r >= n - 1)
        throw Error(errc::order_out_of_range,
                    "construction needs 1 < order < n-1, got order " + std::to_string(r));
    if (!band_check(target, BandSpec{r - 1}))
        throw Error(errc::target_not_in_band, "target has entries at depth below the order");
    for (int s = 1; s <= n - r; ++s)
        if (target.get(s, r + s).is_zero())
            throw Error(errc::zero_on_r_diagonal,
                        "target depth-r diagonal vanishes at (" + std::to_string(s) + "," +
                            std::to_string(r + s) + "); use the sum decomposition");

    Builder b(p, n, r, *rep.certificate);
    SplitMix64 seeds(seed);

    // Diagonal tuples keeping the certificate's coefficient polynomial
    // nonzero under every increasing relabelling of its r+1 slots.
    b.tuples = subset_tuple_point(coefficient_poly(p, b.word), r + 1, b.m, n, seeds.next());
    b.fix_diagonals();

    // Sparsity pattern: rows 1..r-1 carry free first-superdiagonal entries,
    // rows r..n-1 carry unknowns for the certificate letters, everything
    // else is pinned to zero.
    for (int j = 1; j <= n - 1; ++j)
        for (int k = j + 1; k <= n; ++k)
            for (int i = 1; i <= b.m; ++i) {
                if (j <= r - 1 && k == j + 1) continue;
                if (j >= r && b.letters.count(i)) continue;
                b.fixed[SymId::entry(j, k, i)] = Rational(0);
            }

    // Free-row pass: one point making every window form over the free rows
    // nonzero, for every admissible final column.
    {
        std::vector<CPoly> forms;
        for (int s = 1; s <= std::min(r - 1, n - r); ++s)
            for (int t = 0; t <= n - r - s; ++t) forms.push_back(b.prefix_form(s, r, t));
        std::vector<SymId> vars;
        for (int j = 1; j <= r - 1; ++j)
            for (int i = 1; i <= b.m; ++i) vars.push_back(SymId::entry(j, j + 1, i));
        for (auto& [id, value] : nonvanishing_point(forms, vars, seeds.next()))
            b.fixed[id] = value;
    }

    const int last = b.word[r - 1];

    // Depth-r sweep: solve entry (s, r+s) for the row r+s-1 unknowns while
    // keeping all window forms of later steps nonzero, so their pivots stay
    // available.
    for (int s = 1; s <= n - r; ++s) {
        std::set<SymId> current;
        for (int v : b.letters) current.insert(SymId::entry(r + s - 1, r + s, v));

        CPoly slice = entry_polynomial(p, n, s, r + s, b.fixed);
        for (const auto& id : slice.support())
            if (!current.count(id)) internal("depth-r slice leaks symbol " + id.str());
        if (!slice.is_affine() || !slice.constant_term().is_zero())
            internal("depth-r slice is not a zero-constant affine form");

        std::vector<AffineForm> sides;
        for (int s2 = s + 1; s2 <= std::min(s + r - 1, n - r); ++s2)
            for (int t2 = 0; t2 <= n - r - s2; ++t2) {
                AffineForm side = AffineForm::from_cpoly(b.prefix_form(s2, r + s, t2));
                if (!side.constant.is_zero() || !side.has_coeffs())
                    internal("window form degenerated at step " + std::to_string(s));
                sides.push_back(std::move(side));
            }

        PointAssignment sol =
            constrained_linear_solve(AffineForm::from_cpoly(slice), target.get(s, r + s),
                                     sides, SymId::entry(r + s - 1, r + s, last), seeds.next());
        for (const auto& id : current) {
            auto it = sol.find(id);
            b.fixed[id] = it == sol.end() ? Rational(0) : it->second;
        }
    }

    // Deeper diagonals: all previous choices make the pivot coefficient a
    // known nonzero number, so each entry is a single division. Non-pivot
    // unknowns are pinned to zero.
    for (int t = 1; t <= n - r - 1; ++t)
        for (int s = 1; s <= n - r - t; ++s) {
            CPoly slice = entry_polynomial(p, n, s, r + s + t, b.fixed);
            const SymId pivot = SymId::entry(r + s - 1, r + s + t, last);
            for (int v : b.letters)
                if (v != last) b.fixed[SymId::entry(r + s - 1, r + s + t, v)] = Rational(0);
            slice = slice.substitute(b.fixed);
            for (const auto& id : slice.support())
                if (id != pivot) internal("deep slice leaks symbol " + id.str());
            const Rational gamma = slice.coeff_of(pivot);
            if (gamma.is_zero()) internal("deep pivot coefficient vanished");
            b.fixed[pivot] = (target.get(s, r + s + t) - slice.constant_term()) / gamma;
        }

    WitnessBundle bundle{p, n, WitnessMode::single, {b.assemble()}, target, false, seed};
    if (mat_eval(p, bundle.tuples[0]) != target) internal("witness evaluation mismatch");
    bundle.verified = true;
    return bundle;
}

WitnessBundle decompose_sum(const NcPoly& p, int n, const UTMatrix& target,
                            std::uint64_t seed, int order_cap) {
    if (target.n() != n) throw Error(errc::dimension_mismatch, "target size differs from n");
    const OrderReport rep = checked_order(p, order_cap);
    const int r = rep.order;
    if (r <= 1 || r >= n - 1)
        throw Error(errc::order_out_of_range,
                    "decomposition needs 1 < order < n-1, got order " + std::to_string(r));
    if (!band_check(target, BandSpec{r - 1}))
        throw Error(errc::target_not_in_band, "target has entries at depth below the order");

    SplitMix64 seeds(seed);

    // Split so both halves have a depth-r diagonal without zeros; the first
    // half also takes every deeper entry of the target.
    UTMatrix first(n), second(n);
    for (int s = 1; s <= n - r; ++s) {
        const Rational a = target.get(s, r + s);
        Rational x;
        do {
            x = Rational(static_cast<long>(seeds.in_range(1, 64)));
        } while (x == a);
        first.set(s, r + s, x);
        second.set(s, r + s, a - x);
    }
    for (const auto& [pos, value] : target.entries())
        if (pos.second - pos.first > r) first.set(pos.first, pos.second, value);

    WitnessBundle wa = image_witness(p, n, first, seeds.next(), order_cap);
    WitnessBundle wb = image_witness(p, n, second, seeds.next(), order_cap);

    WitnessBundle bundle{p,    n,      WitnessMode::sum, {wa.tuples[0], wb.tuples[0]},
                         target, false, seed};
    if (mat_eval(p, bundle.tuples[0]) + mat_eval(p, bundle.tuples[1]) != target)
        internal("sum decomposition mismatch");
    bundle.verified = true;
    return bundle;
}

WitnessBundle witness_corner_case(const NcPoly& p, int n, const UTMatrix& target,
                                  std::uint64_t seed, int order_cap) {
    if (target.n() != n) throw Error(errc::dimension_mismatch, "target size differs from n");
    if (n < 4) throw Error(errc::bad_input, "corner construction needs n >= 4");
    const OrderReport rep = checked_order(p, order_cap);
    const int r = rep.order;
    if (r != n - 2)
        throw Error(errc::order_mismatch,
                    "corner construction needs order n-2, got " + std::to_string(r));
    if (!band_check(target, BandSpec{n - 3}))
        throw Error(errc::target_not_in_band, "target has entries at depth below n-2");

    Builder b(p, n, r, *rep.certificate);
    SplitMix64 seeds(seed);
    b.tuples = subset_tuple_point(coefficient_poly(p, b.word), r + 1, b.m, n, seeds.next());
    b.fix_diagonals();

    const int head = b.word[0];
    const int tail = b.word[r - 1];
    const Rational a1 = target.get(1, n - 1);
    const Rational a2 = target.get(2, n);
    const Rational a3 = target.get(1, n);

    auto slots_for = [&](const std::vector<int>& cols) {
        std::vector<std::vector<Rational>> slots;
        slots.reserve(cols.size());
        for (int c : cols) slots.push_back(b.tuples[c - 1]);
        return slots;
    };
    auto cols_range = [](int from, int to) {
        std::vector<int> cols;
        for (int c = from; c <= to; ++c) cols.push_back(c);
        return cols;
    };
    auto zero_all_entries = [&] {
        for (int j = 1; j <= n - 1; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int i = 1; i <= b.m; ++i) b.fixed[SymId::entry(j, k, i)] = Rational(0);
    };
    auto interior_vars = [&](int row_from, int row_to) {
        std::vector<SymId> vars;
        for (int j = row_from; j <= row_to; ++j)
            for (int i = 1; i <= b.m; ++i) vars.push_back(SymId::entry(j, j + 1, i));
        return vars;
    };
    auto interior_monomial = [](const Word& w, int row_from) {
        Monomial mono;
        for (std::size_t l = 0; l < w.size(); ++l)
            mono = mono * Monomial::var(SymId::entry(row_from + static_cast<int>(l),
                                                     row_from + static_cast<int>(l) + 1, w[l]));
        return mono;
    };

    std::vector<UTMatrix> u;
    if (!a1.is_zero()) {
        // Full-depth layout: the chain (1,2), free rows 2..n-2, then (n-1,n)
        // and the jump (n-2,n), all carrying certificate letters at the ends.
        CPoly f_top;  // entry (1, n-1), divided by the (1,2) unknown
        CPoly f_low;  // entry (2, n), divided by the (n-1,n) unknown
        CPoly f_jump; // jump part of entry (1, n), divided by both end unknowns
        CPoly f_full; // unit-path part of entry (1, n), divided likewise
        for_each_word(b.m, n - 3, [&](const Word& w) {
            Word top = w, low = w, full = w;
            top.insert(top.begin(), head);
            low.push_back(tail);
            full.insert(full.begin(), head);
            full.push_back(tail);
            const Monomial mono = interior_monomial(w, 2);
            f_top.add_term(mono, coefficient_value(p, top, slots_for(cols_range(1, n - 1))));
            f_low.add_term(mono, coefficient_value(p, low, slots_for(cols_range(2, n))));
            f_full.add_term(mono, coefficient_value(p, full, slots_for(cols_range(1, n))));
        });
        for_each_word(b.m, n - 4, [&](const Word& w) {
            Word jump = w;
            jump.insert(jump.begin(), head);
            jump.push_back(tail);
            std::vector<int> cols = cols_range(1, n - 2);
            cols.push_back(n);
            f_jump.add_term(interior_monomial(w, 2), coefficient_value(p, jump, slots_for(cols)));
        });

        PointAssignment point =
            nonvanishing_point({f_top, f_low, f_jump}, interior_vars(2, n - 2), seeds.next());

        const Rational x_head = a1 / f_top.eval(point);
        const Rational x_tail = a2 / f_low.eval(point);
        const Rational x_jump =
            (a3 - f_full.eval(point) * x_head * x_tail) / (f_jump.eval(point) * x_head);

        zero_all_entries();
        for (const auto& [id, value] : point) b.fixed[id] = value;
        b.fixed[SymId::entry(1, 2, head)] = x_head;
        b.fixed[SymId::entry(n - 1, n, tail)] = x_tail;
        b.fixed[SymId::entry(n - 2, n, tail)] = x_jump;
    } else {
        // Shifted layout for a vanishing (1, n-1) entry: the chain starts at
        // (2,3) with a companion jump (1,3); entry (1, n-1) stays zero
        // because every route to it is cut.
        CPoly g_low;  // entry (2, n), divided by the (2,3) unknown
        CPoly g_jump; // entry (1, n), divided by the (1,3) unknown
        for_each_word(b.m, n - 3, [&](const Word& w) {
            Word full = w;
            full.insert(full.begin(), head);
            const Monomial mono = interior_monomial(w, 3);
            g_low.add_term(mono, coefficient_value(p, full, slots_for(cols_range(2, n))));
            std::vector<int> cols{1};
            for (int c = 3; c <= n; ++c) cols.push_back(c);
            g_jump.add_term(mono, coefficient_value(p, full, slots_for(cols)));
        });

        PointAssignment point =
            nonvanishing_point({g_low, g_jump}, interior_vars(3, n - 1), seeds.next());

        zero_all_entries();
        for (const auto& [id, value] : point) b.fixed[id] = value;
        b.fixed[SymId::entry(2, 3, head)] = a2 / g_low.eval(point);
        b.fixed[SymId::entry(1, 3, head)] = a3 / g_jump.eval(point);
    }

    WitnessBundle bundle{p, n, WitnessMode::single, {b.assemble()}, target, false, seed};
    if (mat_eval(p, bundle.tuples[0]) != target) internal("corner witness evaluation mismatch");
    bundle.verified = true;
    return bundle;
}

bool verify_bundle(WitnessBundle& bundle) {
    require_nonzero(bundle.poly);
    const std::size_t expected = bundle.mode == WitnessMode::single ? 1 : 2;
    if (bundle.tuples.size() != expected)
        throw Error(errc::bad_input, "tuple count does not match mode");
    if (bundle.target.n() != bundle.n)
        throw Error(errc::dimension_mismatch, "target size differs from n");
    for (const auto& tuple : bundle.tuples)
        for (const auto& mat : tuple)
            if (mat.n() != bundle.n)
                throw Error(errc::dimension_mismatch, "tuple matrix size differs from n");

    UTMatrix acc(bundle.n);
    for (const auto& tuple : bundle.tuples) acc += mat_eval(bundle.poly, tuple);
    bundle.verified = acc == bundle.target;
    return bundle.verified;
}

} // namespace waring
