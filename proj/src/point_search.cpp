#include "waring/point_search.hpp"

#include <algorithm>

#include "waring/errors.hpp"

namespace waring {

namespace {

bool all_nonzero(const std::vector<CPoly>& polys, const PointAssignment& point) {
    for (const auto& p : polys)
        if (p.eval(point).is_zero()) return false;
    return true;
}

} // namespace

PointAssignment nonvanishing_point(const std::vector<CPoly>& polys,
                                   const std::vector<SymId>& vars,
                                   std::uint64_t seed) {
    for (const auto& p : polys)
        if (p.is_zero())
            throw Error(errc::zero_polynomial_input,
                        "a zero polynomial is never nonvanishing");
    for (const auto& p : polys)
        for (const auto& id : p.support())
            if (std::find(vars.begin(), vars.end(), id) == vars.end())
                throw Error(errc::missing_assignment,
                            "variable list does not cover " + id.str());

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < 32; ++attempt) {
        PointAssignment point;
        for (const auto& id : vars)
            point[id] = Rational(static_cast<long>(rng.in_range(1, 64)));
        if (all_nonzero(polys, point)) return point;
    }

    // Deterministic fallback: a product of nonzero polynomials of total
    // degree D cannot vanish on all of {1..D+1}^vars, so the scan terminates.
    long degree_sum = 0;
    for (const auto& p : polys) degree_sum += p.total_degree();
    const long width = degree_sum + 1;

    std::vector<long> odo(vars.size(), 1);
    while (true) {
        PointAssignment point;
        for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = Rational(odo[i]);
        if (all_nonzero(polys, point)) return point;
        std::size_t i = 0;
        while (i < odo.size() && odo[i] == width) odo[i++] = 1;
        if (i == odo.size())
            throw Error(errc::internal_verification_failure,
                        "grid scan exhausted without a nonvanishing point");
        ++odo[i];
    }
}

std::vector<std::vector<Rational>> subset_tuple_point(const CPoly& P, int slot_count,
                                                      int m, int n, std::uint64_t seed) {
    if (P.is_zero()) throw Error(errc::zero_polynomial_input, "zero slot polynomial");
    if (slot_count < 1 || m < 1 || n < slot_count)
        throw Error(errc::bad_input, "need n >= slot_count >= 1 and m >= 1");
    for (const auto& id : P.support())
        if (id.role != SymRole::diag || id.row > slot_count || id.var > m)
            throw Error(errc::bad_input, "slot polynomial mentions " + id.str());

    // One renamed copy of P per increasing subset of {1..n}; a single point
    // must keep all of them nonzero simultaneously.
    std::vector<CPoly> instances;
    std::vector<int> subset(slot_count);
    for (int l = 0; l < slot_count; ++l) subset[l] = l + 1;
    while (true) {
        std::map<SymId, SymId> rename;
        for (int l = 1; l <= slot_count; ++l)
            for (int i = 1; i <= m; ++i)
                rename[SymId::diag(l, i)] = SymId::diag(subset[l - 1], i);
        instances.push_back(P.rename(rename));

        int l = slot_count - 1;
        while (l >= 0 && subset[l] == n - (slot_count - 1 - l)) --l;
        if (l < 0) break;
        ++subset[l];
        for (int j = l + 1; j < slot_count; ++j) subset[j] = subset[j - 1] + 1;
    }

    std::vector<SymId> vars;
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) vars.push_back(SymId::diag(j, i));

    PointAssignment point = nonvanishing_point(instances, vars, seed);

    std::vector<std::vector<Rational>> tuples(n, std::vector<Rational>(m));
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) tuples[j - 1][i - 1] = point.at(SymId::diag(j, i));
    return tuples;
}

AffineForm AffineForm::from_cpoly(const CPoly& p) {
    if (!p.is_affine())
        throw Error(errc::bad_input, "polynomial of degree > 1 is not an affine form");
    AffineForm f;
    f.constant = p.constant_term();
    for (const auto& [mono, coeff] : p.terms())
        if (!mono.is_one()) f.coeffs[mono.factors[0].first] = coeff;
    return f;
}

CPoly AffineForm::to_cpoly() const {
    CPoly p = CPoly::constant(constant);
    for (const auto& [id, c] : coeffs) p += CPoly::var(id).scaled(c);
    return p;
}

Rational AffineForm::eval(const PointAssignment& point) const {
    Rational acc = constant;
    for (const auto& [id, c] : coeffs) {
        auto it = point.find(id);
        if (it == point.end())
            throw Error(errc::missing_assignment, "no value for " + id.str());
        acc += c * it->second;
    }
    return acc;
}

Rational AffineForm::coeff_of(SymId id) const {
    auto it = coeffs.find(id);
    return it == coeffs.end() ? Rational(0) : it->second;
}

PointAssignment constrained_linear_solve(const AffineForm& target, const Rational& b,
                                         const std::vector<AffineForm>& keep_nonzero,
                                         SymId pivot, std::uint64_t seed) {
    if (b.is_zero()) throw Error(errc::target_zero, "right-hand side is zero");
    if (!target.constant.is_zero())
        throw Error(errc::bad_input, "target form must have zero constant");
    const Rational a11 = target.coeff_of(pivot);
    if (a11.is_zero())
        throw Error(errc::pivot_zero, "target form has zero pivot coefficient");
    for (const auto& side : keep_nonzero) {
        if (!side.constant.is_zero())
            throw Error(errc::degenerate_side_form, "side form with nonzero constant");
        if (!side.has_coeffs())
            throw Error(errc::degenerate_side_form, "side form with no coefficients");
    }

    std::vector<SymId> free_vars;
    {
        std::set<SymId> ids;
        for (const auto& [id, c] : target.coeffs) ids.insert(id);
        for (const auto& side : keep_nonzero)
            for (const auto& [id, c] : side.coeffs) ids.insert(id);
        ids.erase(pivot);
        free_vars.assign(ids.begin(), ids.end());
    }

    PointAssignment point;
    if (!free_vars.empty()) {
        // Substituting the pivot's value out of each side form leaves
        // polynomials in the free variables only; a common nonvanishing
        // point of those is exactly what keeps the sides nonzero.
        std::vector<CPoly> shifted;
        for (const auto& side : keep_nonzero) {
            const Rational lead = side.coeff_of(pivot);
            CPoly f;
            if (!lead.is_zero()) f += CPoly::constant(lead * b / a11);
            for (const auto& [id, c] : side.coeffs) {
                if (id == pivot) continue;
                f += CPoly::var(id).scaled(c - lead * target.coeff_of(id) / a11);
            }
            if (f.is_zero())
                throw Error(errc::degenerate_side_form,
                            "side form vanishes identically on the solution set");
            shifted.push_back(std::move(f));
        }
        point = nonvanishing_point(shifted, free_vars, seed);
    }

    Rational residue = b;
    for (const auto& [id, c] : target.coeffs) {
        if (id == pivot) continue;
        residue -= c * point.at(id);
    }
    point[pivot] = residue / a11;

    if (target.eval(point) != b)
        throw Error(errc::internal_verification_failure, "solve left a residual");
    for (const auto& side : keep_nonzero)
        if (side.eval(point).is_zero())
            throw Error(errc::internal_verification_failure, "side form vanished");
    return point;
}

} // namespace waring
