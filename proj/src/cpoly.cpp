#include "waring/cpoly.hpp"

#include <algorithm>

namespace waring {

CPoly CPoly::constant(const Rational& c) {
    CPoly p;
    if (!c.is_zero()) p.terms_[Monomial::one()] = c;
    return p;
}

CPoly CPoly::var(SymId id) {
    CPoly p;
    p.terms_[Monomial::var(id)] = Rational(1);
    return p;
}

int CPoly::total_degree() const {
    int d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

void CPoly::add_term(const Monomial& mono, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

CPoly& CPoly::operator+=(const CPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

CPoly CPoly::operator*(const CPoly& o) const {
    CPoly out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

CPoly CPoly::operator-() const {
    CPoly out;
    for (const auto& [mono, c] : terms_) out.terms_[mono] = -c;
    return out;
}

CPoly CPoly::scaled(const Rational& c) const {
    CPoly out;
    if (c.is_zero()) return out;
    for (const auto& [mono, coeff] : terms_) out.terms_[mono] = coeff * c;
    return out;
}

Rational CPoly::eval(const PointAssignment& point) const {
    Rational acc;
    for (const auto& [mono, coeff] : terms_) {
        Rational term = coeff;
        for (const auto& [id, e] : mono.factors) {
            auto it = point.find(id);
            if (it == point.end())
                throw Error(errc::missing_assignment, "no value for " + id.str());
            for (int k = 0; k < e; ++k) term *= it->second;
        }
        acc += term;
    }
    return acc;
}

CPoly CPoly::substitute(const PointAssignment& partial) const {
    CPoly out;
    for (const auto& [mono, coeff] : terms_) {
        Rational scalar = coeff;
        Monomial rest;
        for (const auto& [id, e] : mono.factors) {
            auto it = partial.find(id);
            if (it == partial.end()) {
                rest.factors.push_back({id, e});
            } else {
                for (int k = 0; k < e; ++k) scalar *= it->second;
                if (scalar.is_zero()) break;
            }
        }
        if (!scalar.is_zero()) out.add_term(rest, scalar);
    }
    return out;
}

CPoly CPoly::rename(const std::map<SymId, SymId>& map) const {
    CPoly out;
    for (const auto& [mono, coeff] : terms_) {
        // Renaming may reorder or merge factors, so rebuild the monomial.
        Monomial renamed;
        for (const auto& [id, e] : mono.factors) {
            auto it = map.find(id);
            SymId target = (it == map.end()) ? id : it->second;
            renamed = renamed * Monomial{{{target, e}}};
        }
        out.add_term(renamed, coeff);
    }
    return out;
}

std::set<SymId> CPoly::support() const {
    std::set<SymId> ids;
    for (const auto& [mono, c] : terms_)
        for (const auto& [id, e] : mono.factors) ids.insert(id);
    return ids;
}

Rational CPoly::constant_term() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational CPoly::coeff_of(SymId id) const {
    auto it = terms_.find(Monomial::var(id));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string CPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [mono, coeff] : terms_) {
        const bool leading = s.empty();
        const Rational mag = coeff.sign() < 0 ? -coeff : coeff;
        if (leading)
            s += coeff.sign() < 0 ? "-" : "";
        else
            s += coeff.sign() < 0 ? " - " : " + ";
        if (mono.is_one())
            s += mag.to_string();
        else if (mag == Rational(1))
            s += mono.str();
        else
            s += mag.to_string() + "*" + mono.str();
    }
    return s;
}

} // namespace waring
