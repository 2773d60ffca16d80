#include "waring/ncpoly.hpp"

#include <algorithm>

#include "waring/errors.hpp"

namespace waring {

namespace {

// During parsing the constant term is carried as the empty word; NcPoly
// itself never stores one.
using Terms = std::map<Word, Rational>;

void t_add(Terms& acc, const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = acc.find(w);
    if (it == acc.end()) {
        acc.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

Terms t_combine(const Terms& a, const Terms& b, int sign) {
    Terms out = a;
    for (const auto& [w, c] : b) t_add(out, w, sign < 0 ? -c : c);
    return out;
}

Terms t_mul(const Terms& a, const Terms& b) {
    Terms out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            t_add(out, w, ca * cb);
        }
    return out;
}

Terms t_pow(const Terms& a, long e) {
    Terms out{{Word{}, Rational(1)}};
    for (long i = 0; i < e; ++i) out = t_mul(out, a);
    return out;
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int max_var = 0;

    [[noreturn]] void fail(const std::string& what) {
        throw Error(errc::syntax_error,
                    what + " at offset " + std::to_string(pos) + " in '" + s + "'");
    }

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' ||
                                  s[pos] == '\n' || s[pos] == '\r'))
            ++pos;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    bool at_digit() {
        char c = peek();
        return c >= '0' && c <= '9';
    }

    // Maximal run of digits, no internal whitespace.
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }

    long small_nat(const char* what) {
        std::string d = digits();
        if (d.size() > 7) fail(std::string(what) + " out of range");
        return std::stol(d);
    }

    Terms parse_poly() {
        Terms acc = parse_term();
        while (true) {
            if (consume('+'))
                acc = t_combine(acc, parse_term(), +1);
            else if (consume('-'))
                acc = t_combine(acc, parse_term(), -1);
            else
                return acc;
        }
    }

    Terms parse_term() {
        Terms acc = parse_factor();
        while (consume('*')) acc = t_mul(acc, parse_factor());
        return acc;
    }

    Terms parse_factor() {
        Terms base = parse_base();
        if (consume('^')) {
            long e = small_nat("exponent");
            return t_pow(base, e);
        }
        return base;
    }

    Terms parse_base() {
        char c = peek();
        if (c == 'x') {
            ++pos;
            if (pos >= s.size() || s[pos] < '0' || s[pos] > '9')
                fail("expected variable index after 'x'");
            long idx = small_nat("variable index");
            if (idx < 1) fail("variable index must be >= 1");
            max_var = std::max(max_var, static_cast<int>(idx));
            return Terms{{Word{static_cast<int>(idx)}, Rational(1)}};
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            std::string text;
            if (c == '-') {
                ++pos;
                text = "-";
            }
            if (pos >= s.size() || s[pos] < '0' || s[pos] > '9')
                fail("expected digits");
            text += digits();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                if (pos >= s.size() || s[pos] < '0' || s[pos] > '9')
                    fail("expected denominator digits");
                std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos)
                    fail("zero denominator");
                text += "/" + den;
            }
            mpq_class q(text);
            q.canonicalize();
            Terms out;
            t_add(out, Word{}, Rational(std::move(q)));
            return out;
        }
        if (consume('(')) {
            Terms inner = parse_poly();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (consume('[')) {
            Terms a = parse_poly();
            if (!consume(',')) fail("expected ',' in commutator");
            Terms b = parse_poly();
            if (!consume(']')) fail("expected ']'");
            return t_combine(t_mul(a, b), t_mul(b, a), -1);
        }
        fail("expected variable, number, '(' or '['");
    }
};

} // namespace

NcPoly NcPoly::var(int index) {
    if (index < 1) throw Error(errc::bad_input, "variable index must be >= 1");
    NcPoly p;
    p.terms_[Word{index}] = Rational(1);
    p.var_count_ = index;
    return p;
}

NcPoly NcPoly::from_terms(std::map<Word, Rational> terms) {
    NcPoly p;
    for (const auto& [w, c] : terms) {
        if (w.empty()) throw Error(errc::bad_input, "empty word in term map");
        for (int letter : w)
            if (letter < 1) throw Error(errc::bad_input, "letters must be >= 1");
        if (c.is_zero()) continue;
        p.terms_.emplace(w, c);
        p.var_count_ = std::max(p.var_count_, *std::max_element(w.begin(), w.end()));
    }
    return p;
}

NcPoly NcPoly::parse(const std::string& text) {
    Parser parser{text};
    Terms terms = parser.parse_poly();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("unexpected trailing input");

    auto it = terms.find(Word{});
    if (it != terms.end())
        throw Error(errc::nonzero_constant_term,
                    "expression has constant term " + it->second.to_string());
    if (terms.empty())
        throw Error(errc::zero_polynomial, "expression simplifies to zero");

    NcPoly p = from_terms(std::move(terms));
    // The variable count follows the largest index mentioned in the text,
    // even if every term containing it cancelled.
    p.var_count_ = std::max(p.var_count_, parser.max_var);
    return p;
}

int NcPoly::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return static_cast<int>(d);
}

Rational NcPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcPoly::add_term(const Word& w, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    var_count_ = std::max(var_count_, o.var_count_);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
    var_count_ = std::max(var_count_, o.var_count_);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    NcPoly out;
    out.var_count_ = std::max(var_count_, o.var_count_);
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    return out;
}

NcPoly NcPoly::scaled(const Rational& c) const {
    NcPoly out;
    out.var_count_ = var_count_;
    if (c.is_zero()) return out;
    for (const auto& [w, coeff] : terms_) out.terms_[w] = coeff * c;
    return out;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";

    // Graded lexicographic term order: shorter words first.
    std::vector<const std::pair<const Word, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& term : terms_) order.push_back(&term);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
        return a->first < b->first;
    });

    auto word_str = [](const Word& w) {
        std::string out;
        for (std::size_t i = 0; i < w.size();) {
            std::size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(w[i]);
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    };

    std::string s;
    for (const auto* term : order) {
        const Rational& c = term->second;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (s.empty()) {
            // A bare leading minus is not in the grammar, so a negative
            // leading coefficient is always written out, "-1*x1*x2".
            if (c.sign() < 0)
                s += "-" + mag.to_string() + "*" + word_str(term->first);
            else if (mag == Rational(1))
                s += word_str(term->first);
            else
                s += mag.to_string() + "*" + word_str(term->first);
        } else {
            s += c.sign() < 0 ? " - " : " + ";
            if (mag == Rational(1))
                s += word_str(term->first);
            else
                s += mag.to_string() + "*" + word_str(term->first);
        }
    }
    return s;
}

NcPoly pow(const NcPoly& base, int exponent) {
    if (exponent < 1) throw Error(errc::bad_input, "exponent must be >= 1");
    NcPoly out = base;
    for (int i = 1; i < exponent; ++i) out = out * base;
    return out;
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

const NcPoly& require_nonzero(const NcPoly& p) {
    if (p.is_zero())
        throw Error(errc::zero_polynomial, "polynomial is identically zero");
    return p;
}

} // namespace waring
