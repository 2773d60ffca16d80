#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>

#include "waring/errors.hpp"

namespace waring {

// Arbitrary-precision rational, always stored reduced with positive
// denominator. Thin wrapper over GMP's mpq_class; the wrapper exists so the
// rest of the code sees a fixed vocabulary (is_zero, inv, to_string, strict
// parsing) and so the backing type stays swappable.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0)
            throw Error(errc::bad_input, "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts exactly  [-]digits  or  [-]digits/digits  (nonzero denominator).
    static Rational from_string(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational inv() const {
        if (is_zero())
            throw Error(errc::bad_input, "inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw Error(errc::bad_input, "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    // Canonical form: "p/q" with q > 1, otherwise just "p".
    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_;
    }

private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& text) {
    auto bad = [&] { throw Error(errc::bad_input, "malformed rational '" + text + "'"); };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t num_start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == num_start) bad();
    if (i < text.size()) {
        if (text[i] != '/') bad();
        std::size_t den_start = ++i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == den_start || i != text.size()) bad();
        const std::string den = text.substr(den_start);
        if (den.find_first_not_of('0') == std::string::npos)
            throw Error(errc::bad_input, "zero denominator in '" + text + "'");
    }
    return Rational(mpq_class(text));
}

} // namespace waring
