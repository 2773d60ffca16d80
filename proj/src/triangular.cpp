#include "waring/triangular.hpp"

#include "waring/errors.hpp"

namespace waring {

UTMatrix::UTMatrix(int n) : n_(n) {
    if (n < 1) throw Error(errc::bad_input, "matrix size must be >= 1");
}

void UTMatrix::check_pos(int row, int col) const {
    if (row < 1 || col < row || col > n_)
        throw Error(errc::bad_input, "position (" + std::to_string(row) + "," +
                                         std::to_string(col) + ") not in upper triangle");
}

Rational UTMatrix::get(int row, int col) const {
    check_pos(row, col);
    auto it = e_.find({row, col});
    return it == e_.end() ? Rational(0) : it->second;
}

void UTMatrix::set(int row, int col, const Rational& value) {
    check_pos(row, col);
    if (value.is_zero())
        e_.erase({row, col});
    else
        e_[{row, col}] = value;
}

UTMatrix& UTMatrix::operator+=(const UTMatrix& o) {
    if (o.n_ != n_) throw Error(errc::dimension_mismatch, "matrix sizes differ");
    for (const auto& [pos, v] : o.e_) set(pos.first, pos.second, get(pos.first, pos.second) + v);
    return *this;
}

UTMatrix& UTMatrix::operator-=(const UTMatrix& o) {
    if (o.n_ != n_) throw Error(errc::dimension_mismatch, "matrix sizes differ");
    for (const auto& [pos, v] : o.e_) set(pos.first, pos.second, get(pos.first, pos.second) - v);
    return *this;
}

UTMatrix UTMatrix::operator*(const UTMatrix& o) const {
    if (o.n_ != n_) throw Error(errc::dimension_mismatch, "matrix sizes differ");
    UTMatrix out(n_);
    for (const auto& [pa, va] : e_) {
        for (const auto& [pb, vb] : o.e_) {
            if (pa.second != pb.first) continue;
            const auto pos = std::make_pair(pa.first, pb.second);
            out.set(pos.first, pos.second, out.get(pos.first, pos.second) + va * vb);
        }
    }
    return out;
}

UTMatrix UTMatrix::scaled(const Rational& c) const {
    UTMatrix out(n_);
    if (c.is_zero()) return out;
    for (const auto& [pos, v] : e_) out.e_[pos] = v * c;
    return out;
}

std::string UTMatrix::str() const {
    std::string s;
    for (int i = 1; i <= n_; ++i) {
        s += i == 1 ? "[" : " ";
        for (int j = 1; j <= n_; ++j) {
            s += j < i ? "0" : get(i, j).to_string();
            s += j < n_ ? " " : "";
        }
        s += i < n_ ? "\n" : "]";
    }
    return s;
}

SymUTMatrix::SymUTMatrix(int n) : n_(n) {
    if (n < 1) throw Error(errc::bad_input, "matrix size must be >= 1");
}

const CPoly& SymUTMatrix::get(int row, int col) const {
    static const CPoly zero;
    auto it = e_.find({row, col});
    return it == e_.end() ? zero : it->second;
}

void SymUTMatrix::set(int row, int col, CPoly value) {
    if (row < 1 || col < row || col > n_)
        throw Error(errc::bad_input, "position not in upper triangle");
    if (value.is_zero())
        e_.erase({row, col});
    else
        e_[{row, col}] = std::move(value);
}

SymUTMatrix& SymUTMatrix::operator+=(const SymUTMatrix& o) {
    if (o.n_ != n_) throw Error(errc::dimension_mismatch, "matrix sizes differ");
    for (const auto& [pos, v] : o.e_) set(pos.first, pos.second, get(pos.first, pos.second) + v);
    return *this;
}

SymUTMatrix SymUTMatrix::operator*(const SymUTMatrix& o) const {
    if (o.n_ != n_) throw Error(errc::dimension_mismatch, "matrix sizes differ");
    SymUTMatrix out(n_);
    for (const auto& [pa, va] : e_) {
        for (const auto& [pb, vb] : o.e_) {
            if (pa.second != pb.first) continue;
            out.set(pa.first, pb.second, out.get(pa.first, pb.second) + va * vb);
        }
    }
    return out;
}

SymUTMatrix SymUTMatrix::scaled(const Rational& c) const {
    SymUTMatrix out(n_);
    for (const auto& [pos, v] : e_) out.set(pos.first, pos.second, v.scaled(c));
    return out;
}

bool band_check(const UTMatrix& a, BandSpec band) {
    if (band.t < 0 || band.t > a.n() - 1)
        throw Error(errc::bad_input, "band parameter must satisfy 0 <= t <= n-1");
    for (const auto& [pos, v] : a.entries())
        if (pos.second - pos.first <= band.t) return false;
    return true;
}

UTMatrix mat_eval(const NcPoly& p, const std::vector<UTMatrix>& inputs) {
    if (static_cast<int>(inputs.size()) != p.var_count())
        throw Error(errc::arity_mismatch,
                    "polynomial in " + std::to_string(p.var_count()) + " variables applied to " +
                        std::to_string(inputs.size()) + " matrices");
    if (inputs.empty()) throw Error(errc::arity_mismatch, "empty input tuple");
    const int n = inputs[0].n();
    for (const auto& u : inputs)
        if (u.n() != n) throw Error(errc::dimension_mismatch, "input sizes differ");

    UTMatrix acc(n);
    for (const auto& [word, coeff] : p.terms()) {
        UTMatrix prod = inputs[word[0] - 1];
        for (std::size_t i = 1; i < word.size(); ++i) prod = prod * inputs[word[i] - 1];
        acc += prod.scaled(coeff);
    }
    return acc;
}

namespace {

SymUTMatrix generic_matrix(int n, int var) {
    SymUTMatrix u(n);
    for (int j = 1; j <= n; ++j) {
        u.set(j, j, CPoly::var(SymId::diag(j, var)));
        for (int k = j + 1; k <= n; ++k) u.set(j, k, CPoly::var(SymId::entry(j, k, var)));
    }
    return u;
}

} // namespace

SymUTMatrix sym_eval(const NcPoly& p, int n) {
    if (p.is_zero()) throw Error(errc::zero_polynomial_input, "sym_eval of zero polynomial");
    std::vector<SymUTMatrix> generic;
    generic.reserve(p.var_count());
    for (int i = 1; i <= p.var_count(); ++i) generic.push_back(generic_matrix(n, i));

    SymUTMatrix acc(n);
    for (const auto& [word, coeff] : p.terms()) {
        SymUTMatrix prod = generic[word[0] - 1];
        for (std::size_t i = 1; i < word.size(); ++i) prod = prod * generic[word[i] - 1];
        acc += prod.scaled(coeff);
    }
    return acc;
}

CPoly entry_polynomial(const NcPoly& p, int n, int s, int t, const PointAssignment& fixed) {
    if (s < 1 || t < s || t > n)
        throw Error(errc::bad_input, "entry position out of range");

    CPoly acc;
    // One factor per letter: the path visits columns s = c0 <= c1 <= ... <= ck = t,
    // letter l contributing the (c_{l-1}, c_l) entry of its matrix.
    for (const auto& [word, coeff] : p.terms()) {
        const int k = static_cast<int>(word.size());
        Monomial mono;
        Rational scalar = coeff;

        // Depth-first over the column sequence.
        auto walk = [&](auto&& self, int letter_index, int col) -> void {
            if (letter_index == k) {
                if (col == t) acc.add_term(mono, scalar);
                return;
            }
            const int letter = word[letter_index];
            // The last letter must land exactly on column t.
            const int lo = letter_index == k - 1 ? t : col;
            for (int next = lo; next <= t; ++next) {
                SymId id = next == col ? SymId::diag(col, letter)
                                       : SymId::entry(col, next, letter);
                auto it = fixed.find(id);
                if (it != fixed.end()) {
                    if (it->second.is_zero()) continue;
                    Rational saved = scalar;
                    scalar *= it->second;
                    self(self, letter_index + 1, next);
                    scalar = saved;
                } else {
                    Monomial saved = mono;
                    mono = mono * Monomial::var(id);
                    self(self, letter_index + 1, next);
                    mono = saved;
                }
            }
        };
        walk(walk, 0, s);
    }
    return acc;
}

} // namespace waring
