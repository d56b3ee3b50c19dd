/*
   Copyright 2026 wlpkit contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wlp/errors.hpp"
#include "wlp/macaulay.hpp"

namespace wlp {

/// Monomial in variables x_1, ..., x_r as an exponent vector.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {
        for (int v : exps)
            if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    static Monomial variable(int i, int nvars) {
        std::vector<int> e(nvars, 0);
        e.at(static_cast<size_t>(i - 1)) = 1;
        return Monomial(std::move(e));
    }

    int nvars() const { return static_cast<int>(exps.size()); }
    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    /// Largest index i (1-based) with x_i dividing the monomial; 0 for 1.
    int max_index() const {
        for (int i = nvars(); i >= 1; --i)
            if (exps[static_cast<size_t>(i - 1)] > 0) return i;
        return 0;
    }

    bool divides(const Monomial& other) const {
        for (size_t k = 0; k < exps.size(); ++k)
            if (exps[k] > other.exps[k]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial out = *this;
        for (size_t k = 0; k < exps.size(); ++k) out.exps[k] += other.exps[k];
        return out;
    }

    /// Quotient this / other; caller guarantees divisibility.
    Monomial divided_by(const Monomial& other) const {
        Monomial out = *this;
        for (size_t k = 0; k < exps.size(); ++k) out.exps[k] -= other.exps[k];
        return out;
    }

    bool operator==(const Monomial& other) const { return exps == other.exps; }
    bool operator!=(const Monomial& other) const { return exps != other.exps; }

    std::string to_string() const {
        std::string out;
        for (size_t k = 0; k < exps.size(); ++k) {
            if (exps[k] == 0) continue;
            if (!out.empty()) out += "*";
            out += "x" + std::to_string(k + 1);
            if (exps[k] > 1) out += "^" + std::to_string(exps[k]);
        }
        return out.empty() ? "1" : out;
    }
};

/// Strict graded-lexicographic comparison with x_1 > x_2 > ... > x_r:
/// higher total degree wins, ties broken by the exponent vectors' lex order.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exps > b.exps;
}

/// Sorts polynomial terms leading-first (descending graded-lex).
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

/// The polynomial ring: variable count plus cached degree-d monomial bases
/// in descending lex order (x_1^d first, x_r^d last).  Copies are cheap
/// handles sharing the memoized bases and shift tables.
class Ring {
public:
    explicit Ring(int nvars) : data_(std::make_shared<Data>()) {
        if (nvars < 1) throw std::invalid_argument("Ring: need at least one variable");
        data_->r = nvars;
    }

    int nvars() const { return data_->r; }

    /// dim_k R_d = C(d + r - 1, r - 1); 0 for negative d.
    long dimension(int d) const {
        if (d < 0) return 0;
        return binomial(Int(d + nvars() - 1), static_cast<unsigned long>(nvars() - 1)).get_si();
    }

    const std::vector<Monomial>& basis(int d) const {
        if (d < 0) throw std::invalid_argument("Ring::basis: negative degree");
        auto& bases = data_->bases;
        if (static_cast<size_t>(d) >= bases.size()) bases.resize(static_cast<size_t>(d) + 1);
        auto& cached = bases[static_cast<size_t>(d)];
        if (cached.empty()) {
            std::vector<int> exps(static_cast<size_t>(nvars()), 0);
            build_basis(d, 0, exps, cached);
        }
        return cached;
    }

    /// Position of m in basis(m.degree()).
    int index_of(const Monomial& m) const {
        const auto& b = basis(m.degree());
        auto it = std::lower_bound(b.begin(), b.end(), m,
                                   [](const Monomial& x, const Monomial& y) {
                                       return grlex_greater(x, y);
                                   });
        if (it == b.end() || *it != m)
            throw std::logic_error("Ring::index_of: monomial not in basis");
        return static_cast<int>(it - b.begin());
    }

    Monomial variable(int i) const { return Monomial::variable(i, nvars()); }

    /// Index map of multiplication by x_i from basis(d) to basis(d+1):
    /// shift_table(d, i)[k] is the position of x_i * basis(d)[k].
    const std::vector<int>& shift_table(int d, int i) const {
        if (d < 0 || i < 1 || i > nvars())
            throw std::invalid_argument("Ring::shift_table: bad degree or variable");
        auto& shifts = data_->shifts;
        if (static_cast<size_t>(d) >= shifts.size()) shifts.resize(static_cast<size_t>(d) + 1);
        auto& per_var = shifts[static_cast<size_t>(d)];
        if (per_var.empty()) per_var.resize(static_cast<size_t>(nvars()));
        auto& table = per_var[static_cast<size_t>(i - 1)];
        if (table.empty()) {
            const auto& from = basis(d);
            const Monomial xi = variable(i);
            table.reserve(from.size());
            for (const Monomial& m : from) table.push_back(index_of(m * xi));
        }
        return table;
    }

private:
    struct Data {
        int r = 0;
        std::vector<std::vector<Monomial>> bases;
        std::vector<std::vector<std::vector<int>>> shifts;
    };

    void build_basis(int remaining, int var, std::vector<int>& exps,
                     std::vector<Monomial>& out) const {
        if (var == nvars() - 1) {
            exps[static_cast<size_t>(var)] = remaining;
            out.emplace_back(std::vector<int>(exps));
            exps[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[static_cast<size_t>(var)] = e;
            build_basis(remaining - e, var + 1, exps, out);
        }
        exps[static_cast<size_t>(var)] = 0;
    }

    std::shared_ptr<Data> data_;
};

/// Sparse polynomial over the rationals; terms kept leading-first.
class Polynomial {
public:
    using TermMap = std::map<Monomial, mpq_class, TermOrder>;

    Polynomial() = default;

    static Polynomial from_monomial(Monomial m, mpq_class coeff = 1) {
        Polynomial p;
        p.add_term(std::move(m), std::move(coeff));
        return p;
    }

    /// c_1 x_1 + ... + c_r x_r.
    static Polynomial linear_form(const std::vector<mpq_class>& coeffs) {
        Polynomial p;
        int r = static_cast<int>(coeffs.size());
        for (int i = 1; i <= r; ++i) p.add_term(Monomial::variable(i, r), coeffs[static_cast<size_t>(i - 1)]);
        return p;
    }

    static Polynomial sum_of_variables(int nvars) {
        return linear_form(std::vector<mpq_class>(static_cast<size_t>(nvars), mpq_class(1)));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int nvars() const { return terms_.empty() ? 0 : terms_.begin()->first.nvars(); }

    /// Largest term degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    void add_term(Monomial m, mpq_class coeff) {
        if (sgn(coeff) == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(m), coeff);
        if (!inserted) {
            it->second += coeff;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    Polynomial times_monomial(const Monomial& m) const {
        Polynomial out;
        for (const auto& [mono, c] : terms_) out.terms_.emplace(mono * m, c);
        return out;
    }

    Polynomial operator+(const Polynomial& other) const {
        Polynomial out = *this;
        for (const auto& [m, c] : other.terms_) out.add_term(m, c);
        return out;
    }

    Polynomial operator*(const Polynomial& other) const {
        Polynomial out;
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, mpq_class(c1 * c2));
        return out;
    }

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }

    /// True when every term is a coefficient times a single monomial power
    /// product -- i.e. the polynomial is c * m for a monomial m.
    bool is_monomial() const { return terms_.size() == 1; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            mpq_class a = abs(c);
            bool negative = sgn(c) < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            bool constant = m.degree() == 0;
            if (a != 1 || constant) {
                out += a.get_str();
                if (!constant) out += "*";
            }
            if (!constant) out += m.to_string();
        }
        return out;
    }

    /// Parses ASCII polynomial syntax: terms joined by + / -, each term an
    /// optional rational coefficient (`3`, `-2/5`) times `*`-separated powers
    /// `x<k>` or `x<k>^<e>`.  Example: `x1^2*x2 - 3*x3^3`.
    static Polynomial parse(const std::string& text, int nvars);

private:
    TermMap terms_;
};

namespace detail {

class PolynomialParser {
public:
    PolynomialParser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

    Polynomial run() {
        Polynomial out;
        skip_space();
        if (done()) throw ParseError("empty polynomial");
        Term first = parse_term(consume_sign());
        out.add_term(std::move(first.mono), std::move(first.coeff));
        skip_space();
        while (!done()) {
            char c = peek();
            if (c != '+' && c != '-')
                throw ParseError("expected '+' or '-' at '" + text_.substr(pos_) + "'");
            ++pos_;
            skip_space();
            Term t = parse_term(c == '-');
            out.add_term(std::move(t.mono), std::move(t.coeff));
            skip_space();
        }
        return out;
    }

private:
    struct Term {
        Monomial mono;
        mpq_class coeff;
    };

    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool consume_sign() {
        if (!done() && (peek() == '+' || peek() == '-')) {
            bool minus = peek() == '-';
            ++pos_;
            skip_space();
            return minus;
        }
        return false;
    }

    Term parse_term(bool negated) {
        Term t{Monomial::one(nvars_), mpq_class(1)};
        skip_space();
        if (done()) throw ParseError("dangling sign in polynomial");
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            t.coeff = parse_rational();
            saw_factor = true;
            skip_space();
            if (!done() && peek() == '*') {
                ++pos_;
                skip_space();
                parse_powers(t);
            } else if (!done() && peek() == 'x') {
                parse_powers(t); // juxtaposition: 3x1
            }
        } else if (peek() == 'x') {
            parse_powers(t);
            saw_factor = true;
        }
        if (!saw_factor)
            throw ParseError("expected coefficient or variable at '" + text_.substr(pos_) + "'");
        if (negated) t.coeff = -t.coeff;
        return t;
    }

    void parse_powers(Term& t) {
        while (true) {
            if (done() || peek() != 'x')
                throw ParseError("expected variable at '" + text_.substr(pos_) + "'");
            ++pos_;
            long idx = parse_integer("variable index");
            if (idx < 1 || idx > nvars_)
                throw ParseError("variable x" + std::to_string(idx) + " outside ring with " +
                                 std::to_string(nvars_) + " variables");
            long exp = 1;
            if (!done() && peek() == '^') {
                ++pos_;
                exp = parse_integer("exponent");
                if (exp < 0) throw ParseError("negative exponent");
            }
            t.mono.exps[static_cast<size_t>(idx - 1)] += static_cast<int>(exp);
            skip_space();
            if (!done() && peek() == '*') {
                ++pos_;
                skip_space();
                continue;
            }
            if (!done() && peek() == 'x') continue; // juxtaposed factors
            break;
        }
    }

    long parse_integer(const std::string& what) {
        skip_space();
        size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected " + what + " in polynomial");
        try {
            return std::stol(text_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            throw ParseError(what + " out of range in polynomial");
        }
    }

    mpq_class parse_rational() {
        size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string num = text_.substr(start, pos_ - start);
        skip_space();
        if (!done() && peek() == '/') {
            ++pos_;
            skip_space();
            size_t dstart = pos_;
            while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected denominator after '/'");
            std::string den = text_.substr(dstart, pos_ - dstart);
            if (mpz_class(den) == 0) throw ParseError("zero denominator");
            mpq_class q{mpz_class(num), mpz_class(den)};
            q.canonicalize();
            return q;
        }
        return mpq_class(mpz_class(num));
    }

    const std::string& text_;
    size_t pos_ = 0;
    int nvars_;
};

} // namespace detail

inline Polynomial Polynomial::parse(const std::string& text, int nvars) {
    return detail::PolynomialParser(text, nvars).run();
}

/// Row of coefficients of a homogeneous polynomial over ring.basis(degree).
inline std::vector<mpq_class> coefficient_vector(const Polynomial& p, const Ring& ring,
                                                 int degree) {
    std::vector<mpq_class> row(static_cast<size_t>(ring.dimension(degree)), mpq_class(0));
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != degree)
            throw NonHomogeneousGenerator(p.to_string() + " is not homogeneous of degree " +
                                          std::to_string(degree));
        row[static_cast<size_t>(ring.index_of(m))] = c;
    }
    return row;
}

} // namespace wlp
