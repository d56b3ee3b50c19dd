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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace wlp {

/// Exact rational arithmetic; the default coefficient field.
struct RationalField {
    using value_type = mpq_class;
    static constexpr bool is_exact = true;

    std::string name() const { return "rational"; }
    value_type zero() const { return value_type(0); }
    value_type one() const { return value_type(1); }
    value_type from_long(long v) const { return value_type(v); }
    value_type from_rational(const mpq_class& v) const { return v; }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type mul(const value_type& a, const value_type& b) const { return value_type(a * b); }
    value_type div(const value_type& a, const value_type& b) const { return value_type(a / b); }
    void add_assign(value_type& a, const value_type& b) const { a += b; }
    void sub_assign(value_type& a, const value_type& b) const { a -= b; }
    void submul_assign(value_type& a, const value_type& b, const value_type& c) const {
        a -= b * c;
    }
};

/// Arithmetic modulo a prime p (2 <= p < 2^31, so products fit in 64 bits).
/// A heuristic stand-in for the rationals: ranks can only drop modulo p.
class PrimeField {
public:
    using value_type = long;
    static constexpr bool is_exact = false;

    explicit PrimeField(long p) : p_(p) {
        if (p < 2 || p >= (1L << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                        " is not a prime in [2, 2^31)");
    }

    long modulus() const { return p_; }
    std::string name() const { return "prime:" + std::to_string(p_); }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }

    value_type from_long(long v) const {
        long m = v % p_;
        return m < 0 ? m + p_ : m;
    }

    value_type from_rational(const mpq_class& v) const {
        long num = from_mpz(v.get_num());
        long den = from_mpz(v.get_den());
        if (den == 0)
            throw std::domain_error("PrimeField: denominator divisible by " + std::to_string(p_));
        return mul(num, inverse(den));
    }

    bool is_zero(const value_type& a) const { return a == 0; }
    bool equal(const value_type& a, const value_type& b) const { return a == b; }
    value_type neg(const value_type& a) const { return a == 0 ? 0 : p_ - a; }
    value_type mul(const value_type& a, const value_type& b) const {
        return static_cast<long>(static_cast<__int128>(a) * b % p_);
    }
    value_type div(const value_type& a, const value_type& b) const { return mul(a, inverse(b)); }
    void add_assign(value_type& a, const value_type& b) const {
        a += b;
        if (a >= p_) a -= p_;
    }
    void sub_assign(value_type& a, const value_type& b) const {
        a -= b;
        if (a < 0) a += p_;
    }
    void submul_assign(value_type& a, const value_type& b, const value_type& c) const {
        sub_assign(a, mul(b, c));
    }

    value_type inverse(value_type a) const {
        if (a == 0) throw std::domain_error("PrimeField: division by zero");
        // extended Euclid on (a, p)
        long old_r = a, r = p_, old_s = 1, s = 0;
        while (r != 0) {
            long q = old_r / r;
            old_r -= q * r;
            std::swap(old_r, r);
            old_s -= q * s;
            std::swap(old_s, s);
        }
        return old_s < 0 ? old_s + p_ : old_s;
    }

private:
    long from_mpz(const mpz_class& v) const {
        return from_long(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_)));
    }

    static bool is_prime(long p) {
        if (p < 2) return false;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) return false;
        return true;
    }

    long p_;
};

/// Dense matrix over a field instance F.
template <class F>
struct Matrix {
    using value_type = typename F::value_type;

    F field;
    size_t nrows = 0;
    size_t ncols = 0;
    std::vector<std::vector<value_type>> rows;

    Matrix(F f, size_t r, size_t c)
        : field(std::move(f)), nrows(r), ncols(c),
          rows(r, std::vector<value_type>(c, field.zero())) {}

    Matrix(F f, std::vector<std::vector<value_type>> data)
        : field(std::move(f)), nrows(data.size()),
          ncols(data.empty() ? 0 : data.front().size()), rows(std::move(data)) {}

    value_type& at(size_t i, size_t j) { return rows[i][j]; }
    const value_type& at(size_t i, size_t j) const { return rows[i][j]; }
};

/// Gauss-Jordan reduction to reduced row echelon form: pivots scaled to 1,
/// pivot columns cleared above and below, zero rows erased.  Returns the
/// pivot column indices in increasing order (row k pivots at result[k]).
template <class F>
std::vector<size_t> rref_in_place(Matrix<F>& M) {
    const F& K = M.field;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < M.ncols && row < M.nrows; ++col) {
        size_t piv = row;
        while (piv < M.nrows && K.is_zero(M.rows[piv][col])) ++piv;
        if (piv == M.nrows) continue;
        std::swap(M.rows[row], M.rows[piv]);

        auto& pivot_row = M.rows[row];
        typename F::value_type inv = K.div(K.one(), pivot_row[col]);
        for (size_t j = col; j < M.ncols; ++j)
            if (!K.is_zero(pivot_row[j])) pivot_row[j] = K.mul(pivot_row[j], inv);

        for (size_t i = 0; i < M.nrows; ++i) {
            if (i == row || K.is_zero(M.rows[i][col])) continue;
            typename F::value_type factor = M.rows[i][col];
            for (size_t j = col; j < M.ncols; ++j)
                if (!K.is_zero(pivot_row[j]))
                    K.submul_assign(M.rows[i][j], factor, pivot_row[j]);
        }
        pivots.push_back(col);
        ++row;
    }
    M.rows.resize(row); // everything below the last pivot row is zero
    M.nrows = row;
    return pivots;
}

template <class F>
size_t rank(Matrix<F> M) {
    return rref_in_place(M).size();
}

/// Basis of the right kernel { v : M v = 0 }, one vector per non-pivot
/// column, in increasing column order.  The vector for free column c has
/// v[c] = 1, v[pivot_col_k] = -M_rref[k][c].
template <class F>
std::vector<std::vector<typename F::value_type>> kernel_basis(Matrix<F> M) {
    const F K = M.field;
    std::vector<size_t> pivots = rref_in_place(M);
    std::vector<bool> is_pivot(M.ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;

    std::vector<std::vector<typename F::value_type>> basis;
    for (size_t c = 0; c < M.ncols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::value_type> v(M.ncols, K.zero());
        v[c] = K.one();
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = K.neg(M.rows[k][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace detail {

/// Fraction-free Bareiss elimination over int64 with 128-bit intermediates.
/// Returns false (leaving rank_out untouched) if any entry would overflow or
/// an exact division fails, so the caller can retry with big integers.
inline bool bareiss_rank_int64(std::vector<std::vector<long>>& m, size_t& rank_out) {
    const size_t nr = m.size();
    const size_t nc = nr == 0 ? 0 : m[0].size();
    constexpr __int128 kMax = static_cast<__int128>(INT64_MAX);
    long prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t piv = row;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[row], m[piv]);
        for (size_t i = row + 1; i < nr; ++i) {
            for (size_t j = col + 1; j < nc; ++j) {
                __int128 t = static_cast<__int128>(m[row][col]) * m[i][j] -
                             static_cast<__int128>(m[i][col]) * m[row][j];
                if (t % prev != 0) return false;
                t /= prev;
                if (t > kMax || t < -kMax) return false;
                m[i][j] = static_cast<long>(t);
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    rank_out = row;
    return true;
}

inline size_t bareiss_rank_mpz(std::vector<std::vector<mpz_class>>& m) {
    const size_t nr = m.size();
    const size_t nc = nr == 0 ? 0 : m[0].size();
    mpz_class prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < nc && row < nr; ++col) {
        size_t piv = row;
        while (piv < nr && m[piv][col] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(m[row], m[piv]);
        for (size_t i = row + 1; i < nr; ++i) {
            for (size_t j = col + 1; j < nc; ++j) {
                mpz_class t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0)
                    throw std::logic_error("bareiss_rank_mpz: non-exact division");
                m[i][j] = std::move(q);
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return row;
}

} // namespace detail

/// Exact rank of an integer matrix: int64 fraction-free elimination with an
/// automatic big-integer retry when intermediate values grow too large.
inline size_t int_matrix_rank(const std::vector<std::vector<long>>& m) {
    std::vector<std::vector<long>> work = m;
    size_t r = 0;
    if (detail::bareiss_rank_int64(work, r)) return r;
    std::vector<std::vector<mpz_class>> big(m.size());
    for (size_t i = 0; i < m.size(); ++i) big[i].assign(m[i].begin(), m[i].end());
    return detail::bareiss_rank_mpz(big);
}

} // namespace wlp
