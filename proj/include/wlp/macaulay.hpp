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

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wlp/errors.hpp"

namespace wlp {

/// Exact unbounded integer used throughout the library.
using Int = mpz_class;

/// Binomial coefficient C(m, q) with the convention C(m, q) = 0 whenever m < q.
/// Exact for arbitrarily large arguments; q must be nonnegative.
inline Int binomial(const Int& m, unsigned long q) {
    if (m < Int(q)) return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), m.get_mpz_t(), q);
    return out;
}

inline Int binomial(long m, long q) {
    if (q < 0) throw std::invalid_argument("binomial: q must be nonnegative");
    return binomial(Int(m), static_cast<unsigned long>(q));
}

/// The i-binomial expansion of a positive integer:
///   n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
/// with n_i > n_{i-1} > ... > n_j >= j >= 1.  Bottoms are consecutive,
/// tops strictly decreasing; the decomposition is unique.
struct BinomialExpansion {
    int degree = 0;                          // the index i
    std::vector<std::pair<Int, int>> terms;  // (top n_k, bottom k), k = i, i-1, ..., j

    Int value() const {
        Int sum = 0;
        for (const auto& [top, bottom] : terms)
            sum += binomial(top, static_cast<unsigned long>(bottom));
        return sum;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& [top, bottom] : terms) {
            if (!out.empty()) out += "+";
            out += "C(" + top.get_str() + "," + std::to_string(bottom) + ")";
        }
        return out;
    }
};

namespace detail {

// Largest top with C(top, bottom) <= limit, assuming limit >= 1 and bottom >= 1.
// Walks C(top, bottom) up incrementally from C(bottom, bottom) = 1.
inline Int largest_binomial_top(const Int& limit, int bottom) {
    Int top = bottom;
    Int value = 1;
    for (;;) {
        // C(top+1, b) = C(top, b) * (top+1) / (top+1-b)
        Int next = value * (top + 1) / (top + 1 - bottom);
        if (next > limit) return top;
        value = next;
        top += 1;
    }
}

} // namespace detail

/// The unique i-binomial expansion, built greedily (largest feasible top first).
inline BinomialExpansion expand(const Int& n, int i) {
    if (n <= 0) throw std::invalid_argument("expand: n must be positive");
    if (i <= 0) throw std::invalid_argument("expand: i must be positive");
    BinomialExpansion e;
    e.degree = i;
    Int rem = n;
    for (int bottom = i; bottom >= 1 && rem > 0; --bottom) {
        Int top = detail::largest_binomial_top(rem, bottom);
        rem -= binomial(top, static_cast<unsigned long>(bottom));
        e.terms.emplace_back(top, bottom);
    }
    return e;
}

/// Green's hyperplane-restriction operator n_<i>: tops lowered by one, bottoms kept.
/// Accepts n = 0 (returns 0) so Hilbert-function code can apply it past the socle.
inline Int lower_shift(const Int& n, int i) {
    if (n == 0) return 0;
    Int sum = 0;
    for (const auto& [top, bottom] : expand(n, i).terms)
        sum += binomial(top - 1, static_cast<unsigned long>(bottom));
    return sum;
}

/// The operator ((n)_(i))^{-1}_{-1}: tops and bottoms both lowered by one.
inline Int lower_both(const Int& n, int i) {
    if (n == 0) return 0;
    Int sum = 0;
    for (const auto& [top, bottom] : expand(n, i).terms)
        sum += binomial(top - 1, static_cast<unsigned long>(bottom - 1));
    return sum;
}

/// Macaulay's bound n^{<i>}: the maximal admissible value in degree i+1
/// given value n in degree i.  Tops and bottoms both raised by one.
inline Int growth_bound(const Int& n, int i) {
    if (n == 0) return 0;
    Int sum = 0;
    for (const auto& [top, bottom] : expand(n, i).terms)
        sum += binomial(top + 1, static_cast<unsigned long>(bottom + 1));
    return sum;
}

} // namespace wlp
