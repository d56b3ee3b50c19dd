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

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wlp/algebra.hpp"
#include "wlp/errors.hpp"
#include "wlp/hilbert.hpp"
#include "wlp/ideal.hpp"

namespace wlp {

/// Graded Betti numbers beta_{i,j} of a quotient R/I, stored sparsely.
class BettiTable {
public:
    using Key = std::pair<int, int>; // (homological degree i, internal degree j)

    BettiTable() = default;
    explicit BettiTable(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }

    void set(int i, int j, Int v) {
        if (v < 0)
            throw NegativeEntry("beta_{" + std::to_string(i) + "," + std::to_string(j) +
                                "} = " + v.get_str());
        if (v == 0)
            entries_.erase(Key{i, j});
        else
            entries_[Key{i, j}] = std::move(v);
    }

    Int get(int i, int j) const {
        auto it = entries_.find(Key{i, j});
        return it == entries_.end() ? Int(0) : it->second;
    }

    const std::map<Key, Int>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    int max_homological() const {
        int m = 0;
        for (const auto& [k, v] : entries_) m = std::max(m, k.first);
        return m;
    }

    int max_internal() const {
        int m = 0;
        for (const auto& [k, v] : entries_) m = std::max(m, k.second);
        return m;
    }

    /// Largest regularity row j - i present.
    int max_row() const {
        int m = 0;
        for (const auto& [k, v] : entries_) m = std::max(m, k.second - k.first);
        return m;
    }

    bool operator==(const BettiTable& other) const { return entries_ == other.entries_; }
    bool operator!=(const BettiTable& other) const { return !(*this == other); }

    /// Text diagram: column i, row j - i, dots for zeros, with a total line.
    std::string diagram() const {
        std::ostringstream out;
        if (entries_.empty()) {
            out << "(zero table)\n";
            return out.str();
        }
        const int imax = max_homological();
        const int rmax = max_row();
        std::vector<Int> totals(static_cast<size_t>(imax) + 1, Int(0));
        for (const auto& [k, v] : entries_) totals[static_cast<size_t>(k.first)] += v;

        std::vector<std::vector<std::string>> cells(
            static_cast<size_t>(rmax) + 2,
            std::vector<std::string>(static_cast<size_t>(imax) + 2));
        cells[0][0] = "total:";
        for (int i = 0; i <= imax; ++i)
            cells[0][static_cast<size_t>(i) + 1] = totals[static_cast<size_t>(i)].get_str();
        for (int row = 0; row <= rmax; ++row) {
            cells[static_cast<size_t>(row) + 1][0] = std::to_string(row) + ":";
            for (int i = 0; i <= imax; ++i) {
                Int v = get(i, i + row);
                cells[static_cast<size_t>(row) + 1][static_cast<size_t>(i) + 1] =
                    v == 0 ? "." : v.get_str();
            }
        }
        std::vector<size_t> width(static_cast<size_t>(imax) + 2, 0);
        for (const auto& line : cells)
            for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
        for (const auto& line : cells) {
            for (size_t c = 0; c < line.size(); ++c) {
                for (size_t pad = line[c].size(); pad < width[c]; ++pad) out << ' ';
                out << line[c];
                if (c + 1 < line.size()) out << ' ';
            }
            out << '\n';
        }
        return out.str();
    }

private:
    int nvars_ = 0;
    std::map<Key, Int> entries_;
};

namespace detail {

/// Rank of the Koszul differential (d_i)_j : (K_i)_j -> (K_{i-1})_j for the
/// quotient by I, where (K_i)_j = A_{j-i} (x) Lambda^i.
template <class F>
long koszul_rank(const GradedIdeal<F>& I, const std::vector<std::vector<unsigned>>& by_size,
                 const std::vector<int>& pos_of_mask, int i, int j) {
    const Ring& R = I.ring();
    const F& K = I.field();
    const int r = R.nvars();
    const int d_from = j - i;
    const int d_to = j - i + 1;
    if (i < 1 || i > r || d_from < 0) return 0;

    const std::vector<size_t>& from_std = I.piece(d_from).standards;
    const DegreePiece<F>& target = I.piece(d_to);
    const size_t h_from = from_std.size();
    const size_t h_to = target.standards.size();
    if (h_from == 0 || h_to == 0) return 0;

    const std::vector<unsigned>& dom_sets = by_size[static_cast<size_t>(i)];
    const size_t dom_size = dom_sets.size() * h_from;
    const size_t cod_size = by_size[static_cast<size_t>(i - 1)].size() * h_to;

    std::vector<long> pos(static_cast<size_t>(R.dimension(d_to)), -1);
    for (size_t s = 0; s < target.standards.size(); ++s)
        pos[target.standards[s]] = static_cast<long>(s);

    if constexpr (std::is_same_v<F, RationalField>) {
        if (target.unit_rows) {
            std::vector<std::vector<long>> mat(dom_size, std::vector<long>(cod_size, 0));
            for (size_t si = 0; si < dom_sets.size(); ++si) {
                const unsigned S = dom_sets[si];
                for (size_t k = 0; k < h_from; ++k) {
                    auto& row = mat[si * h_from + k];
                    int sign_parity = 0;
                    for (int v = 1; v <= r; ++v) {
                        if (!(S & (1u << (v - 1)))) continue;
                        long t = pos[static_cast<size_t>(R.shift_table(d_from, v)[from_std[k]])];
                        if (t >= 0) {
                            unsigned T = S & ~(1u << (v - 1));
                            size_t col = static_cast<size_t>(pos_of_mask[T]) * h_to +
                                         static_cast<size_t>(t);
                            row[col] += (sign_parity % 2 == 0) ? 1 : -1;
                        }
                        ++sign_parity;
                    }
                }
            }
            return static_cast<long>(int_matrix_rank(mat));
        }
    }

    Matrix<F> M(K, dom_size, cod_size);
    for (size_t si = 0; si < dom_sets.size(); ++si) {
        const unsigned S = dom_sets[si];
        for (size_t k = 0; k < h_from; ++k) {
            const size_t row = si * h_from + k;
            int sign_parity = 0;
            for (int v = 1; v <= r; ++v) {
                if (!(S & (1u << (v - 1)))) continue;
                std::vector<typename F::value_type> w(
                    static_cast<size_t>(R.dimension(d_to)), K.zero());
                w[static_cast<size_t>(R.shift_table(d_from, v)[from_std[k]])] = K.one();
                target.reduce(K, w);
                unsigned T = S & ~(1u << (v - 1));
                const size_t base = static_cast<size_t>(pos_of_mask[T]) * h_to;
                for (size_t s = 0; s < h_to; ++s) {
                    if (K.is_zero(w[target.standards[s]])) continue;
                    if (sign_parity % 2 == 0)
                        K.add_assign(M.at(row, base + s), w[target.standards[s]]);
                    else
                        K.sub_assign(M.at(row, base + s), w[target.standards[s]]);
                }
                ++sign_parity;
            }
        }
    }
    return static_cast<long>(rank(std::move(M)));
}

} // namespace detail

/// Graded Betti table of R/I from Koszul homology:
/// beta_{i,j} = dim (K_i)_j - rank (d_i)_j - rank (d_{i+1})_j.
template <class F>
BettiTable koszul_betti(const GradedQuotient<F>& A, int d_cap = kDefaultDegreeCap) {
    const Ring& R = A.ring();
    const int r = R.nvars();
    if (r > 20) throw std::invalid_argument("koszul_betti: too many variables");
    HilbertFunction h = hilbert_function(A, d_cap);
    BettiTable table(r);
    if (h.is_zero()) return table;
    const int e = h.socle_degree();

    std::vector<std::vector<unsigned>> by_size(static_cast<size_t>(r) + 1);
    std::vector<int> pos_of_mask(static_cast<size_t>(1) << r, -1);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        auto& bucket = by_size[static_cast<size_t>(__builtin_popcount(mask))];
        pos_of_mask[mask] = static_cast<int>(bucket.size());
        bucket.push_back(mask);
    }

    // ranks[i][j] = rank (d_i)_j, for i = 1..r+1 (the last is identically 0)
    std::map<std::pair<int, int>, long> ranks;
    auto rank_at = [&](int i, int j) {
        if (i < 1 || i > r) return 0L;
        auto it = ranks.find({i, j});
        if (it != ranks.end()) return it->second;
        long value = detail::koszul_rank(A.ideal(), by_size, pos_of_mask, i, j);
        ranks[{i, j}] = value;
        return value;
    };

    for (int i = 0; i <= r; ++i) {
        const Int lambda = binomial(Int(r), static_cast<unsigned long>(i));
        for (int j = i; j <= i + e; ++j) {
            Int dim = lambda * h[j - i];
            if (dim == 0) continue;
            Int beta = dim - rank_at(i, j) - rank_at(i + 1, j);
            if (beta < 0) throw std::logic_error("koszul_betti: negative Betti number");
            if (beta > 0) table.set(i, j, beta);
        }
    }
    return table;
}

/// Betti table of R/I for a stable monomial ideal I with the given minimal
/// generators, by the Eliahou-Kervaire closed form
///   beta_{i,j}(I) = sum over generators u of degree j-i of C(max_index(u)-1, i),
/// shifted to the quotient: beta_{i+1,j}(R/I) = beta_{i,j}(I), beta_{0,0} = 1.
/// Throws NotStable (with a witness) when I is not stable.
inline BettiTable eliahou_kervaire_betti(const Ring& R, const std::vector<Monomial>& min_gens) {
    // a unit generator makes the quotient the zero module
    for (const Monomial& u : min_gens)
        if (u.degree() == 0) return BettiTable(R.nvars());

    // stability: for each generator u and each variable i < m(u),
    // x_i * u / x_{m(u)} must again lie in the ideal
    for (const Monomial& u : min_gens) {
        const int m = u.max_index();
        for (int i = 1; i < m; ++i) {
            Monomial v = (u * R.variable(i)).divided_by(R.variable(m));
            bool inside = false;
            for (const Monomial& g : min_gens)
                if (g.divides(v)) {
                    inside = true;
                    break;
                }
            if (!inside)
                throw NotStable("x" + std::to_string(i) + " * " + u.to_string() + " / x" +
                                std::to_string(m) + " = " + v.to_string() +
                                " escapes the ideal");
        }
    }

    BettiTable table(R.nvars());
    table.set(0, 0, Int(1));
    for (const Monomial& u : min_gens) {
        const int d = u.degree();
        const int m = u.max_index();
        for (int i = 0; i < m; ++i) {
            Int add = binomial(Int(m - 1), static_cast<unsigned long>(i));
            if (add == 0) continue;
            int hom = i + 1;
            int internal = d + i;
            table.set(hom, internal, table.get(hom, internal) + add);
        }
    }
    return table;
}

struct NumeratorCheck {
    std::vector<Int> alternating; // sum_i (-1)^i beta_{i,j} as coefficients in j
    std::vector<Int> expected;    // H(t) * (1-t)^r
    bool matches = false;
};

/// Verify sum_{i,j} (-1)^i beta_{i,j} t^j = H(t) (1-t)^r.
inline NumeratorCheck hilbert_numerator_check(const BettiTable& table, const HilbertFunction& h) {
    NumeratorCheck out;
    const int r = table.nvars();
    const int e = h.socle_degree();
    const int width = std::max(table.max_internal(), e + r) + 1;

    out.alternating.assign(static_cast<size_t>(width), Int(0));
    for (const auto& [k, v] : table.entries()) {
        if (k.first % 2 == 0)
            out.alternating[static_cast<size_t>(k.second)] += v;
        else
            out.alternating[static_cast<size_t>(k.second)] -= v;
    }

    out.expected.assign(static_cast<size_t>(width), Int(0));
    for (int d = 0; d <= e; ++d)
        for (int k = 0; k <= r; ++k) {
            Int term = binomial(Int(r), static_cast<unsigned long>(k)) * h[d];
            if (k % 2 == 1) term = -term;
            out.expected[static_cast<size_t>(d + k)] += term;
        }

    out.matches = out.alternating == out.expected;
    return out;
}

/// True when high >= low entrywise.
inline bool dominates(const BettiTable& high, const BettiTable& low) {
    for (const auto& [k, v] : low.entries())
        if (high.get(k.first, k.second) < v) return false;
    return true;
}

struct CancellationResult {
    bool ok = false;
    /// c[{i,j}] = number of cancellations pairing beta_{i,j} with beta_{i+1,j}.
    std::map<std::pair<int, int>, Int> cancellations;
};

/// Decide whether `low` is obtained from `high` by consecutive cancellations:
/// each cancellation removes one unit from beta_{i,j} and beta_{i+1,j}.  The
/// multiplicities are determined greedily per internal degree and must close
/// with no remainder.
inline CancellationResult is_consecutive_cancellation(const BettiTable& low,
                                                      const BettiTable& high) {
    CancellationResult result;
    const int imax = std::max(high.max_homological(), low.max_homological());
    int jmax = std::max(high.max_internal(), low.max_internal());

    for (int j = 0; j <= jmax; ++j) {
        Int carry = 0; // c_{i-1, j}
        for (int i = 0; i <= imax + 1; ++i) {
            Int diff = high.get(i, j) - low.get(i, j);
            Int c = diff - carry;
            if (c < 0) return CancellationResult{};
            if (c > 0) result.cancellations[{i, j}] = c;
            carry = c;
        }
        if (carry != 0) return CancellationResult{};
    }
    result.ok = true;
    return result;
}

} // namespace wlp
