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
#include <map>
#include <optional>
#include <random>
#include <type_traits>
#include <utility>
#include <vector>

#include "wlp/errors.hpp"
#include "wlp/hilbert.hpp"
#include "wlp/ideal.hpp"

namespace wlp {

/// Default degree cap when no socle degree is known in advance.
constexpr int kDefaultDegreeCap = 30;

/// The quotient R/I presented degree by degree through its standard monomials.
template <class F>
class GradedQuotient {
public:
    explicit GradedQuotient(GradedIdeal<F> I) : ideal_(std::move(I)) {}

    const GradedIdeal<F>& ideal() const { return ideal_; }
    const Ring& ring() const { return ideal_.ring(); }
    const F& field() const { return ideal_.field(); }
    long dim(int d) const { return ideal_.quotient_dim(d); }

    const std::vector<size_t>& standard_columns(int d) const {
        return ideal_.piece(d).standards;
    }

    std::vector<Monomial> standard_monomials(int d) const {
        const auto& basis = ring().basis(d);
        std::vector<Monomial> out;
        for (size_t c : standard_columns(d)) out.push_back(basis[c]);
        return out;
    }

private:
    GradedIdeal<F> ideal_;
};

/// Hilbert function of R/I, computed until it vanishes.  Throws
/// NotArtinianByCap if it is still positive at degree d_cap.
template <class F>
HilbertFunction hilbert_function(const GradedQuotient<F>& A, int d_cap = kDefaultDegreeCap) {
    std::vector<Int> values;
    for (int d = 0; d <= d_cap; ++d) {
        long dim = A.dim(d);
        if (dim == 0) return HilbertFunction(std::move(values));
        values.emplace_back(dim);
    }
    throw NotArtinianByCap(d_cap);
}

struct MultiplicationRank {
    long rank = 0;
    long dim_from = 0;
    long dim_to = 0;
};

namespace detail {

/// True when every coefficient of p is an integer.
inline bool integer_coefficients(const Polynomial& p) {
    for (const auto& [m, c] : p.terms())
        if (c.get_den() != 1) return false;
    return true;
}

/// Dense coefficients of a linear form, indexed by variable.
template <class F>
std::vector<typename F::value_type> linear_coefficients(const F& K, const Ring& R,
                                                        const Polynomial& L) {
    std::vector<typename F::value_type> coeffs(static_cast<size_t>(R.nvars()), K.zero());
    for (const auto& [m, c] : L.terms())
        coeffs[static_cast<size_t>(m.max_index() - 1)] = K.from_rational(c);
    return coeffs;
}

} // namespace detail

/// Rank of multiplication by a linear form L from (R/I)_d to (R/I)_{d+1}.
template <class F>
MultiplicationRank multiplication_rank(const GradedQuotient<F>& A, const Polynomial& L, int d) {
    if (L.is_zero() || L.degree() != 1)
        throw std::invalid_argument("multiplication form must be linear and nonzero");
    const Ring& R = A.ring();
    const F& K = A.field();
    const GradedIdeal<F>& I = A.ideal();

    MultiplicationRank result;
    result.dim_from = A.dim(d);
    result.dim_to = A.dim(d + 1);
    if (result.dim_from == 0 || result.dim_to == 0) return result;

    const DegreePiece<F>& target = I.piece(d + 1);
    const std::vector<size_t>& from = I.piece(d).standards;
    std::vector<long> pos(static_cast<size_t>(R.dimension(d + 1)), -1);
    for (size_t s = 0; s < target.standards.size(); ++s)
        pos[target.standards[s]] = static_cast<long>(s);

    // Integer fast path: monomial reduction with integral coefficients.
    if constexpr (std::is_same_v<F, RationalField>) {
        if (target.unit_rows && detail::integer_coefficients(L)) {
            std::vector<long> lc(static_cast<size_t>(R.nvars()), 0);
            for (const auto& [m, c] : L.terms())
                lc[static_cast<size_t>(m.max_index() - 1)] = c.get_num().get_si();
            std::vector<std::vector<long>> rows(
                from.size(), std::vector<long>(static_cast<size_t>(result.dim_to), 0));
            for (size_t k = 0; k < from.size(); ++k)
                for (int i = 1; i <= R.nvars(); ++i) {
                    if (lc[static_cast<size_t>(i - 1)] == 0) continue;
                    long t = pos[static_cast<size_t>(R.shift_table(d, i)[from[k]])];
                    if (t >= 0) rows[k][static_cast<size_t>(t)] += lc[static_cast<size_t>(i - 1)];
                }
            result.rank = static_cast<long>(int_matrix_rank(rows));
            return result;
        }
    }

    std::vector<typename F::value_type> lcoeffs = detail::linear_coefficients(K, R, L);
    Matrix<F> M(K, from.size(), static_cast<size_t>(result.dim_to));
    for (size_t k = 0; k < from.size(); ++k) {
        std::vector<typename F::value_type> w(static_cast<size_t>(R.dimension(d + 1)), K.zero());
        for (int i = 1; i <= R.nvars(); ++i) {
            if (K.is_zero(lcoeffs[static_cast<size_t>(i - 1)])) continue;
            K.add_assign(w[static_cast<size_t>(R.shift_table(d, i)[from[k]])],
                         lcoeffs[static_cast<size_t>(i - 1)]);
        }
        target.reduce(K, w);
        for (size_t s = 0; s < target.standards.size(); ++s) M.at(k, s) = w[target.standards[s]];
    }
    result.rank = static_cast<long>(rank(std::move(M)));
    return result;
}

struct WlpDegreeReport {
    int d = 0;
    long dim_from = 0;
    long dim_to = 0;
    long required = 0; // min(dim_from, dim_to)
    long rank = 0;     // best rank over the attempted forms
};

struct WlpReport {
    bool wlp = false;
    std::optional<int> witness_degree; // first degree where the rank falls short
    std::vector<WlpDegreeReport> degrees;
    std::vector<Polynomial> forms; // the linear forms that were tried
    HilbertFunction h;
};

/// Decide the weak Lefschetz property of R/I.  A monomial ideal is tested
/// exactly with L = x_1 + ... + x_r; otherwise `trials` random integer linear
/// forms with coefficients in [-10^6, 10^6] are tried and the best rank per
/// degree is kept.
template <class F>
WlpReport has_wlp(const GradedQuotient<F>& A, std::optional<Polynomial> L = std::nullopt,
                  std::uint64_t seed = 0, int d_cap = kDefaultDegreeCap, int trials = 3) {
    const Ring& R = A.ring();
    WlpReport report;
    report.h = hilbert_function(A, d_cap);

    if (L.has_value()) {
        report.forms.push_back(*L);
    } else if (A.ideal().is_monomial()) {
        report.forms.push_back(Polynomial::sum_of_variables(R.nvars()));
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long> coeff(-1000000, 1000000);
        for (int t = 0; t < trials; ++t) {
            std::vector<mpq_class> coeffs;
            for (int i = 0; i < R.nvars(); ++i) {
                long c = coeff(rng);
                while (c == 0) c = coeff(rng);
                coeffs.emplace_back(c);
            }
            report.forms.push_back(Polynomial::linear_form(coeffs));
        }
    }

    report.wlp = true;
    const int e = report.h.socle_degree();
    for (int d = 0; d <= e; ++d) {
        WlpDegreeReport row;
        row.d = d;
        row.dim_from = A.dim(d);
        row.dim_to = A.dim(d + 1);
        row.required = std::min(row.dim_from, row.dim_to);
        for (const Polynomial& form : report.forms) {
            row.rank = std::max(row.rank, multiplication_rank(A, form, d).rank);
            if (row.rank == row.required) break;
        }
        if (row.rank < row.required && report.wlp) {
            report.wlp = false;
            report.witness_degree = d;
        }
        report.degrees.push_back(row);
    }
    return report;
}

struct StanleyDecomposition {
    HilbertFunction h;  // Hilbert function of R/I
    std::vector<Int> b; // b_i = dim (R/(I:L))_{i-1}, with b_0 = 0
    std::vector<Int> c; // c_i = dim (R/(I,L))_i
};

/// Split the Hilbert function of an artinian R/I along a linear form:
/// h_i = b_i + c_i from the exact sequence
/// 0 -> (R/(I:L))(-1) -> R/I -> R/(I,L) -> 0.
/// Throws LinearFormInIdeal when L lies in I_1 but I_1 is a proper subspace
/// of R_1 (the split is degenerate rather than merely trivial).
template <class F>
StanleyDecomposition stanley_decompose(const GradedIdeal<F>& I, const Polynomial& L,
                                       int d_cap = kDefaultDegreeCap) {
    if (L.is_zero() || L.degree() != 1)
        throw std::invalid_argument("splitting form must be linear and nonzero");
    const Ring& R = I.ring();
    const F& K = I.field();

    StanleyDecomposition out;
    out.h = hilbert_function(GradedQuotient<F>(I), d_cap);

    const DegreePiece<F>& deg1 = I.piece(1);
    if (deg1.rank() < R.nvars() &&
        deg1.contains(K, detail::polynomial_row(K, R, L, 1)))
        throw LinearFormInIdeal(L.to_string());

    GradedIdeal<F> colon = colon_by_linear_form(I, L);
    GradedIdeal<F> sum = augment_by_linear_form(I, L);

    const int e = out.h.socle_degree();
    out.b.assign(static_cast<size_t>(e + 1), Int(0));
    out.c.assign(static_cast<size_t>(e + 1), Int(0));
    for (int i = 0; i <= e; ++i) {
        if (i >= 1) out.b[static_cast<size_t>(i)] = Int(colon.quotient_dim(i - 1));
        out.c[static_cast<size_t>(i)] = Int(sum.quotient_dim(i));
        if (out.h[i] != out.b[static_cast<size_t>(i)] + out.c[static_cast<size_t>(i)])
            throw std::logic_error("stanley_decompose: h_i != b_i + c_i");
    }
    // One degree past the socle both summands must vanish.
    if (e >= 0 && (colon.quotient_dim(e) != 0 || sum.quotient_dim(e + 1) != 0))
        throw std::logic_error("stanley_decompose: nonzero summand past the socle");
    return out;
}

struct GreenRow {
    int d = 0;
    Int c_d;   // dim (R/(I,L))_d
    Int bound; // lower_shift(h_d, d)
    bool ok = false;
};

struct GreenReport {
    std::vector<GreenRow> rows;
    bool all_ok = true;
};

/// Check Green's restriction bound c_d <= h_d_<d> (lower_shift) in every
/// positive degree of the artinian quotient.
template <class F>
GreenReport green_bound_check(const GradedIdeal<F>& I, const Polynomial& L,
                              int d_cap = kDefaultDegreeCap) {
    HilbertFunction h = hilbert_function(GradedQuotient<F>(I), d_cap);
    GradedIdeal<F> sum = augment_by_linear_form(I, L);
    GreenReport report;
    for (int d = 1; d <= h.socle_degree(); ++d) {
        GreenRow row;
        row.d = d;
        row.c_d = Int(sum.quotient_dim(d));
        row.bound = lower_shift(h[d], d);
        row.ok = row.c_d <= row.bound;
        if (!row.ok) report.all_ok = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Socle dimensions by degree (only nonzero entries appear): the kernel of
/// the stacked multiplications A_d -> A_{d+1}^r.
template <class F>
std::map<int, long> socle(const GradedQuotient<F>& A, int d_cap = kDefaultDegreeCap) {
    const Ring& R = A.ring();
    const F& K = A.field();
    const GradedIdeal<F>& I = A.ideal();
    HilbertFunction h = hilbert_function(A, d_cap);

    std::map<int, long> out;
    for (int d = 0; d <= h.socle_degree(); ++d) {
        const std::vector<size_t>& from = I.piece(d).standards;
        const DegreePiece<F>& target = I.piece(d + 1);
        const long h_next = target.quotient_dim();
        long rk = 0;
        if (h_next > 0) {
            std::vector<long> pos(static_cast<size_t>(R.dimension(d + 1)), -1);
            for (size_t s = 0; s < target.standards.size(); ++s)
                pos[target.standards[s]] = static_cast<long>(s);
            if (target.unit_rows) {
                std::vector<std::vector<long>> rows(
                    from.size(),
                    std::vector<long>(static_cast<size_t>(R.nvars()) * h_next, 0));
                for (size_t k = 0; k < from.size(); ++k)
                    for (int i = 1; i <= R.nvars(); ++i) {
                        long t = pos[static_cast<size_t>(R.shift_table(d, i)[from[k]])];
                        if (t >= 0)
                            rows[k][static_cast<size_t>(i - 1) * h_next +
                                    static_cast<size_t>(t)] = 1;
                    }
                rk = static_cast<long>(int_matrix_rank(rows));
            } else {
                Matrix<F> M(K, from.size(), static_cast<size_t>(R.nvars()) * h_next);
                for (size_t k = 0; k < from.size(); ++k)
                    for (int i = 1; i <= R.nvars(); ++i) {
                        std::vector<typename F::value_type> w(
                            static_cast<size_t>(R.dimension(d + 1)), K.zero());
                        w[static_cast<size_t>(R.shift_table(d, i)[from[k]])] = K.one();
                        target.reduce(K, w);
                        for (size_t s = 0; s < target.standards.size(); ++s)
                            M.at(k, static_cast<size_t>(i - 1) * h_next + s) =
                                w[target.standards[s]];
                    }
                rk = static_cast<long>(rank(std::move(M)));
            }
        }
        long dim = h[d].get_si() - rk;
        if (dim > 0) out[d] = dim;
    }
    return out;
}

/// True when the socle is concentrated in the socle degree.
template <class F>
bool is_level(const GradedQuotient<F>& A, int d_cap = kDefaultDegreeCap) {
    HilbertFunction h = hilbert_function(A, d_cap);
    if (h.is_zero()) return false;
    std::map<int, long> s = socle(A, d_cap);
    return s.size() == 1 && s.begin()->first == h.socle_degree();
}

template <class F>
struct EnumeratedIdeal {
    GradedIdeal<F> ideal;
    std::vector<Monomial> generators; // minimal, ascending graded-lex
};

/// All monomial ideals with quotient Hilbert function H, streamed in
/// canonical order (lexicographic on the sorted minimal generator lists).
/// Requires h_1 = r, i.e. no linear forms in the ideal.
template <class F>
class MonomialIdealEnumerator {
public:
    MonomialIdealEnumerator(Ring ring, F field, HilbertFunction H)
        : ring_(std::move(ring)), field_(std::move(field)), H_(std::move(H)) {
        require_o_sequence(H_);
        if (H_[1] != ring_.nvars())
            throw CodimensionMismatch("h_1 = " + H_[1].get_str() + " but the ring has " +
                                      std::to_string(ring_.nvars()) + " variables");
        e_ = H_.socle_degree();
        std::vector<std::vector<size_t>> standards(2);
        standards[0] = {0};
        standards[1].resize(static_cast<size_t>(ring_.nvars()));
        for (size_t c = 0; c < standards[1].size(); ++c) standards[1][c] = c;
        if (e_ == 0) {
            // H = (1) contradicts h_1 = r >= 1, so this cannot happen.
            throw std::logic_error("enumerator: socle degree 0 with positive codimension");
        }
        descend(2, standards);
        canonical_sort();
    }

    std::optional<EnumeratedIdeal<F>> next() {
        if (pos_ == results_.size()) return std::nullopt;
        return results_[pos_++];
    }

    size_t count() const { return results_.size(); }

private:
    /// Degree-d monomials all of whose degree-(d-1) divisors are standard.
    std::vector<size_t> closed_candidates(int d, const std::vector<size_t>& prev) const {
        const long dim_prev = ring_.dimension(d - 1);
        std::vector<char> std_prev(static_cast<size_t>(dim_prev), 0);
        for (size_t c : prev) std_prev[c] = 1;
        const auto& basis = ring_.basis(d);
        std::vector<size_t> out;
        for (size_t j = 0; j < basis.size(); ++j) {
            bool ok = true;
            for (int i = 1; i <= ring_.nvars() && ok; ++i) {
                if (basis[j].exps[static_cast<size_t>(i - 1)] == 0) continue;
                Monomial quotient = basis[j].divided_by(ring_.variable(i));
                if (!std_prev[static_cast<size_t>(ring_.index_of(quotient))]) ok = false;
            }
            if (ok) out.push_back(j);
        }
        return out;
    }

    void descend(int d, std::vector<std::vector<size_t>>& standards) {
        if (d > e_) {
            record(standards);
            return;
        }
        std::vector<size_t> cand = closed_candidates(d, standards.back());
        const long need = H_[d].get_si();
        if (static_cast<long>(cand.size()) < need) return;
        std::vector<size_t> pick;
        pick.reserve(static_cast<size_t>(need));
        choose(cand, 0, need, pick, d, standards);
    }

    void choose(const std::vector<size_t>& cand, size_t start, long need,
                std::vector<size_t>& pick, int d, std::vector<std::vector<size_t>>& standards) {
        if (need == 0) {
            standards.push_back(pick);
            descend(d + 1, standards);
            standards.pop_back();
            return;
        }
        for (size_t i = start; i + static_cast<size_t>(need) <= cand.size(); ++i) {
            pick.push_back(cand[i]);
            choose(cand, i + 1, need - 1, pick, d, standards);
            pick.pop_back();
        }
    }

    void record(const std::vector<std::vector<size_t>>& standards) {
        GradedIdeal<F> I(std::make_shared<detail::ExplicitMonomialCore<F>>(ring_, field_,
                                                                           standards));
        std::vector<Monomial> gens = minimal_monomial_generators(I, e_ + 1);
        results_.push_back(EnumeratedIdeal<F>{std::move(I), std::move(gens)});
    }

    void canonical_sort() {
        auto mono_less = [](const Monomial& a, const Monomial& b) { return grlex_greater(b, a); };
        std::sort(results_.begin(), results_.end(),
                  [&](const EnumeratedIdeal<F>& a, const EnumeratedIdeal<F>& b) {
                      return std::lexicographical_compare(a.generators.begin(),
                                                          a.generators.end(),
                                                          b.generators.begin(),
                                                          b.generators.end(), mono_less);
                  });
    }

    Ring ring_;
    F field_;
    HilbertFunction H_;
    int e_ = 0;
    std::vector<EnumeratedIdeal<F>> results_;
    size_t pos_ = 0;
};

template <class F>
MonomialIdealEnumerator<F> enumerate_monomial_ideals(Ring ring, F field, HilbertFunction H) {
    return MonomialIdealEnumerator<F>(std::move(ring), std::move(field), std::move(H));
}

/// Twelve points of P^2 arranged on four lines (5 + 4 + 2 + 1 points) so the
/// homogeneous coordinate ring has Hilbert function 1, 3, 6, 10, 12, 12, 12
/// through degree six.  The layout is drawn from the seed and re-randomized
/// until the Hilbert function check passes.
inline std::vector<std::vector<mpq_class>> k_configuration_points(std::uint64_t seed = 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> small(1, 9);
    const HilbertFunction expected({1, 3, 6, 10, 12, 12, 12});

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<std::vector<mpq_class>> pts;
        auto draw_distinct = [&](size_t n) {
            std::set<long> vals;
            while (vals.size() < n) vals.insert(small(rng));
            return std::vector<long>(vals.begin(), vals.end());
        };

        // five points on x3 = 0, parametrized (1 : t : 0)
        for (long t : draw_distinct(5)) pts.push_back({1, t, 0});
        // four points on x2 = 0, parametrized (1 : 0 : u)
        for (long u : draw_distinct(4)) pts.push_back({1, 0, u});
        // two points on x2 = x3, parametrized (v : 1 : 1)
        for (long v : draw_distinct(2)) pts.push_back({v, 1, 1});
        // one further point off all three lines
        long p = small(rng), q = small(rng), s = small(rng);
        pts.push_back({p, q, s});
        if (s == 0 || q == 0 || q == s) continue;

        try {
            Ring R(3);
            GradedQuotient<RationalField> A(
                ideal_from_points(R, RationalField{}, pts));
            bool good = true;
            for (int d = 0; d <= 6 && good; ++d)
                if (Int(A.dim(d)) != expected[d]) good = false;
            if (good) return pts;
        } catch (const DuplicatePoint&) {
            // coincident draw; fall through and retry
        }
    }
    throw std::logic_error("k_configuration_points: no admissible configuration found");
}

} // namespace wlp
