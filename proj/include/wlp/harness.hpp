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
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wlp/algebra.hpp"
#include "wlp/betti.hpp"
#include "wlp/hilbert.hpp"

namespace wlp {

/// Options for the batch verification sweep: enumerate Hilbert functions,
/// compare the classifier verdict against the observed weak Lefschetz
/// behaviour of the monomial algebras realizing each one, and optionally run
/// the decomposition, restriction-bound, and Betti cross-checks per ideal.
struct SweepOptions {
    int codim = 2;
    int max_socle_degree = 4;
    Int max_value = Int(5);
    std::optional<HilbertFunction> only; // restrict the sweep to one sequence

    /// Negative: exhaustive enumeration.  Otherwise the lex ideal plus this
    /// many randomly drawn monomial ideals are tested per sequence.
    long sample = -1;
    std::uint64_t seed = 0;

    bool check_stanley_green = false; // per ideal: h = b + c and Green's bound
    bool check_betti = false;         // per ideal: lex dominance + numerator

    /// Exhaustive runs refuse to start when the estimated ideal count
    /// exceeds this limit, unless force is set.
    Int guard_limit = Int(1000000);
    bool force = false;
    int d_cap = kDefaultDegreeCap;
};

/// A fatal inconsistency: the classifier verdict and the algebras disagree,
/// or one of the per-ideal identities fails.
struct SweepFinding {
    HilbertFunction h;
    std::string kind;   // forcing | converse | stanley | green | betti-ek | betti-dominance | betti-euler
    std::string detail;
};

/// Per-sequence tally.
struct SweepCase {
    HilbertFunction h;
    bool forces = false;
    long ideals = 0;
    long wlp_failures = 0;
    bool witness_found = false; // some tested ideal lacks the WLP
};

struct SweepSummary {
    bool ran = false; // false when the guard refused an exhaustive run
    Int estimate;     // upper bound on the exhaustive ideal count
    long sequences = 0;
    long ideals = 0;
    std::vector<SweepCase> cases;
    std::vector<SweepFinding> findings;
    std::vector<std::string> notes; // non-fatal observations (sampling gaps)

    bool consistent() const { return findings.empty(); }
};

namespace detail {

/// Product over degrees of C(dim R_d, h_d): the number of per-degree choices
/// of standard monomials ignoring the closure constraint, hence an upper
/// bound on the number of monomial ideals attaining H.
inline Int ideal_count_upper_bound(const Ring& R, const HilbertFunction& H) {
    Int product = 1;
    for (int d = 2; d <= H.socle_degree(); ++d) {
        Int dim(R.dimension(d));
        Int h = H[d];
        if (h < 0 || h > dim) return 0; // not attainable in this ring
        product *= binomial(dim, h.get_ui());
    }
    return product;
}

inline std::uint64_t fnv1a(const std::string& text, std::uint64_t seed) {
    std::uint64_t hash = 14695981039346656037ULL ^ seed;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 1099511628211ULL;
    }
    return hash;
}

inline std::string monomial_list(const std::vector<Monomial>& gens) {
    std::string out;
    for (const Monomial& g : gens) {
        if (!out.empty()) out += ", ";
        out += g.to_string();
    }
    return out.empty() ? "(0)" : out;
}

/// Draw one random downward-closed standard set realizing H and return the
/// monomials spanning its complement (a generating set of the ideal).
/// Returns nullopt when the draw dead-ends (closure can starve a degree).
inline std::optional<std::vector<Monomial>> random_standard_complement(const Ring& R,
                                                                       const HilbertFunction& H,
                                                                       std::mt19937_64& rng) {
    const int e = H.socle_degree();
    std::vector<Monomial> gens;
    std::vector<std::vector<char>> standard(static_cast<size_t>(e) + 1);
    standard[0].assign(1, 1);
    for (int d = 1; d <= e; ++d) {
        const auto& basis = R.basis(d);
        std::vector<size_t> candidates;
        for (size_t m = 0; m < basis.size(); ++m) {
            bool closed = true;
            for (int v = 1; v <= R.nvars() && closed; ++v) {
                if (basis[m].exps[static_cast<size_t>(v - 1)] == 0) continue;
                Monomial div = basis[m].divided_by(R.variable(v));
                if (!standard[static_cast<size_t>(d - 1)][R.index_of(div)]) closed = false;
            }
            if (closed) candidates.push_back(m);
        }
        const size_t need = H[d].get_ui();
        if (candidates.size() < need) return std::nullopt;
        for (size_t k = candidates.size(); k > candidates.size() - need; --k)
            std::swap(candidates[k - 1], candidates[rng() % k]);
        std::vector<char> layer(basis.size(), 0);
        for (size_t k = candidates.size() - need; k < candidates.size(); ++k)
            layer[candidates[k]] = 1;
        standard[static_cast<size_t>(d)] = std::move(layer);
        for (size_t m = 0; m < basis.size(); ++m)
            if (!standard[static_cast<size_t>(d)][m]) gens.push_back(basis[m]);
    }
    for (const Monomial& m : R.basis(e + 1)) gens.push_back(m);
    return gens;
}

} // namespace detail

/// Estimated number of monomial ideals an exhaustive sweep would visit.
inline Int estimate_sweep_ideals(const SweepOptions& opt) {
    Ring R(opt.codim);
    Int total = 0;
    if (opt.only) {
        total = detail::ideal_count_upper_bound(R, *opt.only);
    } else {
        OSequenceEnumerator seqs =
            enumerate_o_sequences(opt.codim, opt.max_socle_degree, opt.max_value);
        while (auto H = seqs.next()) total += detail::ideal_count_upper_bound(R, *H);
    }
    return total;
}

/// Run the sweep behind the `verify-theorem5` verb.  For every enumerated Hilbert
/// function the classifier verdict is compared with the observed WLP
/// behaviour over all (or sampled) monomial ideals attaining it:
///   - verdict true  => every tested algebra must pass has_wlp;
///   - verdict false => some tested algebra must fail it (lex is tried first).
/// Optional per-ideal checks: the exact splitting h_i = b_i + c_i with the
/// restriction bound c_d <= h_d_<d>, and the Betti cross-checks (closed form
/// vs homology on lex, lex dominance, numerator identity).
template <class F = RationalField>
SweepSummary verify_theorem5(const SweepOptions& opt, const F& field = F{}) {
    Ring R(opt.codim);
    SweepSummary out;

    std::vector<HilbertFunction> seqs;
    if (opt.only) {
        require_o_sequence(*opt.only);
        if ((*opt.only)[1] != opt.codim)
            throw CodimensionMismatch("h_1 = " + (*opt.only)[1].get_str() +
                                      " but the sweep codimension is " +
                                      std::to_string(opt.codim));
        seqs.push_back(*opt.only);
    } else {
        OSequenceEnumerator en =
            enumerate_o_sequences(opt.codim, opt.max_socle_degree, opt.max_value);
        while (auto H = en.next()) seqs.push_back(*H);
    }
    out.sequences = static_cast<long>(seqs.size());
    for (const HilbertFunction& H : seqs) out.estimate += detail::ideal_count_upper_bound(R, H);

    if (opt.sample < 0 && out.estimate > opt.guard_limit && !opt.force) return out;
    out.ran = true;

    const Polynomial split_form = Polynomial::sum_of_variables(opt.codim);

    for (const HilbertFunction& H : seqs) {
        SweepCase entry;
        entry.h = H;
        entry.forces = forces_wlp(H);
        const int e = H.socle_degree();

        auto finding = [&](const std::string& kind, const std::string& detail) {
            out.findings.push_back(SweepFinding{H, kind, detail});
        };

        // Reference data from the lex ideal of H.
        GradedIdeal<F> lex = lex_ideal(R, field, H);
        std::vector<Monomial> lex_gens = minimal_monomial_generators(lex, e + 1);
        BettiTable lex_table;
        if (opt.check_betti) {
            lex_table = eliahou_kervaire_betti(R, lex_gens);
            BettiTable homology = koszul_betti(GradedQuotient<F>(lex), opt.d_cap);
            if (lex_table != homology)
                finding("betti-ek",
                        "closed form and Koszul homology disagree on the lex ideal <" +
                            detail::monomial_list(lex_gens) + ">");
        }

        auto check_ideal = [&](const GradedIdeal<F>& I, const std::vector<Monomial>& gens) {
            ++entry.ideals;
            GradedQuotient<F> A(I);
            WlpReport wlp = has_wlp(A, std::nullopt, opt.seed, opt.d_cap);
            if (!wlp.wlp) {
                ++entry.wlp_failures;
                entry.witness_found = true;
                if (entry.forces)
                    finding("forcing", "<" + detail::monomial_list(gens) +
                                           "> fails the WLP in degree " +
                                           std::to_string(wlp.witness_degree.value_or(-1)) +
                                           " although the Hilbert function forces it");
            }
            if (opt.check_stanley_green) {
                StanleyDecomposition sd = stanley_decompose(I, split_form, opt.d_cap);
                for (int i = 0; i <= e; ++i)
                    if (sd.h[i] != sd.b[static_cast<size_t>(i)] + sd.c[static_cast<size_t>(i)])
                        finding("stanley", "<" + detail::monomial_list(gens) +
                                               ">: h_" + std::to_string(i) + " != b + c");
                GreenReport green = green_bound_check(I, split_form, opt.d_cap);
                if (!green.all_ok)
                    for (const GreenRow& row : green.rows)
                        if (!row.ok)
                            finding("green", "<" + detail::monomial_list(gens) + ">: c_" +
                                                 std::to_string(row.d) + " = " +
                                                 row.c_d.get_str() + " exceeds " +
                                                 row.bound.get_str());
            }
            if (opt.check_betti) {
                BettiTable table = koszul_betti(A, opt.d_cap);
                if (!dominates(lex_table, table))
                    finding("betti-dominance", "lex table fails to dominate <" +
                                                   detail::monomial_list(gens) + ">");
                if (!hilbert_numerator_check(table, H).matches)
                    finding("betti-euler", "numerator identity fails for <" +
                                               detail::monomial_list(gens) + ">");
            }
        };

        if (opt.sample < 0) {
            MonomialIdealEnumerator<F> ideals = enumerate_monomial_ideals(R, field, H);
            while (auto item = ideals.next()) check_ideal(item->ideal, item->generators);
        } else {
            check_ideal(lex, lex_gens);
            std::mt19937_64 rng(detail::fnv1a(H.to_string(), opt.seed));
            long drawn = 0;
            int dead_ends = 0;
            while (drawn < opt.sample && dead_ends < 50) {
                auto gens = detail::random_standard_complement(R, H, rng);
                if (!gens) {
                    ++dead_ends;
                    continue;
                }
                std::vector<Polynomial> polys;
                polys.reserve(gens->size());
                for (const Monomial& m : *gens) polys.emplace_back(Polynomial::from_monomial(m));
                GradedIdeal<F> I = ideal_from_generators(R, field, std::move(polys));
                check_ideal(I, minimal_monomial_generators(I, e + 1));
                ++drawn;
            }
            if (drawn < opt.sample)
                out.notes.push_back("sampling starved for " + H.to_string() + " after " +
                                    std::to_string(drawn) + " draws");
        }

        if (!entry.forces && !entry.witness_found) {
            if (opt.sample < 0)
                finding("converse", "no monomial ideal attaining " + H.to_string() +
                                        " fails the WLP although the classifier says " +
                                        "the function does not force it");
            else
                out.notes.push_back("no WLP failure among the sampled ideals for " +
                                    H.to_string() + " (verdict false; sample too small?)");
        }

        out.ideals += entry.ideals;
        out.cases.push_back(std::move(entry));
    }
    return out;
}

} // namespace wlp
