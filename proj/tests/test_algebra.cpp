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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wlp/algebra.hpp"

using wlp::GradedIdeal;
using wlp::GradedQuotient;
using wlp::HilbertFunction;
using wlp::Monomial;
using wlp::Polynomial;
using wlp::PrimeField;
using wlp::RationalField;
using wlp::Ring;

namespace {

const RationalField Q;

Polynomial P(const std::string& text, int nvars) { return Polynomial::parse(text, nvars); }

GradedIdeal<RationalField> span_ideal(int r, const std::vector<std::string>& gens) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(P(g, r));
    return wlp::ideal_from_generators(Ring(r), Q, polys);
}

HilbertFunction quotient_hf(const GradedIdeal<RationalField>& I, int d_cap = 30) {
    return wlp::hilbert_function(GradedQuotient<RationalField>(I), d_cap);
}

std::vector<std::string> names(const std::vector<Monomial>& ms) {
    std::vector<std::string> out;
    for (const auto& m : ms) out.push_back(m.to_string());
    return out;
}

// Independent oracle: standard monomials of a monomial ideal are exactly the
// basis monomials divisible by no generator.
std::vector<Monomial> oracle_standards(const Ring& R, const std::vector<Monomial>& gens, int d) {
    std::vector<Monomial> out;
    for (const Monomial& m : R.basis(d)) {
        bool divisible = false;
        for (const Monomial& g : gens)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) out.push_back(m);
    }
    return out;
}

// Independent oracle: minimal generators of the monomial ideal determined by
// per-degree standard sets — ideal members none of whose variable-quotients
// lie in the ideal.
std::vector<Monomial> oracle_min_gens(const Ring& R, const std::vector<Monomial>& gens,
                                      int up_to) {
    std::vector<Monomial> out;
    for (int d = 1; d <= up_to; ++d) {
        for (const Monomial& m : R.basis(d)) {
            bool in_ideal = false;
            for (const Monomial& g : gens)
                if (g.divides(m)) in_ideal = true;
            if (!in_ideal) continue;
            bool minimal = true;
            for (int i = 1; i <= R.nvars() && minimal; ++i) {
                if (m.exps[static_cast<size_t>(i - 1)] == 0) continue;
                Monomial q = m.divided_by(R.variable(i));
                for (const Monomial& g : gens)
                    if (g.divides(q)) minimal = false;
            }
            if (minimal) out.push_back(m);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return wlp::grlex_greater(b, a); });
    return out;
}

// Independent enumeration count: exhaustive bitmask search over downward-closed
// standard-monomial selections, one degree at a time.
size_t brute_force_ideal_count(const Ring& R, const HilbertFunction& H) {
    const int e = H.socle_degree();
    std::vector<std::vector<Monomial>> chosen(static_cast<size_t>(e) + 1);
    chosen[0] = {Monomial::one(R.nvars())};
    chosen[1] = R.basis(1);

    size_t count = 0;
    auto closed = [&](const Monomial& m, const std::vector<Monomial>& prev) {
        for (int i = 1; i <= R.nvars(); ++i) {
            if (m.exps[static_cast<size_t>(i - 1)] == 0) continue;
            Monomial q = m.divided_by(R.variable(i));
            if (std::find(prev.begin(), prev.end(), q) == prev.end()) return false;
        }
        return true;
    };

    std::function<void(int)> walk = [&](int d) {
        if (d > e) {
            ++count;
            return;
        }
        const auto& basis = R.basis(d);
        const long need = H[d].get_si();
        const size_t n = basis.size();
        for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
            if (static_cast<long>(__builtin_popcountl(mask)) != need) continue;
            std::vector<Monomial> pick;
            bool ok = true;
            for (size_t j = 0; j < n && ok; ++j) {
                if (!(mask & (1UL << j))) continue;
                if (!closed(basis[j], chosen[static_cast<size_t>(d) - 1])) ok = false;
                pick.push_back(basis[j]);
            }
            if (!ok) continue;
            chosen[static_cast<size_t>(d)] = pick;
            walk(d + 1);
        }
    };
    walk(2);
    return count;
}

} // namespace

TEST_CASE("spanned monomial ideals reproduce their quotient Hilbert functions") {
    REQUIRE(quotient_hf(span_ideal(3, {"x1^2", "x2^2", "x3^2"})) ==
            HilbertFunction({1, 3, 3, 1}));
    REQUIRE(quotient_hf(span_ideal(2, {"x1^2", "x1*x2", "x2^3"})) == HilbertFunction({1, 2, 1}));
    REQUIRE(quotient_hf(span_ideal(1, {"x1"})) == HilbertFunction({1}));
    REQUIRE(quotient_hf(span_ideal(3, {"x1^3", "x2^3", "x3^3", "x1*x2*x3"})) ==
            HilbertFunction({1, 3, 6, 6, 3}));
    REQUIRE(span_ideal(3, {"x1^2", "x2^2"}).is_monomial());
}

TEST_CASE("generator validation and the artinian cap") {
    REQUIRE_THROWS_AS(span_ideal(2, {"x1 + x2^2"}), wlp::NonHomogeneousGenerator);
    REQUIRE_THROWS_AS(span_ideal(2, {"x1 - x1"}), std::invalid_argument);
    REQUIRE_THROWS_AS(quotient_hf(span_ideal(2, {}), 5), wlp::NotArtinianByCap);
    REQUIRE_THROWS_AS(quotient_hf(span_ideal(2, {"x1^2"}), 8), wlp::NotArtinianByCap);
}

TEST_CASE("non-monomial complete intersections reduce exactly") {
    GradedIdeal<RationalField> I = span_ideal(2, {"x1^2 - 7*x2^2", "x1*x2 + 3*x2^2"});
    REQUIRE_FALSE(I.is_monomial());
    REQUIRE(quotient_hf(I) == HilbertFunction({1, 2, 1}));

    GradedIdeal<RationalField> J = span_ideal(2, {"x1^2 - x2^2", "x1^3 - 2*x2^3"});
    REQUIRE(quotient_hf(J) == HilbertFunction({1, 2, 2, 1}));

    GradedIdeal<RationalField> K = span_ideal(2, {"x1^2", "x1*x2", "x2^3"});
    REQUIRE(K.contains(P("x1^2 + x1*x2", 2)));
    REQUIRE_FALSE(K.contains(P("x2^2", 2)));
    REQUIRE(K.contains(P("x1^3 - 5*x2^3", 2))); // degree 3 is the whole space
    REQUIRE_FALSE(K.contains(P("x1 + x2", 2)));
}

TEST_CASE("quotient standard monomials are the divisibility survivors") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        int r = 2 + static_cast<int>(rng() % 2);
        Ring R(r);
        std::set<std::string> seen;
        std::vector<Monomial> gens;
        std::vector<Polynomial> polys;
        int ngens = 2 + static_cast<int>(rng() % 3);
        for (int g = 0; g < ngens; ++g) {
            int d = 1 + static_cast<int>(rng() % 3);
            const auto& basis = R.basis(d);
            const Monomial& m = basis[rng() % basis.size()];
            if (!seen.insert(m.to_string()).second) continue;
            gens.push_back(m);
            polys.push_back(Polynomial::from_monomial(m));
        }
        if (polys.empty()) continue;
        GradedIdeal<RationalField> I = wlp::ideal_from_generators(R, Q, polys);
        GradedQuotient<RationalField> A(I);
        for (int d = 0; d <= 6; ++d) {
            std::vector<Monomial> expected = oracle_standards(R, gens, d);
            REQUIRE(A.dim(d) == static_cast<long>(expected.size()));
            REQUIRE(A.standard_monomials(d) == expected);
        }
    }
}

TEST_CASE("lex ideals realize their Hilbert function with frozen generators") {
    GradedIdeal<RationalField> I = wlp::lex_ideal(Ring(2), Q, HilbertFunction({1, 2, 1}));
    REQUIRE(names(wlp::minimal_monomial_generators(I, 4)) ==
            std::vector<std::string>{"x1*x2", "x1^2", "x2^3"});
    REQUIRE(quotient_hf(I) == HilbertFunction({1, 2, 1}));
    REQUIRE(GradedQuotient<RationalField>(I).standard_monomials(2) ==
            std::vector<Monomial>{Monomial({0, 2})});

    // A Hilbert function that dies in degree 3 is generated by all cubics;
    // the full-through-degree-3 function moves the wall to the quartics.
    REQUIRE(names(wlp::minimal_monomial_generators(
                wlp::lex_ideal(Ring(2), Q, HilbertFunction({1, 2, 3})), 5)) ==
            std::vector<std::string>{"x2^3", "x1*x2^2", "x1^2*x2", "x1^3"});
    REQUIRE(names(wlp::minimal_monomial_generators(
                wlp::lex_ideal(Ring(2), Q, HilbertFunction({1, 2, 3, 4})), 5)) ==
            std::vector<std::string>{"x2^4", "x1*x2^3", "x1^2*x2^2", "x1^3*x2", "x1^4"});

    REQUIRE(quotient_hf(wlp::lex_ideal(Ring(3), Q, HilbertFunction({1, 3, 4, 2}))) ==
            HilbertFunction({1, 3, 4, 2}));

    REQUIRE_THROWS_AS(wlp::lex_ideal(Ring(2), Q, HilbertFunction({1, 3, 3})),
                      wlp::CodimensionExceedsRing);
    REQUIRE_THROWS_AS(wlp::lex_ideal(Ring(2), Q, HilbertFunction({1, 2, 4})),
                      wlp::NotAnOSequence);
}

TEST_CASE("the big lex example: degrees 4 and 5 frozen, degree 6 closure by oracle") {
    Ring R(3);
    HilbertFunction H({1, 3, 6, 10, 12, 12});
    GradedIdeal<RationalField> I = wlp::lex_ideal(R, Q, H);
    REQUIRE(quotient_hf(I) == H);

    std::vector<Monomial> gens = wlp::minimal_monomial_generators(I, 6);
    std::vector<std::string> deg4, deg5;
    size_t deg6 = 0;
    for (const auto& m : gens) {
        if (m.degree() == 4) deg4.push_back(m.to_string());
        if (m.degree() == 5) deg5.push_back(m.to_string());
        if (m.degree() == 6) ++deg6;
    }
    REQUIRE(deg4 == std::vector<std::string>{"x1^3*x3", "x1^3*x2", "x1^4"});
    REQUIRE(deg5 == std::vector<std::string>{"x1^2*x2*x3^2", "x1^2*x2^2*x3", "x1^2*x2^3"});
    REQUIRE(gens.size() == deg4.size() + deg5.size() + deg6);

    // The degree-6 wall: minimal generators agree with the divisibility oracle
    // applied to the frozen generators of lower degree.
    std::vector<Monomial> lower;
    for (const auto& m : gens)
        if (m.degree() <= 5) lower.push_back(m);
    size_t expected6 = 0;
    for (const Monomial& m : R.basis(6)) {
        bool in_lower = false;
        for (const Monomial& g : lower)
            if (g.divides(m)) in_lower = true;
        if (!in_lower) ++expected6; // survives all lower generators => new wall generator
    }
    REQUIRE(deg6 == expected6);
    REQUIRE(deg6 == 14);
}

TEST_CASE("point ideals: evaluation kernels with exact arithmetic") {
    Ring R(3);
    GradedIdeal<RationalField> single = wlp::ideal_from_points(R, Q, {{1, 0, 0}}, 3);
    for (int d = 0; d <= 3; ++d) REQUIRE(single.quotient_dim(d) == 1);
    REQUIRE_THROWS_AS(quotient_hf(single, 4), wlp::NotArtinianByCap);

    GradedIdeal<RationalField> triangle =
        wlp::ideal_from_points(R, Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2);
    REQUIRE(triangle.quotient_dim(0) == 1);
    REQUIRE(triangle.quotient_dim(1) == 3);
    REQUIRE(triangle.quotient_dim(2) == 3);

    GradedIdeal<RationalField> four =
        wlp::ideal_from_points(R, Q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, 3);
    REQUIRE(four.quotient_dim(2) == 4);
    REQUIRE(four.quotient_dim(3) == 4);

    // Projective scaling collapses to the same point.
    REQUIRE_THROWS_AS(wlp::ideal_from_points(R, Q, {{1, 2, 3}, {2, 4, 6}}, 2),
                      wlp::DuplicatePoint);
    std::vector<std::vector<mpq_class>> scaled = {{mpq_class(1, 2), 1, 0}, {1, 2, 0}};
    REQUIRE_THROWS_AS(wlp::ideal_from_points(R, Q, scaled, 2), wlp::DuplicatePoint);

    REQUIRE_THROWS_AS(wlp::ideal_from_points(R, Q, {{0, 0, 0}}, 2), std::invalid_argument);
    REQUIRE_THROWS_AS(wlp::ideal_from_points(R, Q, {{1, 0}}, 2), std::invalid_argument);
}

TEST_CASE("a point ideal alone is never artinian") {
    Ring R(3);
    auto pts = wlp::k_configuration_points(0);
    REQUIRE(pts.size() == 12);
    GradedIdeal<RationalField> IZ = wlp::ideal_from_points(R, Q, pts, 6);
    REQUIRE_THROWS_AS(quotient_hf(IZ, 6), wlp::NotArtinianByCap);
}

TEST_CASE("maximal-power truncation: frozen Hilbert functions") {
    Ring R(3);
    auto pts = wlp::k_configuration_points(0);
    GradedIdeal<RationalField> IZ = wlp::ideal_from_points(R, Q, pts, 7);
    GradedIdeal<RationalField> A1 = wlp::add_maximal_power(IZ, 6);
    REQUIRE(quotient_hf(A1) == HilbertFunction({1, 3, 6, 10, 12, 12}));
    REQUIRE_FALSE(A1.is_monomial());

    REQUIRE(quotient_hf(wlp::add_maximal_power(span_ideal(2, {}), 2)) ==
            HilbertFunction({1, 2}));
    REQUIRE(quotient_hf(wlp::add_maximal_power(span_ideal(2, {}), 1)) == HilbertFunction({1}));
    REQUIRE(wlp::add_maximal_power(span_ideal(2, {}), 2).is_monomial());
    REQUIRE_THROWS_AS(wlp::add_maximal_power(span_ideal(2, {}), 0), std::invalid_argument);
}

TEST_CASE("k-configuration layouts are seed-stable and self-validated") {
    auto pts0 = wlp::k_configuration_points(0);
    auto again = wlp::k_configuration_points(0);
    REQUIRE(pts0 == again);
    REQUIRE(pts0.size() == 12);

    for (std::uint64_t seed : {0ULL, 2ULL}) {
        auto pts = wlp::k_configuration_points(seed);
        Ring R(3);
        GradedIdeal<RationalField> I = wlp::ideal_from_points(R, Q, pts, 6);
        HilbertFunction expected({1, 3, 6, 10, 12, 12, 12});
        for (int d = 0; d <= 6; ++d) REQUIRE(wlp::Int(I.quotient_dim(d)) == expected[d]);
    }
}

TEST_CASE("multiplication rank: frozen values and degenerate cases") {
    GradedQuotient<RationalField> A(span_ideal(2, {"x1^2", "x2^2"}));
    wlp::MultiplicationRank r1 = wlp::multiplication_rank(A, P("x1 + x2", 2), 1);
    REQUIRE(r1.rank == 1);
    REQUIRE(r1.dim_from == 2);
    REQUIRE(r1.dim_to == 1);

    GradedQuotient<RationalField> bad(span_ideal(3, {"x1^3", "x2^3", "x3^3", "x1*x2*x3"}));
    wlp::MultiplicationRank r2 = wlp::multiplication_rank(bad, P("x1 + x2 + x3", 3), 2);
    REQUIRE(r2.rank == 5);
    REQUIRE(r2.dim_from == 6);
    REQUIRE(r2.dim_to == 6);

    // Vanishing endpoints force rank zero.
    REQUIRE(wlp::multiplication_rank(A, P("x1 + x2", 2), 2).rank == 0);
    REQUIRE(wlp::multiplication_rank(A, P("x1 + x2", 2), 2).dim_to == 0);
    REQUIRE(wlp::multiplication_rank(A, P("x1 + x2", 2), 3).dim_from == 0);

    REQUIRE_THROWS_AS(wlp::multiplication_rank(A, P("x1^2", 2), 1), std::invalid_argument);
    REQUIRE_THROWS_AS(wlp::multiplication_rank(A, P("x1 - x1", 2), 1), std::invalid_argument);

    // Non-integer coefficients take the general path and agree.
    REQUIRE(wlp::multiplication_rank(A, P("1/2*x1 + 1/3*x2", 2), 1).rank == 1);
}

TEST_CASE("multiplication rank over a prime field matches the rational value here") {
    Ring R(3);
    PrimeField F(32003);
    std::vector<Polynomial> gens = {P("x1^3", 3), P("x2^3", 3), P("x3^3", 3), P("x1*x2*x3", 3)};
    GradedIdeal<PrimeField> I = wlp::ideal_from_generators(R, F, gens);
    GradedQuotient<PrimeField> A(I);
    REQUIRE(wlp::hilbert_function(A) == HilbertFunction({1, 3, 6, 6, 3}));
    wlp::MultiplicationRank r = wlp::multiplication_rank(A, P("x1 + x2 + x3", 3), 2);
    REQUIRE(r.rank == 5);
}

TEST_CASE("wlp verdicts: the designated failure, lex successes, and the capped points ideal") {
    GradedQuotient<RationalField> bad(span_ideal(3, {"x1^3", "x2^3", "x3^3", "x1*x2*x3"}));
    wlp::WlpReport rb = wlp::has_wlp(bad);
    REQUIRE_FALSE(rb.wlp);
    REQUIRE(rb.witness_degree.has_value());
    REQUIRE(*rb.witness_degree == 2);
    REQUIRE(rb.forms.size() == 1);
    REQUIRE(rb.forms[0] == Polynomial::sum_of_variables(3));
    REQUIRE(rb.degrees[2].required == 6);
    REQUIRE(rb.degrees[2].rank == 5);

    // Codimension-two lex quotients always pass.
    wlp::OSequenceEnumerator seqs = wlp::enumerate_o_sequences(2, 4, 5);
    int tested = 0;
    while (auto H = seqs.next()) {
        GradedQuotient<RationalField> A(wlp::lex_ideal(Ring(2), Q, *H));
        wlp::WlpReport r = wlp::has_wlp(A);
        REQUIRE(r.wlp);
        ++tested;
    }
    REQUIRE(tested >= 20);

    Ring R3(3);
    GradedIdeal<RationalField> IZ =
        wlp::ideal_from_points(R3, Q, wlp::k_configuration_points(0), 7);
    GradedQuotient<RationalField> A1(wlp::add_maximal_power(IZ, 6));
    wlp::WlpReport ra = wlp::has_wlp(A1);
    REQUIRE(ra.wlp);
    REQUIRE(ra.forms.size() == 3); // non-monomial: randomized trials
    REQUIRE_FALSE(ra.witness_degree.has_value());
}

TEST_CASE("wlp randomized trials are deterministic per seed") {
    GradedIdeal<RationalField> I = span_ideal(2, {"x1^2 - x2^2", "x1^3 - 2*x2^3"});
    GradedQuotient<RationalField> A(I);
    wlp::WlpReport a = wlp::has_wlp(A, std::nullopt, 42);
    wlp::WlpReport b = wlp::has_wlp(A, std::nullopt, 42);
    REQUIRE(a.wlp == b.wlp);
    REQUIRE(a.forms.size() == b.forms.size());
    for (size_t k = 0; k < a.forms.size(); ++k)
        REQUIRE(a.forms[k].to_string() == b.forms[k].to_string());
    REQUIRE(a.wlp); // codimension two in characteristic zero

    // An explicit form is honored verbatim -- even one that fails: modulo
    // x1^2 - x2^2 the products x1*(x1+x2) and x2*(x1+x2) coincide, so
    // x1 + x2 is not a Lefschetz element of this algebra.
    wlp::WlpReport c = wlp::has_wlp(A, P("x1 + x2", 2));
    REQUIRE(c.forms.size() == 1);
    REQUIRE_FALSE(c.wlp);
    REQUIRE(c.witness_degree.has_value());
    REQUIRE(*c.witness_degree == 1);

    // A slightly skewed form restores maximal rank in every degree.
    wlp::WlpReport d = wlp::has_wlp(A, P("x1 + 2*x2", 2));
    REQUIRE(d.wlp);
}

TEST_CASE("specialized forms never beat the symmetric form on monomial ideals") {
    GradedQuotient<RationalField> A(wlp::lex_ideal(Ring(3), Q, HilbertFunction({1, 3, 4, 2})));
    for (int d = 0; d <= 2; ++d) {
        long generic = wlp::multiplication_rank(A, Polynomial::sum_of_variables(3), d).rank;
        for (int i = 1; i <= 3; ++i) {
            Polynomial xi = Polynomial::from_monomial(Monomial::variable(i, 3));
            REQUIRE(wlp::multiplication_rank(A, xi, d).rank <= generic);
        }
    }
}

TEST_CASE("colon ideals by linear forms") {
    GradedIdeal<RationalField> m2 = span_ideal(2, {"x1^2", "x1*x2", "x2^2"});
    GradedIdeal<RationalField> colon = wlp::colon_by_linear_form(m2, P("x1 + x2", 2));
    REQUIRE(quotient_hf(colon) == HilbertFunction({1}));
    REQUIRE(colon.contains(P("x1", 2)));
    REQUIRE(colon.contains(P("x2", 2)));

    GradedIdeal<RationalField> principal = span_ideal(2, {"x1"});
    GradedIdeal<RationalField> whole = wlp::colon_by_linear_form(principal, P("x1", 2));
    for (int d = 0; d <= 3; ++d) REQUIRE(whole.quotient_dim(d) == 0);

    GradedIdeal<RationalField> ci = span_ideal(2, {"x1^2", "x2^2"});
    GradedIdeal<RationalField> cx = wlp::colon_by_linear_form(ci, P("x2", 2));
    REQUIRE(quotient_hf(cx) == HilbertFunction({1, 1}));
    REQUIRE(cx.contains(P("x2", 2)));
    REQUIRE(cx.contains(P("x1^2", 2)));
    REQUIRE_FALSE(cx.contains(P("x1", 2)));
}

TEST_CASE("stanley decomposition splits the Hilbert function exactly") {
    wlp::StanleyDecomposition s =
        wlp::stanley_decompose(span_ideal(2, {"x1^2", "x1*x2", "x2^2"}), P("x1 + x2", 2));
    REQUIRE(s.h == HilbertFunction({1, 2}));
    REQUIRE(s.b == std::vector<wlp::Int>{0, 1});
    REQUIRE(s.c == std::vector<wlp::Int>{1, 1});

    // HF (1): the whole degree-one space sits in I, so the check is vacuous
    // and the split is trivial.
    wlp::StanleyDecomposition t = wlp::stanley_decompose(span_ideal(2, {"x1", "x2"}), P("x1", 2));
    REQUIRE(t.h == HilbertFunction({1}));
    REQUIRE(t.b == std::vector<wlp::Int>{0});
    REQUIRE(t.c == std::vector<wlp::Int>{1});

    REQUIRE_THROWS_AS(wlp::stanley_decompose(span_ideal(2, {"x1", "x2^3"}), P("x1", 2)),
                      wlp::LinearFormInIdeal);
    REQUIRE_THROWS_AS(wlp::stanley_decompose(span_ideal(2, {"x1^2"}), P("x1^2", 2)),
                      std::invalid_argument);

    GradedIdeal<RationalField> lex = wlp::lex_ideal(Ring(3), Q, HilbertFunction({1, 3, 4, 2}));
    wlp::StanleyDecomposition u = wlp::stanley_decompose(lex, Polynomial::sum_of_variables(3));
    REQUIRE(u.h == HilbertFunction({1, 3, 4, 2}));
    for (int i = 0; i <= u.h.socle_degree(); ++i)
        REQUIRE(u.h[i] == u.b[static_cast<size_t>(i)] + u.c[static_cast<size_t>(i)]);
}

TEST_CASE("forcing Hilbert functions pin the quotient shape of every member") {
    // H = (1,2,1) forces the weak Lefschetz property; every monomial ideal
    // with this Hilbert function splits with C equal to the first differences.
    HilbertFunction H({1, 2, 1});
    REQUIRE(wlp::forces_wlp(H));
    HilbertFunction expected = wlp::expected_quotient_hf(H);
    auto en = wlp::enumerate_monomial_ideals(Ring(2), Q, H);
    while (auto item = en.next()) {
        wlp::StanleyDecomposition s =
            wlp::stanley_decompose(item->ideal, Polynomial::sum_of_variables(2));
        HilbertFunction c_hf(std::vector<wlp::Int>(
            s.c.begin(), s.c.begin() + (expected.socle_degree() + 1)));
        REQUIRE(c_hf == expected);
        for (size_t k = static_cast<size_t>(expected.socle_degree()) + 1; k < s.c.size(); ++k)
            REQUIRE(s.c[k] == 0);
    }
}

TEST_CASE("green bounds hold with the symmetric form") {
    wlp::GreenReport g = wlp::green_bound_check(
        wlp::lex_ideal(Ring(3), Q, HilbertFunction({1, 3, 4, 2})),
        Polynomial::sum_of_variables(3));
    REQUIRE(g.all_ok);
    REQUIRE(g.rows.size() == 3);

    wlp::GreenReport m2 = wlp::green_bound_check(span_ideal(2, {"x1^2", "x1*x2", "x2^2"}),
                                                 P("x1 + x2", 2));
    REQUIRE(m2.rows.size() == 1);
    REQUIRE(m2.rows[0].d == 1);
    REQUIRE(m2.rows[0].c_d == 1);
    REQUIRE(m2.rows[0].bound == 1);
    REQUIRE(m2.rows[0].ok);

    // h_d = 1 forces a zero bound and a vanishing quotient.
    wlp::GreenReport k = wlp::green_bound_check(span_ideal(2, {"x1^2", "x1*x2", "x2^3"}),
                                                P("x1 + x2", 2));
    REQUIRE(k.all_ok);
    REQUIRE(k.rows[1].d == 2);
    REQUIRE(k.rows[1].bound == 0);
    REQUIRE(k.rows[1].c_d == 0);
}

TEST_CASE("socle dimensions and levelness") {
    GradedQuotient<RationalField> ci(span_ideal(2, {"x1^2", "x2^2"}));
    std::map<int, long> s1 = wlp::socle(ci);
    REQUIRE(s1 == std::map<int, long>{{2, 1}});
    REQUIRE(wlp::is_level(ci));

    GradedQuotient<RationalField> mixed(span_ideal(2, {"x1^2", "x1*x2", "x2^3"}));
    std::map<int, long> s2 = wlp::socle(mixed);
    REQUIRE(s2 == std::map<int, long>{{1, 1}, {2, 1}});
    REQUIRE_FALSE(wlp::is_level(mixed));

    GradedQuotient<RationalField> field_only(span_ideal(2, {"x1", "x2"}));
    REQUIRE(wlp::socle(field_only) == std::map<int, long>{{0, 1}});
    REQUIRE(wlp::is_level(field_only));

    Ring R3(3);
    GradedIdeal<RationalField> IZ =
        wlp::ideal_from_points(R3, Q, wlp::k_configuration_points(0), 7);
    GradedQuotient<RationalField> A1(wlp::add_maximal_power(IZ, 6));
    REQUIRE(wlp::socle(A1) == std::map<int, long>{{5, 12}});
    REQUIRE(wlp::is_level(A1));
}

TEST_CASE("monomial ideal enumeration: canonical stream for (1,2,1)") {
    auto en = wlp::enumerate_monomial_ideals(Ring(2), Q, HilbertFunction({1, 2, 1}));
    REQUIRE(en.count() == 3);

    std::vector<std::vector<std::string>> streams;
    while (auto item = en.next()) {
        streams.push_back(names(item->generators));
        REQUIRE(quotient_hf(item->ideal) == HilbertFunction({1, 2, 1}));

        // Rebuild through the generator-spanning engine: same quotient.
        std::vector<Polynomial> polys;
        for (const auto& m : item->generators) polys.push_back(Polynomial::from_monomial(m));
        REQUIRE(quotient_hf(wlp::ideal_from_generators(Ring(2), Q, polys)) ==
                HilbertFunction({1, 2, 1}));
    }
    REQUIRE(streams == std::vector<std::vector<std::string>>{
                           {"x2^2", "x1*x2", "x1^3"},
                           {"x2^2", "x1^2"},
                           {"x1*x2", "x1^2", "x2^3"}});
}

TEST_CASE("monomial ideal enumeration: counts, self-checks, and rejections") {
    auto single = wlp::enumerate_monomial_ideals(Ring(1), Q, HilbertFunction({1, 1, 1}));
    REQUIRE(single.count() == 1);
    auto only = single.next();
    REQUIRE(only.has_value());
    REQUIRE(names(only->generators) == std::vector<std::string>{"x1^3"});
    REQUIRE_FALSE(single.next().has_value());

    for (const HilbertFunction& H :
         {HilbertFunction({1, 2, 3, 1}), HilbertFunction({1, 2, 2, 1})}) {
        auto en = wlp::enumerate_monomial_ideals(Ring(2), Q, H);
        REQUIRE(en.count() == brute_force_ideal_count(Ring(2), H));
        std::set<std::vector<std::string>> distinct;
        while (auto item = en.next()) {
            REQUIRE(quotient_hf(item->ideal) == H);
            REQUIRE(distinct.insert(names(item->generators)).second);
        }
    }

    HilbertFunction H3({1, 3, 3, 1});
    auto en3 = wlp::enumerate_monomial_ideals(Ring(3), Q, H3);
    REQUIRE(en3.count() == brute_force_ideal_count(Ring(3), H3));
    REQUIRE(en3.count() > 0);

    REQUIRE_THROWS_AS(wlp::enumerate_monomial_ideals(Ring(3), Q, HilbertFunction({1, 2, 2})),
                      wlp::CodimensionMismatch);
    REQUIRE_THROWS_AS(wlp::enumerate_monomial_ideals(Ring(2), Q, HilbertFunction({1, 2, 4})),
                      wlp::NotAnOSequence);
}

TEST_CASE("minimal generators of general ideals") {
    GradedIdeal<RationalField> I = span_ideal(2, {"x1^2 - x2^2", "x1*x2"});
    std::vector<Polynomial> gens = wlp::minimal_generators(I, 3);
    REQUIRE(gens.size() == 2);
    std::set<std::string> got;
    for (const auto& g : gens) got.insert(g.to_string());
    REQUIRE(got == std::set<std::string>{"x1^2 - x2^2", "x1*x2"});

    REQUIRE_THROWS_AS(wlp::minimal_monomial_generators(I, 3), std::invalid_argument);

    // Monomial route agrees with the divisibility oracle.
    GradedIdeal<RationalField> lex = wlp::lex_ideal(Ring(3), Q, HilbertFunction({1, 3, 4, 2}));
    std::vector<Monomial> mins = wlp::minimal_monomial_generators(lex, 4);
    std::vector<Monomial> few = mins; // oracle needs a generating set: use the result itself
    REQUIRE(mins == oracle_min_gens(Ring(3), few, 4));
    for (int d = 0; d <= 4; ++d) {
        GradedQuotient<RationalField> A(lex);
        REQUIRE(A.standard_monomials(d) == oracle_standards(Ring(3), mins, d));
    }
}
