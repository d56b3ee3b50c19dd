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

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wlp/harness.hpp"
#include "wlp/io.hpp"

using nlohmann::json;
using wlp::BettiTable;
using wlp::GradedIdeal;
using wlp::GradedQuotient;
using wlp::HilbertFunction;
using wlp::Int;
using wlp::Polynomial;
using wlp::PrimeField;
using wlp::RationalField;
using wlp::Ring;

namespace {

// ---------------------------------------------------------------------------
// Shared plumbing

struct GlobalOpts {
    bool json_out = false;
    std::uint64_t seed = 0;
    std::string field = "rational";
    int d_cap = wlp::kDefaultDegreeCap;
    bool force = false;
};

json int_json(const Int& v) {
    return v.fits_slong_p() ? json(static_cast<long long>(v.get_si())) : json(v.get_str());
}

json hf_json(const HilbertFunction& h) {
    json arr = json::array();
    for (int d = 0; d <= h.socle_degree(); ++d) arr.push_back(int_json(h[d]));
    return arr;
}

void emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

/// Dispatch on the --field flag: "rational", "prime" (32003), or "prime:<p>".
template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
    if (spec == "rational") return fn(RationalField{});
    if (spec == "prime") return fn(PrimeField(32003));
    if (spec.rfind("prime:", 0) == 0) {
        long p = 0;
        try {
            size_t used = 0;
            p = std::stol(spec.substr(6), &used);
            if (used != spec.size() - 6) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw wlp::ParseError("bad prime in --field '" + spec + "'");
        }
        return fn(PrimeField(p));
    }
    throw wlp::ParseError("unknown field '" + spec + "' (use rational or prime:<p>)");
}

GradedIdeal<RationalField> load_ideal(const std::string& path, const RationalField& K) {
    wlp::IdealFile f = wlp::read_ideal_file(path);
    return wlp::ideal_from_generators(Ring(f.nvars), K, f.generators);
}

GradedIdeal<PrimeField> load_ideal(const std::string& path, const PrimeField& K) {
    wlp::IdealFile f = wlp::read_ideal_file(path);
    return wlp::ideal_from_generators(Ring(f.nvars), K, f.generators);
}

std::optional<Polynomial> parse_form(const std::string& text, int nvars) {
    if (text.empty()) return std::nullopt;
    return Polynomial::parse(text, nvars);
}

// ---------------------------------------------------------------------------
// classify

int run_classify(const std::string& hf_text, const GlobalOpts& g) {
    HilbertFunction H = HilbertFunction::parse(hf_text);
    const bool valid = wlp::is_o_sequence(H);

    if (!valid) {
        if (g.json_out) {
            emit(json{{"hilbert", hf_json(H)}, {"o_sequence", false}, {"forces_wlp", nullptr}});
        } else {
            std::cout << "hilbert function: " << H.to_string() << "\n"
                      << "o-sequence: no\n"
                      << "verdict: not an O-sequence\n";
        }
        return 2;
    }

    const int t = wlp::first_drop_index(H);
    std::optional<int> failure = wlp::wlp_forcing_failure_index(H);
    json conditions = json::array();
    std::ostringstream rows;
    for (int i = 1; i < t; ++i) {
        Int lhs = H[i - 1];
        Int rhs = wlp::lower_both(H[i], i);
        bool ok = lhs == rhs;
        conditions.push_back(json{{"i", i},
                                  {"h_prev", int_json(lhs)},
                                  {"lower_both", int_json(rhs)},
                                  {"ok", ok}});
        rows << "  i = " << i << ": h_" << (i - 1) << " = " << lhs.get_str()
             << ", lower_both(h_" << i << ", " << i << ") = " << rhs.get_str() << ", "
             << (ok ? "ok" : "FAIL") << "\n";
    }

    if (g.json_out) {
        emit(json{{"hilbert", hf_json(H)},
                  {"o_sequence", true},
                  {"t", t},
                  {"conditions", conditions},
                  {"forces_wlp", !failure.has_value()},
                  {"failure_index", failure ? json(*failure) : json(nullptr)}});
    } else {
        std::cout << "hilbert function: " << H.to_string() << "\n"
                  << "o-sequence: yes\n"
                  << "t (first h_t <= t): " << t << "\n"
                  << rows.str();
        if (failure)
            std::cout << "verdict: does not force the WLP (first failure at i = " << *failure
                      << ")\n";
        else
            std::cout << "verdict: forces the WLP\n";
    }
    return failure ? 1 : 0;
}

// ---------------------------------------------------------------------------
// expand

int run_expand(const std::string& n_text, int i, const GlobalOpts& g) {
    Int n;
    try {
        n = Int(n_text);
    } catch (const std::invalid_argument&) {
        throw wlp::ParseError("bad integer '" + n_text + "'");
    }
    if (n <= 0) throw wlp::ParseError("n must be positive");
    if (i < 1) throw wlp::ParseError("i must be positive");

    wlp::BinomialExpansion ex = wlp::expand(n, i);
    Int shift = wlp::lower_shift(n, i);
    Int both = wlp::lower_both(n, i);
    Int growth = wlp::growth_bound(n, i);

    if (g.json_out) {
        json terms = json::array();
        for (const auto& [top, bottom] : ex.terms)
            terms.push_back(json{{"top", int_json(top)}, {"bottom", bottom}});
        emit(json{{"n", int_json(n)},
                  {"i", i},
                  {"expansion", ex.to_string()},
                  {"terms", terms},
                  {"lower_shift", int_json(shift)},
                  {"lower_both", int_json(both)},
                  {"growth_bound", int_json(growth)}});
    } else {
        std::cout << "expansion of " << n.get_str() << " in degree " << i << ": "
                  << ex.to_string() << "\n"
                  << "lower_shift  = " << shift.get_str() << "\n"
                  << "lower_both   = " << both.get_str() << "\n"
                  << "growth_bound = " << growth.get_str() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// lexideal

int run_lexideal(const std::string& hf_text, const GlobalOpts& g) {
    HilbertFunction H = HilbertFunction::parse(hf_text);
    wlp::require_o_sequence(H);
    const int r = static_cast<int>(H[1].get_si());
    Ring R(r);
    GradedIdeal<RationalField> lex = wlp::lex_ideal(R, RationalField{}, H);
    std::vector<wlp::Monomial> gens =
        wlp::minimal_monomial_generators(lex, H.socle_degree() + 1);

    if (g.json_out) {
        json list = json::array();
        for (const auto& m : gens) list.push_back(m.to_string());
        emit(json{{"hilbert", hf_json(H)}, {"ring", r}, {"generators", list}});
    } else {
        std::cout << "# lex ideal of " << H.to_string() << "\n"
                  << "ring " << r << "\n";
        for (const auto& m : gens) std::cout << m.to_string() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// points-ideal

template <class F>
int run_points_ideal(const std::string& path, int power, int through, bool emit_ideal,
                     const GlobalOpts& g, const F& K) {
    std::vector<std::vector<mpq_class>> pts = wlp::read_points_file(path);
    const int r = static_cast<int>(pts.front().size());
    Ring R(r);
    GradedIdeal<F> I = wlp::ideal_from_points(R, K, pts);
    if (power > 0) I = wlp::add_maximal_power(I, power);

    if (emit_ideal) {
        const int up_to = power > 0 ? power : through;
        std::vector<Polynomial> gens = wlp::minimal_generators(I, up_to);
        if (g.json_out) {
            json list = json::array();
            for (const auto& p : gens) list.push_back(p.to_string());
            emit(json{{"ring", r}, {"generators", list}});
        } else {
            std::cout << "# ideal of " << pts.size() << " points"
                      << (power > 0 ? " + maximal power " + std::to_string(power) : "")
                      << "\n"
                      << "ring " << r << "\n";
            for (const auto& p : gens) std::cout << p.to_string() << "\n";
        }
        return 0;
    }

    if (power > 0) {
        GradedQuotient<F> A(I);
        HilbertFunction h = wlp::hilbert_function(A, g.d_cap);
        std::map<int, long> soc = wlp::socle(A, g.d_cap);
        bool level = wlp::is_level(A, g.d_cap);
        if (g.json_out) {
            json socj = json::object();
            for (const auto& [d, dim] : soc) socj[std::to_string(d)] = dim;
            emit(json{{"points", pts.size()},
                      {"power", power},
                      {"hilbert", hf_json(h)},
                      {"socle", socj},
                      {"level", level}});
        } else {
            std::cout << "points: " << pts.size() << "\n"
                      << "maximal power added: " << power << "\n"
                      << "hilbert function: " << h.to_string() << "\n";
            for (const auto& [d, dim] : soc)
                std::cout << "socle: degree " << d << " -> dimension " << dim << "\n";
            std::cout << "level: " << (level ? "yes" : "no") << "\n";
        }
    } else {
        std::vector<long> dims;
        for (int d = 0; d <= through; ++d) dims.push_back(I.quotient_dim(d));
        if (g.json_out) {
            emit(json{{"points", pts.size()}, {"through", through}, {"hilbert", dims}});
        } else {
            std::cout << "points: " << pts.size() << "\n"
                      << "hilbert function through degree " << through << ": ";
            for (size_t k = 0; k < dims.size(); ++k)
                std::cout << (k ? "," : "") << dims[k];
            std::cout << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// wlp

template <class F>
int run_wlp(const std::string& path, const std::string& form_text, const GlobalOpts& g,
            const F& K) {
    GradedIdeal<F> I = load_ideal(path, K);
    std::optional<Polynomial> L = parse_form(form_text, I.ring().nvars());
    GradedQuotient<F> A(I);
    wlp::WlpReport w = wlp::has_wlp(A, L, g.seed, g.d_cap);

    if (g.json_out) {
        json forms = json::array();
        for (const auto& f : w.forms) forms.push_back(f.to_string());
        json degrees = json::array();
        for (const auto& row : w.degrees)
            degrees.push_back(json{{"d", row.d},
                                   {"dim_from", row.dim_from},
                                   {"dim_to", row.dim_to},
                                   {"required", row.required},
                                   {"rank", row.rank},
                                   {"ok", row.rank >= row.required}});
        emit(json{{"ring", I.ring().nvars()},
                  {"hilbert", hf_json(w.h)},
                  {"forms", forms},
                  {"degrees", degrees},
                  {"wlp", w.wlp},
                  {"witness_degree",
                   w.witness_degree ? json(*w.witness_degree) : json(nullptr)}});
    } else {
        std::cout << "ring: " << I.ring().nvars() << " variables\n"
                  << "hilbert function: " << w.h.to_string() << "\n";
        std::cout << "forms tried:";
        for (const auto& f : w.forms) std::cout << " [" << f.to_string() << "]";
        std::cout << "\n";
        for (const auto& row : w.degrees)
            std::cout << "  d = " << row.d << ": " << row.dim_from << " -> " << row.dim_to
                      << ", required " << row.required << ", rank " << row.rank << ", "
                      << (row.rank >= row.required ? "ok" : "SHORT") << "\n";
        if (w.wlp)
            std::cout << "verdict: has the WLP\n";
        else
            std::cout << "verdict: fails the WLP (witness degree "
                      << (w.witness_degree ? std::to_string(*w.witness_degree) : "?")
                      << ")\n";
    }
    return w.wlp ? 0 : 1;
}

// ---------------------------------------------------------------------------
// decompose

template <class F>
int run_decompose(const std::string& path, const std::string& form_text, const GlobalOpts& g,
                  const F& K) {
    GradedIdeal<F> I = load_ideal(path, K);
    const int r = I.ring().nvars();
    Polynomial L = parse_form(form_text, r).value_or(Polynomial::sum_of_variables(r));
    wlp::StanleyDecomposition sd = wlp::stanley_decompose(I, L, g.d_cap);
    const int e = sd.h.socle_degree();

    if (g.json_out) {
        json rows = json::array();
        for (int i = 0; i <= e; ++i)
            rows.push_back(json{{"i", i},
                                {"h", int_json(sd.h[i])},
                                {"b", int_json(sd.b[static_cast<size_t>(i)])},
                                {"c", int_json(sd.c[static_cast<size_t>(i)])}});
        emit(json{{"linear_form", L.to_string()}, {"rows", rows}, {"exact", true}});
    } else {
        std::cout << "linear form: " << L.to_string() << "\n"
                  << "   i |    h    b    c\n";
        for (int i = 0; i <= e; ++i)
            std::cout << std::setw(4) << i << " |" << std::setw(5) << sd.h[i].get_str()
                      << std::setw(5) << sd.b[static_cast<size_t>(i)].get_str() << std::setw(5)
                      << sd.c[static_cast<size_t>(i)].get_str() << "\n";
        std::cout << "exactness h = b + c: ok\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// green

template <class F>
int run_green(const std::string& path, const std::string& form_text, const GlobalOpts& g,
              const F& K) {
    GradedIdeal<F> I = load_ideal(path, K);
    const int r = I.ring().nvars();
    Polynomial L = parse_form(form_text, r).value_or(Polynomial::sum_of_variables(r));
    wlp::GreenReport report = wlp::green_bound_check(I, L, g.d_cap);

    if (g.json_out) {
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back(json{{"d", row.d},
                                {"c", int_json(row.c_d)},
                                {"bound", int_json(row.bound)},
                                {"ok", row.ok}});
        emit(json{{"linear_form", L.to_string()}, {"rows", rows}, {"all_ok", report.all_ok}});
    } else {
        std::cout << "linear form: " << L.to_string() << "\n"
                  << "   d |    c  bound  ok\n";
        for (const auto& row : report.rows)
            std::cout << std::setw(4) << row.d << " |" << std::setw(5) << row.c_d.get_str()
                      << std::setw(7) << row.bound.get_str() << "  "
                      << (row.ok ? "yes" : "NO") << "\n";
        std::cout << "all bounds hold: " << (report.all_ok ? "yes" : "NO") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// socle

template <class F>
int run_socle(const std::string& path, const GlobalOpts& g, const F& K) {
    GradedIdeal<F> I = load_ideal(path, K);
    GradedQuotient<F> A(I);
    std::map<int, long> soc = wlp::socle(A, g.d_cap);
    bool level = wlp::is_level(A, g.d_cap);

    if (g.json_out) {
        json socj = json::object();
        for (const auto& [d, dim] : soc) socj[std::to_string(d)] = dim;
        emit(json{{"socle", socj}, {"level", level}});
    } else {
        if (soc.empty()) std::cout << "socle: empty\n";
        for (const auto& [d, dim] : soc)
            std::cout << "socle: degree " << d << " -> dimension " << dim << "\n";
        std::cout << "level: " << (level ? "yes" : "no") << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// betti

template <class F>
int run_betti(const std::string& path, const GlobalOpts& g, const F& K) {
    GradedIdeal<F> I = load_ideal(path, K);
    BettiTable table = wlp::koszul_betti(GradedQuotient<F>(I), g.d_cap);
    if (g.json_out)
        wlp::write_betti_json(std::cout, table);
    else
        std::cout << table.diagram();
    return 0;
}

// ---------------------------------------------------------------------------
// betti-compare

int run_betti_compare(const std::string& path_a, const std::string& path_b,
                      const std::string& mode, const GlobalOpts& g) {
    BettiTable A = wlp::read_betti_json_file(path_a);
    BettiTable B = wlp::read_betti_json_file(path_b);

    if (mode == "dominate") {
        bool ok = wlp::dominates(A, B);
        if (g.json_out)
            emit(json{{"mode", "dominate"}, {"ok", ok}});
        else
            std::cout << "dominates: " << (ok ? "yes" : "no") << "\n";
        return ok ? 0 : 1;
    }
    if (mode == "cancel") {
        // Is B obtained from A by consecutive cancellations?
        wlp::CancellationResult res = wlp::is_consecutive_cancellation(B, A);
        if (g.json_out) {
            json c = json::object();
            for (const auto& [k, v] : res.cancellations)
                c[std::to_string(k.first) + "," + std::to_string(k.second)] = int_json(v);
            emit(json{{"mode", "cancel"}, {"ok", res.ok}, {"cancellations", c}});
        } else {
            std::cout << "cancellation: " << (res.ok ? "yes" : "no") << "\n";
            for (const auto& [k, v] : res.cancellations)
                std::cout << "  c_{" << k.first << "," << k.second << "} = " << v.get_str()
                          << "\n";
        }
        return res.ok ? 0 : 1;
    }
    throw wlp::ParseError("unknown mode '" + mode + "' (use dominate or cancel)");
}

// ---------------------------------------------------------------------------
// enumerate-hf

int run_enumerate_hf(int codim, int max_socle, const std::string& max_value_text,
                     const GlobalOpts& g) {
    Int cap;
    try {
        cap = Int(max_value_text);
    } catch (const std::invalid_argument&) {
        throw wlp::ParseError("bad integer '" + max_value_text + "'");
    }
    wlp::OSequenceEnumerator en = wlp::enumerate_o_sequences(codim, max_socle, cap);
    long total = 0;
    json list = json::array();
    while (auto H = en.next()) {
        ++total;
        bool forces = wlp::forces_wlp(*H);
        if (g.json_out)
            list.push_back(json{{"hilbert", hf_json(*H)}, {"forces_wlp", forces}});
        else
            std::cout << H->to_string() << " " << (forces ? "true" : "false") << "\n";
    }
    if (g.json_out)
        emit(json{{"codim", codim},
                  {"max_socle_degree", max_socle},
                  {"max_value", int_json(cap)},
                  {"sequences", list},
                  {"total", total}});
    else
        std::cout << "total: " << total << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// enumerate-ideals

template <class F>
int run_enumerate_ideals(const std::string& hf_text, const GlobalOpts& g, const F& K) {
    HilbertFunction H = HilbertFunction::parse(hf_text);
    wlp::require_o_sequence(H);
    const int r = static_cast<int>(H[1].get_si());
    wlp::MonomialIdealEnumerator<F> en = wlp::enumerate_monomial_ideals(Ring(r), K, H);
    long total = 0;
    json list = json::array();
    while (auto item = en.next()) {
        ++total;
        if (g.json_out) {
            json gens = json::array();
            for (const auto& m : item->generators) gens.push_back(m.to_string());
            list.push_back(gens);
        } else {
            std::string line;
            for (const auto& m : item->generators) {
                if (!line.empty()) line += ", ";
                line += m.to_string();
            }
            std::cout << line << "\n";
        }
    }
    if (g.json_out)
        emit(json{{"hilbert", hf_json(H)}, {"ideals", list}, {"total", total}});
    else
        std::cout << "total: " << total << "\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify-theorem5

template <class F>
int run_verify(wlp::SweepOptions opt, bool full_checks, const GlobalOpts& g, const F& K) {
    opt.seed = g.seed;
    opt.d_cap = g.d_cap;
    opt.force = g.force;
    opt.check_stanley_green = full_checks;
    opt.check_betti = full_checks;

    if (!g.json_out) {
        Int est = wlp::estimate_sweep_ideals(opt);
        std::cout << "estimated ideals (upper bound): " << est.get_str() << std::endl;
    }

    wlp::SweepSummary s = wlp::verify_theorem5(opt, K);

    if (g.json_out) {
        json cases = json::array();
        for (const auto& c : s.cases)
            cases.push_back(json{{"hilbert", hf_json(c.h)},
                                 {"forces_wlp", c.forces},
                                 {"ideals", c.ideals},
                                 {"wlp_failures", c.wlp_failures},
                                 {"witness_found", c.witness_found}});
        json findings = json::array();
        for (const auto& f : s.findings)
            findings.push_back(
                json{{"hilbert", hf_json(f.h)}, {"kind", f.kind}, {"detail", f.detail}});
        emit(json{{"ran", s.ran},
                  {"estimate", int_json(s.estimate)},
                  {"sequences", s.sequences},
                  {"ideals", s.ideals},
                  {"cases", cases},
                  {"findings", findings},
                  {"notes", s.notes},
                  {"consistent", s.consistent()}});
    }

    if (!s.ran) {
        if (!g.json_out)
            std::cout << "guard: estimate exceeds " << opt.guard_limit.get_str()
                      << "; rerun with --force\n";
        return 4;
    }

    if (!g.json_out) {
        long forcing = 0, nonforcing = 0, witnessed = 0;
        for (const auto& c : s.cases) {
            if (c.forces)
                ++forcing;
            else {
                ++nonforcing;
                if (c.witness_found) ++witnessed;
            }
        }
        std::cout << "sequences: " << s.sequences << "\n"
                  << "ideals checked: " << s.ideals << "\n"
                  << "forcing sequences: " << forcing << "\n"
                  << "non-forcing sequences: " << nonforcing << " (witnesses found: "
                  << witnessed << ")\n";
        if (s.sequences <= 10)
            for (const auto& c : s.cases)
                std::cout << "  " << c.h.to_string() << ": "
                          << (c.forces ? "forces" : "does not force") << ", ideals "
                          << c.ideals << ", wlp failures " << c.wlp_failures << "\n";
        for (const auto& n : s.notes) std::cout << "note: " << n << "\n";
        if (s.findings.empty()) {
            std::cout << "findings: none\nverdict: consistent\n";
        } else {
            for (const auto& f : s.findings)
                std::cout << "finding [" << f.kind << "] " << f.h.to_string() << ": "
                          << f.detail << "\n";
            std::cout << "verdict: INCONSISTENT\n";
        }
    }
    return s.consistent() ? 0 : 1;
}

} // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for the weak Lefschetz property of artinian graded "
                 "algebras: Hilbert-function classification, rank checks, Stanley "
                 "decompositions, restriction bounds, and graded Betti tables."};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json_out, "emit JSON instead of text");
    app.add_option("--seed", g.seed, "seed for randomized linear forms and sampling");
    app.add_option("--field", g.field, "coefficient field: rational (default) or prime:<p>");
    app.add_option("--dcap", g.d_cap, "degree cap for artinian detection")
        ->check(CLI::PositiveNumber);
    app.add_flag("--force", g.force, "run sweeps past the enumeration guard");

    int rc = 0;

    // classify
    std::string classify_hf;
    auto* classify = app.add_subcommand(
        "classify", "decide whether a Hilbert function forces the WLP");
    classify->add_option("hilbert", classify_hf, "comma-separated values, e.g. 1,3,6")
        ->required();
    classify->fallthrough();
    classify->callback([&] { rc = run_classify(classify_hf, g); });

    // expand
    std::string expand_n;
    int expand_i = 1;
    auto* expand = app.add_subcommand(
        "expand", "binomial expansion of n in degree i with the derived bounds");
    expand->add_option("n", expand_n, "positive integer")->required();
    expand->add_option("i", expand_i, "expansion degree")->required();
    expand->fallthrough();
    expand->callback([&] { rc = run_expand(expand_n, expand_i, g); });

    // lexideal
    std::string lex_hf;
    auto* lexideal = app.add_subcommand(
        "lexideal", "minimal generators of the lex ideal attaining a Hilbert function");
    lexideal->add_option("hilbert", lex_hf, "comma-separated values")->required();
    lexideal->fallthrough();
    lexideal->callback([&] { rc = run_lexideal(lex_hf, g); });

    // points-ideal
    std::string points_path;
    int points_power = 0;
    int points_through = 6;
    bool points_emit = false;
    auto* points = app.add_subcommand(
        "points-ideal", "vanishing ideal of a projective point set, optionally capped");
    points->add_option("file", points_path, "points file")->required();
    points->add_option("--power", points_power,
                       "add the s-th power of the maximal ideal (makes the quotient artinian)")
        ->check(CLI::PositiveNumber);
    points->add_option("--through", points_through,
                       "report the Hilbert function through this degree")
        ->check(CLI::NonNegativeNumber);
    points->add_flag("--emit", points_emit, "print the ideal in ideal-file format");
    points->fallthrough();
    points->callback([&] {
        rc = with_field(g.field, [&](const auto& K) {
            return run_points_ideal(points_path, points_power, points_through, points_emit, g,
                                    K);
        });
    });

    // wlp
    std::string wlp_path, wlp_form;
    auto* wlpcmd = app.add_subcommand("wlp", "weak Lefschetz property of an artinian quotient");
    wlpcmd->add_option("file", wlp_path, "ideal file")->required();
    wlpcmd->add_option("--linear-form", wlp_form, "test this specific linear form");
    wlpcmd->fallthrough();
    wlpcmd->callback([&] {
        rc = with_field(g.field, [&](const auto& K) { return run_wlp(wlp_path, wlp_form, g, K); });
    });

    // decompose
    std::string dec_path, dec_form;
    auto* decompose = app.add_subcommand(
        "decompose", "split the Hilbert function along a linear form (h = b + c)");
    decompose->add_option("file", dec_path, "ideal file")->required();
    decompose->add_option("--linear-form", dec_form,
                          "splitting form (default: sum of the variables)");
    decompose->fallthrough();
    decompose->callback([&] {
        rc = with_field(g.field,
                        [&](const auto& K) { return run_decompose(dec_path, dec_form, g, K); });
    });

    // green
    std::string green_path, green_form;
    auto* green = app.add_subcommand(
        "green", "hyperplane-restriction bound c_d <= h_d_<d> per degree");
    green->add_option("file", green_path, "ideal file")->required();
    green->add_option("--linear-form", green_form,
                      "restricting form (default: sum of the variables)");
    green->fallthrough();
    green->callback([&] {
        rc = with_field(g.field,
                        [&](const auto& K) { return run_green(green_path, green_form, g, K); });
    });

    // socle
    std::string socle_path;
    auto* socle = app.add_subcommand("socle", "socle dimensions and levelness");
    socle->add_option("file", socle_path, "ideal file")->required();
    socle->fallthrough();
    socle->callback([&] {
        rc = with_field(g.field, [&](const auto& K) { return run_socle(socle_path, g, K); });
    });

    // betti
    std::string betti_path;
    auto* betti = app.add_subcommand("betti", "graded Betti table of an artinian quotient");
    betti->add_option("file", betti_path, "ideal file")->required();
    betti->fallthrough();
    betti->callback([&] {
        rc = with_field(g.field, [&](const auto& K) { return run_betti(betti_path, g, K); });
    });

    // betti-compare
    std::string cmp_a, cmp_b, cmp_mode = "dominate";
    auto* compare = app.add_subcommand(
        "betti-compare", "compare two Betti tables (entrywise dominance or cancellation)");
    compare->add_option("table_a", cmp_a, "Betti JSON file (the larger table)")->required();
    compare->add_option("table_b", cmp_b, "Betti JSON file")->required();
    compare->add_option("--mode", cmp_mode, "dominate: does A dominate B; cancel: is B "
                                            "obtained from A by consecutive cancellations");
    compare->fallthrough();
    compare->callback([&] { rc = run_betti_compare(cmp_a, cmp_b, cmp_mode, g); });

    // enumerate-hf
    int ehf_codim = 2;
    int ehf_socle = 4;
    std::string ehf_value = "5";
    auto* ehf = app.add_subcommand("enumerate-hf",
                                   "stream every O-sequence within the given bounds");
    ehf->add_option("codim", ehf_codim, "h_1")->required()->check(CLI::PositiveNumber);
    ehf->add_option("max_socle", ehf_socle, "largest socle degree")->check(CLI::PositiveNumber);
    ehf->add_option("max_value", ehf_value, "largest entry value");
    ehf->fallthrough();
    ehf->callback([&] { rc = run_enumerate_hf(ehf_codim, ehf_socle, ehf_value, g); });

    // enumerate-ideals
    std::string eid_hf;
    auto* eid = app.add_subcommand(
        "enumerate-ideals", "stream every monomial ideal attaining a Hilbert function");
    eid->add_option("hilbert", eid_hf, "comma-separated values")->required();
    eid->fallthrough();
    eid->callback([&] {
        rc = with_field(g.field,
                        [&](const auto& K) { return run_enumerate_ideals(eid_hf, g, K); });
    });

    // verify-theorem5
    int v_codim = 2;
    int v_socle = 4;
    std::string v_value = "5";
    std::string v_hf;
    long v_sample = -1;
    bool v_exhaustive = false;
    bool v_full = false;
    auto* verify = app.add_subcommand(
        "verify-theorem5",
        "sweep Hilbert functions and compare the classifier with brute force over "
        "monomial algebras");
    verify->add_option("codim", v_codim, "h_1")->required()->check(CLI::PositiveNumber);
    verify->add_option("max_socle", v_socle, "largest socle degree")
        ->check(CLI::PositiveNumber);
    verify->add_option("max_value", v_value, "largest entry value");
    verify->add_option("--hf", v_hf, "restrict the sweep to this one Hilbert function");
    auto* sample_opt =
        verify->add_option("--sample", v_sample,
                           "test the lex ideal plus this many random ideals per sequence");
    verify->add_flag("--exhaustive", v_exhaustive, "enumerate every monomial ideal (default)")
        ->excludes(sample_opt);
    verify->add_flag("--full", v_full,
                     "also run the decomposition, restriction-bound, and Betti checks");
    verify->fallthrough();
    verify->callback([&] {
        wlp::SweepOptions opt;
        opt.codim = v_codim;
        opt.max_socle_degree = v_socle;
        try {
            opt.max_value = Int(v_value);
        } catch (const std::invalid_argument&) {
            throw wlp::ParseError("bad integer '" + v_value + "'");
        }
        if (!v_hf.empty()) opt.only = HilbertFunction::parse(v_hf);
        opt.sample = v_exhaustive ? -1 : v_sample;
        rc = with_field(g.field, [&](const auto& K) { return run_verify(opt, v_full, g, K); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    } catch (const wlp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return rc;
}
