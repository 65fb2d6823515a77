#include "apolar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace apolar::verify {

namespace {

const MonomialOrder kDegRevLex{OrderKind::DegRevLex};
constexpr int kResampleAttempts = 5;

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::string seed_str(Seed s) { return std::to_string(s.value); }

/// Wrap a set already known to be a Groebner basis (monic, sorted by leading
/// monomial) without re-running the S-pair check.
GroebnerBasis as_certified(std::vector<Polynomial> B, const MonomialOrder& order) {
    GroebnerBasis out;
    out.order = order;
    out.certified = true;
    std::sort(B.begin(), B.end(), [&order](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    for (auto& p : B) out.elems.push_back(p.scaled(1 / p.leading_term(order).second));
    return out;
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& B,
                                        const MonomialOrder& order) {
    std::vector<Monomial> lms;
    lms.reserve(B.size());
    for (const auto& p : B) lms.push_back(p.leading_monomial(order));
    std::sort(lms.begin(), lms.end(), [&order](const Monomial& a, const Monomial& b) {
        return order.greater(a, b);
    });
    return lms;
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    default: return "Inconclusive";
    }
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["claim"] = claim;
    j["parameters"] = parameters;
    j["verdict"] = verdict_name(verdict);
    if (!witness.is_null()) j["witness"] = witness;
    if (!notes.empty()) j["notes"] = notes;
    if (include_timing) j["elapsed_ms"] = elapsed_ms;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "claim: " << claim << "\n";
    for (const auto& [k, v] : parameters) os << "  " << k << " = " << v << "\n";
    os << "verdict: " << verdict_name(verdict) << "\n";
    for (const auto& n : notes) os << "  " << n << "\n";
    if (!witness.is_null()) os << "witness: " << witness.dump() << "\n";
    if (include_timing) os << "elapsed_ms: " << elapsed_ms << "\n";
    return os.str();
}

int Report::exit_code() const {
    switch (verdict) {
    case Verdict::Verified: return 0;
    case Verdict::Refuted: return 1;
    default: return 2;
    }
}

Report verify_initial(int n, int e, MonomialOrder order, Seed seed, int trials,
                      long coeff_bound) {
    if (n < 2 || e < 1) throw InputError("verify_initial: need n >= 2, e >= 1");
    auto t0 = Clock::now();
    Report rep;
    rep.claim = "generic-annihilator-initial-segments";
    rep.parameters = {{"n", std::to_string(n)},
                      {"e", std::to_string(e)},
                      {"order", order.name()},
                      {"seed", seed_str(seed)},
                      {"trials", std::to_string(trials)},
                      {"coeff_bound", std::to_string(coeff_bound)}};
    if (trials <= 0) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back("no trials requested");
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }
    HilbertFunction compressed = compressed_hilbert(n, e);
    for (int t = 0; t < trials; ++t) {
        Seed trial_seed{seed.value + static_cast<std::uint64_t>(t)};
        bool generic = false;
        for (int attempt = 0; attempt < kResampleAttempts && !generic; ++attempt) {
            Polynomial G = random_form(n, e, trial_seed.derive(static_cast<std::uint64_t>(attempt)),
                                       coeff_bound);
            std::vector<GradedVectorSpace> pieces;
            pieces.reserve(static_cast<size_t>(e) + 1);
            HilbertFunction hf;
            hf.values.assign(static_cast<size_t>(e) + 2, 0);
            for (int d = 0; d <= e; ++d) {
                pieces.push_back(ann_graded_piece(G, d, order));
                hf.values[static_cast<size_t>(d)] =
                    dim_rd(n, d) - static_cast<long long>(pieces.back().dim());
            }
            if (!(hf == compressed)) continue; // non-generic sample, resample
            generic = true;
            for (int d = (e + 1) / 2; d <= e; ++d) {
                long long count = dim_rd(n, d) - dim_rd(n, e - d);
                auto got = initial_monomials(pieces[static_cast<size_t>(d)], order);
                auto want = revlex_segment(n, d, count, order);
                if (got != want) {
                    rep.verdict = Verdict::Refuted;
                    nlohmann::json w;
                    w["trial"] = t;
                    w["degree"] = d;
                    w["expected_count"] = count;
                    w["got"] = nlohmann::json::array();
                    for (const auto& m : got) w["got"].push_back(m.str());
                    w["expected"] = nlohmann::json::array();
                    for (const auto& m : want) w["expected"].push_back(m.str());
                    rep.witness = w;
                    rep.elapsed_ms = ms_since(t0);
                    return rep;
                }
            }
        }
        if (!generic) {
            rep.verdict = Verdict::Inconclusive;
            rep.notes.push_back("trial " + std::to_string(t) + ": no generic sample in " +
                                std::to_string(kResampleAttempts) + " attempts");
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }
    }
    rep.verdict = Verdict::Verified;
    rep.notes.push_back("all trials matched the degreewise initial segments");
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report verify_gb(int n, int e) {
    auto t0 = Clock::now();
    Report rep;
    rep.claim = "annihilator-basis-of-complete-symmetric-form";
    rep.parameters = {{"n", std::to_string(n)}, {"e", std::to_string(e)}};

    auto cand = candidate_basis(n, e);
    Polynomial H = complete_symmetric(n, e);

    nlohmann::json w;
    bool all_annihilate = true;
    for (const auto& g : cand) {
        if (!annihilates(g, H)) {
            all_annihilate = false;
            w["non_annihilating"].push_back(g.str());
        }
    }
    bool gb_ok = all_annihilate && is_groebner_basis(cand, kDegRevLex);
    if (!gb_ok && all_annihilate) w["spair_check"] = false;

    bool initial_ok = false, hf_ok = false;
    if (gb_ok) {
        GroebnerBasis B = as_certified(cand, kDegRevLex);
        MonomialIdeal inI = initial_ideal(B);
        MonomialIdeal predicted = predicted_in_ann(n, e);
        initial_ok = inI == predicted;
        if (!initial_ok) {
            for (const auto& g : inI.gens()) w["initial_ideal"].push_back(g.str());
        }
        hf_ok = hilbert_function(inI, e + 1) == compressed_hilbert(n, e);
        if (!hf_ok) w["hilbert"] = hilbert_function(inI, e + 1).str();

        bool cand_reduced = is_reduced(B);
        // The tail-corrected variant only adds scalar multiples of other
        // basis elements: the ideal and the leading monomial set are the
        // ones just certified, so it is a Groebner basis of the same ideal
        // provided its elements still annihilate H_e.
        auto rc = reduced_candidate_basis(n, e);
        bool rc_ok = leading_monomials(rc, kDegRevLex) == leading_monomials(cand, kDegRevLex);
        for (const auto& g : rc) rc_ok = rc_ok && annihilates(g, H);
        bool rc_reduced = rc_ok && is_reduced(as_certified(rc, kDegRevLex));
        rep.notes.push_back(std::string("candidate basis reduced: ") +
                            (cand_reduced ? "true" : "false"));
        rep.notes.push_back(std::string("tail-corrected basis reduced: ") +
                            (rc_reduced ? "true" : "false"));
        rep.notes.push_back("basis size: " + std::to_string(cand.size()));
        if (static_cast<int>(cand.size()) <= 8)
            for (const auto& g : cand) rep.notes.push_back("  " + g.str());
    }

    bool ok = all_annihilate && gb_ok && initial_ok && hf_ok;
    rep.verdict = ok ? Verdict::Verified : Verdict::Refuted;
    if (!ok) rep.witness = w;
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report verify_lefschetz(int n, int e) {
    auto t0 = Clock::now();
    Report rep;
    rep.claim = "last-variable-strong-lefschetz-on-initial-ideal";
    rep.parameters = {{"n", std::to_string(n)}, {"e", std::to_string(e)}};
    MonomialIdeal J = predicted_in_ann(n, e);
    bool ok = lefschetz_check(J, e);
    rep.verdict = ok ? Verdict::Verified : Verdict::Refuted;
    if (!ok) rep.witness = {{"lefschetz", false}};
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::vector<long long> truncated_quotient_series(int n, const std::vector<int>& degrees,
                                                 int max_degree) {
    std::vector<long long> num(static_cast<size_t>(max_degree) + 1, 0);
    num[0] = 1;
    for (int d : degrees) {
        if (d <= 0) throw InputError("truncated_quotient_series: degrees must be positive");
        for (int k = max_degree; k >= d; --k) num[static_cast<size_t>(k)] -= num[static_cast<size_t>(k - d)];
    }
    std::vector<long long> h(static_cast<size_t>(max_degree) + 1, 0);
    for (int k = 0; k <= max_degree; ++k) {
        long long s = 0;
        for (int j = 0; j <= k; ++j)
            if (num[static_cast<size_t>(j)] != 0)
                s += num[static_cast<size_t>(j)] * dim_rd(n, k - j);
        if (s <= 0) break; // everything from the first non-positive value on is zero
        h[static_cast<size_t>(k)] = s;
    }
    return h;
}

BettiOutcome betti_outcome(const BettiRun& run) {
    int n = run.n, d = run.d;
    if (n < 2 || d < 2) throw InputError("betti run: need n >= 2, d >= 2");
    long long count = dim_rd(n, d) - dim_rd(n, d - 1);

    std::vector<int> degrees(static_cast<size_t>(count), d);
    for (int ed : run.extra_degrees) {
        if (ed <= d) throw InputError("betti run: extra degrees must exceed d");
        degrees.push_back(ed);
    }
    if (run.explicit_extra) {
        auto deg = run.explicit_extra->homogeneous_degree();
        if (!deg || run.explicit_extra->nvars() != n)
            throw InputError("betti run: explicit extra form must be homogeneous in n variables");
        degrees.push_back(*deg);
    }

    int guard = 6 * (d + 2);
    auto series = truncated_quotient_series(n, degrees, guard);
    int socle = -1;
    for (int k = 0; k <= guard; ++k)
        if (series[static_cast<size_t>(k)] != 0) socle = k;
    if (socle == guard && !run.degree_cap)
        throw InputError("betti run: predicted socle not found; pass an explicit degree cap");
    int cap = run.degree_cap.value_or(socle + 1);

    HilbertFunction expected;
    expected.values.assign(series.begin(), series.begin() + cap + 1);

    for (int attempt = 0; attempt < kResampleAttempts; ++attempt) {
        Seed attempt_seed = run.seed.derive(static_cast<std::uint64_t>(attempt));
        std::vector<Polynomial> forms;
        std::uint64_t idx = 0;
        for (long long i = 0; i < count; ++i)
            forms.push_back(random_form(n, d, attempt_seed.derive(idx++), run.coeff_bound));
        for (int ed : run.extra_degrees)
            forms.push_back(random_form(n, ed, attempt_seed.derive(idx++), run.coeff_bound));
        if (run.explicit_extra) forms.push_back(*run.explicit_extra);

        GroebnerBasis B = buchberger(forms, kDegRevLex, cap);
        MonomialIdeal inI = initial_ideal(B);
        HilbertFunction hf = hilbert_function(inI, cap);
        if (!(hf == expected)) continue; // genericity gate

        BettiOutcome out{.initial_ideal = inI,
                         .table = BettiTable{},
                         .hf = hf,
                         .strongly_stable = is_strongly_stable(inI),
                         .formula_match = true,
                         .gens_match = false,
                         .betti_via_koszul = false,
                         .socle = hf.top_nonzero(),
                         .cap = cap,
                         .attempts = attempt + 1,
                         .gen_count = static_cast<long long>(inI.gens().size())};
        if (out.strongly_stable) {
            out.table = ek_betti(inI);
        } else {
            out.table = graded_betti_koszul(inI);
            out.betti_via_koszul = true;
        }
        for (int p = 1; p <= n; ++p)
            if (out.table.total(p) != betti_formula(n, d, p)) out.formula_match = false;
        out.gens_match = out.gen_count == dim_rd(n, d);
        return out;
    }
    throw InputError("betti run: Hilbert gate failed for " + std::to_string(kResampleAttempts) +
                     " derived seeds");
}

Report verify_betti(const BettiRun& run) {
    auto t0 = Clock::now();
    Report rep;
    rep.claim = "generic-forms-initial-ideal-betti-numbers";
    rep.parameters = {{"n", std::to_string(run.n)},
                      {"d", std::to_string(run.d)},
                      {"seed", seed_str(run.seed)},
                      {"coeff_bound", std::to_string(run.coeff_bound)}};
    {
        std::string extras;
        for (int ed : run.extra_degrees) extras += (extras.empty() ? "" : ",") + std::to_string(ed);
        if (!extras.empty()) rep.parameters["extra_degrees"] = extras;
        if (run.explicit_extra) rep.parameters["explicit_extra_degree"] =
            std::to_string(run.explicit_extra->degree());
    }
    try {
        BettiOutcome out = betti_outcome(run);
        rep.parameters["degree_cap"] = std::to_string(out.cap);
        bool artinian = is_artinian(out.initial_ideal);
        bool ok = out.strongly_stable && artinian && out.formula_match && out.gens_match;
        rep.verdict = ok ? Verdict::Verified : Verdict::Refuted;
        rep.notes.push_back(std::string("strongly stable: ") +
                            (out.strongly_stable ? "true" : "false"));
        rep.notes.push_back(std::string("artinian: ") + (artinian ? "true" : "false"));
        rep.notes.push_back("socle degree: " + std::to_string(out.socle));
        rep.notes.push_back("minimal generators: " + std::to_string(out.gen_count) +
                            " (formula: " + std::to_string(dim_rd(run.n, run.d)) + ")");
        rep.notes.push_back(std::string("betti route: ") +
                            (out.betti_via_koszul ? "koszul" : "eliahou-kervaire"));
        std::istringstream table(render_betti(out.table, BettiFormat::Text));
        for (std::string line; std::getline(table, line);) rep.notes.push_back(line);
        if (!ok) {
            nlohmann::json w;
            w["strongly_stable"] = out.strongly_stable;
            w["artinian"] = artinian;
            w["generator_count"] = out.gen_count;
            nlohmann::json totals = nlohmann::json::object();
            for (const auto& [p, v] : out.table.totals) totals[std::to_string(p)] = v;
            w["totals"] = totals;
            nlohmann::json formula = nlohmann::json::object();
            for (int p = 1; p <= run.n; ++p)
                formula[std::to_string(p)] = betti_formula(run.n, run.d, p);
            w["formula_totals"] = formula;
            rep.witness = w;
        }
    } catch (const InputError& err) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back(err.what());
    }
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report conjecture_h_odd(int n, int d_max) {
    auto t0 = Clock::now();
    Report rep;
    rep.claim = "odd-socle-annihilator-extra-generator-counts";
    rep.parameters = {{"n", std::to_string(n)}, {"d_max", std::to_string(d_max)}};
    bool all_match = true;
    nlohmann::json observations = nlohmann::json::array();
    for (int d = 1; d <= d_max; ++d) {
        int e = 2 * d + 1;
        auto cand = candidate_basis(n, e);
        if (!is_groebner_basis(cand, kDegRevLex)) {
            rep.verdict = Verdict::Inconclusive;
            rep.notes.push_back("basis certification failed at d = " + std::to_string(d));
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }
        GroebnerBasis B = as_certified(cand, kDegRevLex);
        auto data = minimal_generator_counts_poly(B, d + 2);
        long long r = data.r(d + 2);
        long long expected = (d % 2 == 0) ? 1 : 0;
        nlohmann::json obs;
        obs["d"] = d;
        obs["e"] = e;
        obs["r"] = r;
        obs["expected_r"] = expected;
        std::string line = "d=" + std::to_string(d) + " e=" + std::to_string(e) +
                           " r_{d+2}=" + std::to_string(r) + " expected " +
                           std::to_string(expected);
        if (d % 2 == 0) {
            // the claimed extra generator: phi(x_n^2 (x_{n-1} - x_n)^d)
            std::vector<int> a(static_cast<size_t>(n) - 1, 0);
            a.back() = d;
            Polynomial probe =
                phi(f_of(a).scaled_shift(Rational(1), Monomial::variable(n, n - 1, 2)));
            bool minimal = !in_r1_times_piece(B, d + 2, probe);
            obs["specific_element_minimal"] = minimal;
            line += minimal ? ", probe element is a minimal generator"
                            : ", probe element already generated below";
            if (!minimal) all_match = false;
        }
        observations.push_back(obs);
        rep.notes.push_back(line);
        if (r != expected) all_match = false;
    }
    rep.verdict = all_match ? Verdict::Verified : Verdict::Refuted;
    if (!all_match) rep.witness = observations;
    rep.notes.push_back("observed counts only; nothing is asserted beyond the tested range");
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

Report conjecture_inclusion(int n, int e, Seed seed, int trials, long coeff_bound) {
    if (n < 2 || e < 1) throw InputError("conjecture_inclusion: need n >= 2, e >= 1");
    auto t0 = Clock::now();
    Report rep;
    rep.claim = "predicted-initial-ideal-inside-generic-forms-initial-ideal";
    int d = e / 2 + 1;
    // Enough degree-d forms that the degree-d piece of the predicted ideal
    // can be covered at all, and at least n so the quotient is Artinian.
    long long count = std::max<long long>(dim_rd(n, d) - dim_rd(n, e - d), n);
    rep.parameters = {{"n", std::to_string(n)},       {"e", std::to_string(e)},
                      {"d", std::to_string(d)},       {"forms", std::to_string(count)},
                      {"seed", seed_str(seed)},       {"trials", std::to_string(trials)},
                      {"coeff_bound", std::to_string(coeff_bound)}};
    if (trials <= 0) {
        rep.verdict = Verdict::Inconclusive;
        rep.notes.push_back("no trials requested");
        rep.elapsed_ms = ms_since(t0);
        return rep;
    }

    MonomialIdeal predicted = predicted_in_ann(n, e);
    int guard = 6 * (d + 2);
    auto series = truncated_quotient_series(n, std::vector<int>(static_cast<size_t>(count), d),
                                            guard);
    int socle = -1;
    for (int k = 0; k <= guard; ++k)
        if (series[static_cast<size_t>(k)] != 0) socle = k;
    int cap = socle + 1;
    HilbertFunction expected;
    expected.values.assign(series.begin(), series.begin() + cap + 1);

    for (int t = 0; t < trials; ++t) {
        Seed trial_seed{seed.value + static_cast<std::uint64_t>(t)};
        bool generic = false;
        for (int attempt = 0; attempt < kResampleAttempts && !generic; ++attempt) {
            Seed attempt_seed = trial_seed.derive(static_cast<std::uint64_t>(attempt));
            std::vector<Polynomial> forms;
            for (long long i = 0; i < count; ++i)
                forms.push_back(
                    random_form(n, d, attempt_seed.derive(static_cast<std::uint64_t>(i)),
                                coeff_bound));
            GroebnerBasis B = buchberger(forms, kDegRevLex, cap);
            MonomialIdeal inI = initial_ideal(B);
            if (!(hilbert_function(inI, cap) == expected)) continue;
            generic = true;
            for (const auto& g : predicted.gens()) {
                if (!inI.contains(g)) {
                    rep.verdict = Verdict::Refuted;
                    nlohmann::json w;
                    w["trial"] = t;
                    w["missing_generator"] = g.str();
                    w["initial_ideal"] = nlohmann::json::array();
                    for (const auto& m : inI.gens()) w["initial_ideal"].push_back(m.str());
                    rep.witness = w;
                    rep.elapsed_ms = ms_since(t0);
                    return rep;
                }
            }
        }
        if (!generic) {
            rep.verdict = Verdict::Inconclusive;
            rep.notes.push_back("trial " + std::to_string(t) + ": no generic sample in " +
                                std::to_string(kResampleAttempts) + " attempts");
            rep.elapsed_ms = ms_since(t0);
            return rep;
        }
    }
    rep.verdict = Verdict::Verified;
    rep.notes.push_back("inclusion held in every trial (evidence only, not a proof)");
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

std::string table_text(const TableSpec& spec, BettiFormat format) {
    switch (spec.kind) {
    case TableSpec::Kind::PowerIdeal:
        return render_betti(ek_betti(MonomialIdeal::power_of_variables(spec.n, spec.param)),
                            format);
    case TableSpec::Kind::PredictedAnn:
        return render_betti(ek_betti(predicted_in_ann(spec.n, spec.param)), format);
    case TableSpec::Kind::GenericForms:
    default: {
        BettiRun run = spec.run;
        run.n = spec.n;
        run.d = spec.param;
        return render_betti(betti_outcome(run).table, format);
    }
    }
}

} // namespace apolar::verify
