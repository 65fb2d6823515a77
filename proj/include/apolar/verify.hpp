#ifndef APOLAR_VERIFY_HPP
#define APOLAR_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "apolar/betti.hpp"
#include "apolar/groebner.hpp"
#include "apolar/hilbert.hpp"
#include "apolar/inverse_systems.hpp"
#include "apolar/polynomial.hpp"

namespace apolar::verify {

enum class Verdict { Verified, Refuted, Inconclusive };

std::string verdict_name(Verdict v);

/// Machine-readable outcome of one verification run. Refuted reports always
/// carry a witness. Output is byte-identical across runs with the same
/// parameters and seed; wall-clock timing is attached only on request.
struct Report {
    std::string claim;
    std::map<std::string, std::string> parameters;
    Verdict verdict = Verdict::Inconclusive;
    nlohmann::json witness; // null unless set
    std::vector<std::string> notes;
    long long elapsed_ms = 0;
    bool include_timing = false;

    nlohmann::json to_json() const;
    std::string to_text() const;
    /// 0 = Verified, 1 = Refuted, 2 = Inconclusive.
    int exit_code() const;
};

/// Degreewise initial-monomial segments of ann(G) for seeded random forms.
Report verify_initial(int n, int e, MonomialOrder order, Seed seed, int trials,
                      long coeff_bound = 10000);

/// The explicit annihilator basis of H_e: membership, S-pair certification,
/// initial ideal, Hilbert function, plus reducedness flags for the plain and
/// tail-corrected variants.
Report verify_gb(int n, int e);

/// x_n as a strong Lefschetz element on the predicted initial ideal.
Report verify_lefschetz(int n, int e);

/// Inputs for the generic-forms Betti run: count = dim R_d - dim R_{d-1}
/// random degree-d forms, optional generic extras of higher degree, and an
/// optional explicit (possibly non-generic) extra form.
struct BettiRun {
    int n = 3;
    int d = 4;
    std::vector<int> extra_degrees;
    std::optional<Polynomial> explicit_extra;
    Seed seed{1};
    long coeff_bound = 10000;
    std::optional<int> degree_cap;
};

/// Everything the Betti verification computes, for in-process consumers.
struct BettiOutcome {
    MonomialIdeal initial_ideal;
    BettiTable table;
    HilbertFunction hf;
    bool strongly_stable = false;
    bool formula_match = false;
    bool gens_match = false;
    bool betti_via_koszul = false;
    int socle = -1;
    int cap = 0;
    int attempts = 1;
    long long gen_count = 0;
};

/// Computes in(I) from a degree-capped basis, gated on the predicted Hilbert
/// function (resampling up to 5 derived seeds). Throws InputError when the
/// gate keeps failing.
BettiOutcome betti_outcome(const BettiRun& run);

Report verify_betti(const BettiRun& run);

/// Number of minimal generators of ann(H_{2d+1}) in degree d+2 for each
/// d <= d_max, with the specific-element membership probe for even d.
Report conjecture_h_odd(int n, int d_max);

/// Divisibility of every predicted in(ann G) generator by some generator of
/// in(I) for seeded random forms of degree floor(e/2)+1.
Report conjecture_inclusion(int n, int e, Seed seed, int trials, long coeff_bound = 10000);

/// Betti table selection for the table subcommand.
struct TableSpec {
    enum class Kind { PowerIdeal, PredictedAnn, GenericForms };
    Kind kind = Kind::PowerIdeal;
    int n = 3;
    int param = 2; // d for PowerIdeal/GenericForms, e for PredictedAnn
    BettiRun run;  // used by GenericForms
};

std::string table_text(const TableSpec& spec, BettiFormat format);

/// Coefficients of prod_i (1 - t^{d_i}) / (1-t)^n with everything from the
/// first non-positive coefficient on replaced by zero; the expected Hilbert
/// function of a quotient by generic forms of the given degrees.
std::vector<long long> truncated_quotient_series(int n, const std::vector<int>& degrees,
                                                 int max_degree);

} // namespace apolar::verify

#endif
