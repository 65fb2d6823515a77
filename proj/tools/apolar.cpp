#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "apolar/json_io.hpp"
#include "apolar/verify.hpp"

using namespace apolar;

namespace {

Seed resolve_seed(const CLI::Option* opt, std::uint64_t value) {
    if (opt->count() > 0) return Seed{value};
    if (const char* env = std::getenv("APOLAR_SEED")) return Seed{std::strtoull(env, nullptr, 10)};
    return Seed{1};
}

int emit(const verify::Report& rep, const std::string& format, bool timings) {
    verify::Report r = rep;
    r.include_timing = timings;
    if (format == "json")
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_text();
    return r.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of annihilator initial ideals, Groebner bases, and Betti tables"};
    app.require_subcommand(1);

    std::string format = "text";
    bool timings = false;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timings", timings, "include wall-clock timing in reports");

    int n = 3, e = 2, d = 2, trials = 3, d_max = 4;
    long coeff_bound = 10000;
    std::uint64_t seed_value = 1;
    std::string order_name = "degrevlex";
    std::vector<int> extra_degrees;
    std::string extra_form_path;
    int degree_cap = -1;

    auto* vi = app.add_subcommand("verify-initial",
                                  "degreewise initial segments of a random form's annihilator");
    vi->add_option("--n", n)->required();
    vi->add_option("--e", e)->required();
    vi->add_option("--order", order_name)->check(CLI::IsMember({"degrevlex", "lex", "deglex"}));
    auto* vi_seed = vi->add_option("--seed", seed_value);
    vi->add_option("--trials", trials);
    vi->add_option("--coeff-bound", coeff_bound);

    auto* vg = app.add_subcommand("verify-gb",
                                  "explicit annihilator basis of the complete symmetric form");
    vg->add_option("--n", n)->required();
    vg->add_option("--e", e)->required();

    auto* vb = app.add_subcommand("verify-betti", "Betti table of a generic-forms initial ideal");
    vb->add_option("--n", n)->required();
    vb->add_option("--d", d)->required();
    vb->add_option("--extra-degrees", extra_degrees, "extra generic form degrees (> d)");
    vb->add_option("--extra-form", extra_form_path, "path to a polynomial JSON file");
    auto* vb_seed = vb->add_option("--seed", seed_value);
    vb->add_option("--coeff-bound", coeff_bound);
    vb->add_option("--degree-cap", degree_cap);

    auto* vl = app.add_subcommand("verify-lefschetz",
                                  "multiplication by powers of the last variable on the quotient");
    vl->add_option("--n", n)->required();
    vl->add_option("--e", e)->required();

    auto* ch = app.add_subcommand("conjecture-h-odd",
                                  "extra minimal generator counts for odd-degree symmetric forms");
    ch->add_option("--n", n)->required();
    ch->add_option("--d-max", d_max)->required();

    auto* ci = app.add_subcommand("conjecture-inclusion",
                                  "predicted initial ideal inside a generic-forms initial ideal");
    ci->add_option("--n", n)->required();
    ci->add_option("--e", e)->required();
    auto* ci_seed = ci->add_option("--seed", seed_value);
    ci->add_option("--trials", trials);
    ci->add_option("--coeff-bound", coeff_bound);

    int power_d = -1, ann_e = -1, generic_d = -1;
    auto* tb = app.add_subcommand("table", "render a Betti table");
    tb->add_option("--n", n)->required();
    tb->add_option("--power-d", power_d, "table of (x_1..x_n)^d");
    tb->add_option("--ann-e", ann_e, "table of the predicted degree-e annihilator initial ideal");
    tb->add_option("--generic-d", generic_d, "table of an ideal of random degree-d forms");
    tb->add_option("--extra-degrees", extra_degrees);
    tb->add_option("--extra-form", extra_form_path);
    auto* tb_seed = tb->add_option("--seed", seed_value);
    tb->add_option("--coeff-bound", coeff_bound);
    tb->add_option("--degree-cap", degree_cap);

    CLI11_PARSE(app, argc, argv);

    try {
        if (vi->parsed()) {
            return emit(verify::verify_initial(n, e, MonomialOrder::parse(order_name),
                                               resolve_seed(vi_seed, seed_value), trials,
                                               coeff_bound),
                        format, timings);
        }
        if (vg->parsed()) return emit(verify::verify_gb(n, e), format, timings);
        if (vl->parsed()) return emit(verify::verify_lefschetz(n, e), format, timings);
        if (ch->parsed()) return emit(verify::conjecture_h_odd(n, d_max), format, timings);
        if (ci->parsed()) {
            return emit(verify::conjecture_inclusion(n, e, resolve_seed(ci_seed, seed_value),
                                                     trials, coeff_bound),
                        format, timings);
        }
        if (vb->parsed()) {
            verify::BettiRun run;
            run.n = n;
            run.d = d;
            run.extra_degrees = extra_degrees;
            run.seed = resolve_seed(vb_seed, seed_value);
            run.coeff_bound = coeff_bound;
            if (degree_cap >= 0) run.degree_cap = degree_cap;
            if (!extra_form_path.empty())
                run.explicit_extra = read_polynomial_file(extra_form_path);
            return emit(verify::verify_betti(run), format, timings);
        }
        if (tb->parsed()) {
            verify::TableSpec spec;
            spec.n = n;
            if (power_d >= 0) {
                spec.kind = verify::TableSpec::Kind::PowerIdeal;
                spec.param = power_d;
            } else if (ann_e >= 0) {
                spec.kind = verify::TableSpec::Kind::PredictedAnn;
                spec.param = ann_e;
            } else if (generic_d >= 0) {
                spec.kind = verify::TableSpec::Kind::GenericForms;
                spec.param = generic_d;
                spec.run.extra_degrees = extra_degrees;
                spec.run.seed = resolve_seed(tb_seed, seed_value);
                spec.run.coeff_bound = coeff_bound;
                if (degree_cap >= 0) spec.run.degree_cap = degree_cap;
                if (!extra_form_path.empty())
                    spec.run.explicit_extra = read_polynomial_file(extra_form_path);
            } else {
                std::cerr << "table: pass one of --power-d, --ann-e, --generic-d\n";
                return 2;
            }
            std::cout << verify::table_text(
                spec, format == "json" ? BettiFormat::Json : BettiFormat::Text);
            if (format != "json") std::cout.flush();
            else std::cout << "\n";
            return 0;
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
