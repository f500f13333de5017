#include "moonshine/cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "moonshine/cm163.hpp"
#include "moonshine/denominator.hpp"
#include "moonshine/hauptmodul.hpp"
#include "moonshine/modular_forms.hpp"
#include "moonshine/numerology.hpp"
#include "moonshine/replication.hpp"
#include "moonshine/selftest.hpp"

namespace moonshine::cli {

namespace {

using nlohmann::ordered_json;

int status_exit_code(Status s) {
    switch (s) {
        case Status::verified: return 0;
        case Status::failed: return 1;
        case Status::rejected: return 2;
    }
    return 2;
}

ordered_json report_json(const VerificationReport& r) {
    return ordered_json::parse(r.to_json());
}

int emit_report(const VerificationReport& r, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report_json(r).dump() << "\n";
    } else {
        out << r.to_text() << "\n";
    }
    return status_exit_code(r.status);
}

int emit_report_group(const std::vector<VerificationReport>& reports, std::string merged_identity,
                      const std::string& format, std::ostream& out) {
    VerificationReport merged = merge(reports);
    merged.identity = std::move(merged_identity);
    if (format == "json") {
        ordered_json j;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(report_json(r));
        j["merged"] = report_json(merged);
        out << j.dump() << "\n";
    } else {
        for (const auto& r : reports) out << r.to_text() << "\n";
        out << "merged: " << merged.to_text() << "\n";
    }
    return status_exit_code(merged.status);
}

ordered_json series_terms(const LaurentSeries& s) {
    ordered_json terms = ordered_json::array();
    for (long e = s.valuation(); e < s.order(); ++e) {
        if (s.coeff(e) == 0) continue;
        terms.push_back({{"exponent", e}, {"coefficient", s.coeff(e).get_str()}});
    }
    return terms;
}

struct ExpandRequest {
    std::string series;
    long order = 20;
    bool density_report = false;
    std::string class_table_path;
};

int run_expand(const ExpandRequest& req, const std::string& format, std::ostream& out) {
    ordered_json j;
    j["series"] = req.series;
    j["order"] = req.order;
    std::string text;

    if (req.series.rfind("eta^", 0) == 0) {
        const long m = std::stol(req.series.substr(4));
        const EtaExpansion eta = eta_power(m, req.order);
        text = "q^(" + eta.prefactor_exponent.get_str() + ") * (" +
               eta.product_part.to_string() + ")";
        j["prefactor_exponent"] = eta.prefactor_exponent.get_str();
        j["product_part"] = eta.product_part.to_string();
        j["terms"] = series_terms(eta.product_part);
        if (req.density_report) {
            const DysonEtaReport rep = dyson_eta_report(m, req.order);
            j["nonzero_count"] = rep.nonzero_count;
            j["density"] = rep.density;
            j["in_dyson_list"] = rep.in_dyson_list;
            std::ostringstream extra;
            extra << "\nnonzero coefficients: " << rep.nonzero_count << " / " << rep.order
                  << " (density " << rep.density << ")"
                  << "\nin Dyson list: " << (rep.in_dyson_list ? "yes" : "no (warning)");
            text += extra.str();
        }
    } else if (!req.series.empty() && req.series[0] == 't') {
        ClassTable table = ClassTable::builtin();
        if (!req.class_table_path.empty()) table.load(req.class_table_path);
        const McKayThompsonSeries mt =
            mckay_thompson(req.series.substr(1), req.order, table);
        text = mt.expansion.to_string();
        j["class_label"] = mt.class_label;
        j["group_description"] = mt.group_description;
        j["text"] = text;
        j["terms"] = series_terms(mt.expansion);
        out << (format == "json" ? j.dump() : text) << "\n";
        return 0;
    } else {
        LaurentSeries s = LaurentSeries::constant(0, 1);
        if (req.series == "j") {
            s = j_series(req.order);
        } else if (req.series == "j744") {
            s = j_minus_744(req.order);
        } else if (req.series == "e4") {
            s = eisenstein_e4(req.order);
        } else if (req.series == "delta") {
            s = delta_series(req.order);
        } else {
            throw CLI::ValidationError("--series", "unknown series '" + req.series + "'");
        }
        text = s.to_string();
        j["terms"] = series_terms(s);
    }
    j["text"] = text;
    out << (format == "json" ? j.dump() : text) << "\n";
    return 0;
}

int run_cm163_command(long digits, long series_order, const std::string& format,
                      std::ostream& out) {
    const Cm163Result r = run_cm163(digits, series_order);
    if (format == "json") {
        ordered_json j;
        j["digits"] = r.fractional_digits;
        j["series_order"] = r.series_order;
        j["exp_pi_sqrt_163"] = r.exp_string;
        j["j_value"] = r.j_value.to_string(std::min(r.fractional_digits, 30L));
        j["residual"] = r.residual.to_scientific();
        j["two_term_deviation"] = r.two_term_deviation.to_scientific();
        j["factorization"] = report_json(r.factorization);
        out << j.dump() << "\n";
    } else {
        out << "exp(pi*sqrt(163)) = " << r.exp_string << "\n";
        out << "j((1 + i*sqrt(163))/2) = " << r.j_value.to_string(std::min(r.fractional_digits, 30L))
            << "\n";
        out << "residual j + 262537412640768000 = " << r.residual.to_scientific() << "\n";
        out << "two-term deviation (q^-1 + 744 alone) = " << r.two_term_deviation.to_scientific()
            << "\n";
        out << r.factorization.to_text() << "\n";
    }
    return status_exit_code(r.factorization.status);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series calculator and identity verifier for the classical "
                 "moonshine numerology"};
    app.name("moonshine");
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.require_subcommand(1);

    // expand
    auto* expand = app.add_subcommand("expand", "Print a series expansion");
    ExpandRequest expand_req;
    expand->add_option("--series", expand_req.series,
                       "j | j744 | e4 | delta | eta^<m> | t1A | t2A | t2B | t<label>")
        ->required();
    expand->add_option("--order", expand_req.order, "Exclusive truncation order (default 20)")
        ->check(CLI::Range(1L, 100000L));
    std::string report_kind;
    expand->add_option("--report", report_kind, "Extra report: density (eta series only)")
        ->check(CLI::IsMember({"density"}));
    expand->add_option("--class-table", expand_req.class_table_path,
                       "JSON file with extra eta-quotient class recipes");

    // verify
    auto* verify = app.add_subcommand("verify", "Verify one identity");
    std::string identity;
    verify->add_option("--identity", identity, "knz | c4-relation | triple-product")->required();
    long p_order = 8, q_order = 8, tp_order = 50, z_range = 8;
    verify->add_option("--p-order", p_order, "KNZ outer truncation (default 8)");
    verify->add_option("--q-order", q_order, "KNZ inner truncation (default 8)");
    verify->add_option("--order", tp_order, "Triple-product q truncation (default 50)");
    verify->add_option("--z-range", z_range, "Triple-product z window (default 8)");

    // cm163
    auto* cm = app.add_subcommand("cm163", "exp(pi*sqrt(163)) and j at the CM point");
    long digits = 35, series_order = 8;
    cm->add_option("--digits", digits, "Digits after the decimal point (default 35, min 15)");
    cm->add_option("--series-order", series_order, "j truncation order (default 8)");

    // numerology
    auto* num = app.add_subcommand("numerology", "Discrete numerical claims");
    std::string check;
    num->add_option("--check", check,
                    "monster-order | ogg-primes | mckay | dynkin-monster | dynkin-baby | "
                    "dynkin-fi24 | binary-dims | fold-e7 | fold-e6")
        ->required()
        ->check(CLI::IsMember({"monster-order", "ogg-primes", "mckay", "dynkin-monster",
                               "dynkin-baby", "dynkin-fi24", "binary-dims", "fold-e7",
                               "fold-e6"}));

    // all
    auto* all = app.add_subcommand("all", "Run the full verification suite");
    SuiteConfig suite;
    std::string inject;
    all->add_option("--seed", suite.seed, "Seed for the randomized property suites");
    all->add_option("--inject-corruption", inject, "Test hook: corrupt a series (delta)")
        ->check(CLI::IsMember({"delta"}));

    std::vector<const char*> argv;
    argv.push_back("moonshine");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(expand)) {
            expand_req.density_report = (report_kind == "density");
            return run_expand(expand_req, format, out);
        }
        if (app.got_subcommand(verify)) {
            if (identity == "knz") {
                return emit_report(verify_knz(KnzWindow(p_order, q_order)), format, out);
            }
            if (identity == "c4-relation") {
                return emit_report(verify_c4_relation(), format, out);
            }
            if (identity == "triple-product") {
                return emit_report(verify_triple_product(TripleProductWindow(tp_order, z_range)),
                                   format, out);
            }
            err << "error: unknown identity '" << identity << "'\n";
            return 2;
        }
        if (app.got_subcommand(cm)) {
            if (digits < 15) {
                err << "error: --digits must be >= 15; below that the near-integer property "
                       "is not distinguishable\n";
                return 2;
            }
            return run_cm163_command(digits, series_order, format, out);
        }
        if (app.got_subcommand(num)) {
            if (check == "monster-order") return emit_report(monster_order_check(), format, out);
            if (check == "ogg-primes") return emit_report(ogg_primes_check(), format, out);
            if (check == "mckay") return emit_report(mckay_decomposition_check(), format, out);
            if (check == "dynkin-monster") {
                return emit_report(involution_product_check("monster/E8"), format, out);
            }
            if (check == "dynkin-baby") {
                return emit_report(involution_product_check("baby/F4"), format, out);
            }
            if (check == "dynkin-fi24") {
                return emit_report(involution_product_check("Fi24/G2"), format, out);
            }
            if (check == "binary-dims") {
                return emit_report_group({binary_group_dims_check("E6"),
                                          binary_group_dims_check("E7"),
                                          binary_group_dims_check("E8")},
                                         "binary-dims", format, out);
            }
            if (check == "fold-e7") return emit_report(fold_check("E7->F4"), format, out);
            if (check == "fold-e6") return emit_report(fold_check("E6->G2"), format, out);
        }
        if (app.got_subcommand(all)) {
            suite.corrupt_delta = (inject == "delta");
            return emit_report_group(run_default_suite(suite), "all", format, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace moonshine::cli
