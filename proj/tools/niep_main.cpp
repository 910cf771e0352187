// Command-line front end: classification, construction, verification,
// threshold isolation, structured fitting, and root isolation.
//
// Exit codes: 0 success/consistent, 1 a verification or classification
// produced a violated/failed result, 2 invalid input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "niep/classify.hpp"
#include "niep/json_io.hpp"
#include "niep/meehan.hpp"
#include "niep/threshold.hpp"
#include "niep/verify.hpp"

namespace {

using niep::json;

constexpr int kOk = 0;
constexpr int kFailedResult = 1;
constexpr int kInvalidInput = 2;

json read_input(const std::string& arg) {
    std::string text;
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw niep::DomainError("cannot open input file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

const char* explain_condition(const std::string& name) {
    if (name == "perron")
        return "the spectral radius of a nonnegative matrix is itself an eigenvalue, so "
               "max|lambda_i| must be attained by the largest listed value";
    if (name == "power_sums")
        return "s_k = sum(lambda_i^k) equals trace(A^k) of a realizing matrix, hence s_k >= 0";
    if (name == "jll")
        return "n^(m-1) * s_{km} >= s_k^m for all k, m >= 1";
    if (name == "lm_trace_zero")
        return "five values summing to zero are realizable only if 4*s_4 >= s_2^2";
    if (name == "extreme")
        return "an extreme 5x5 realizing matrix forces 4*s_4 - s_2^2 + s_1^2*s_2 - s_1^4/2 >= 0";
    if (name == "mn_symmetric")
        return "for a symmetric realizing matrix, lambda_2 + lambda_5 <= trace(A)";
    if (name == "suleimanova")
        return "a list with one positive value is realizable exactly when its sum is nonnegative";
    return "";
}

void attach_explanations(json& report) {
    if (!report.contains("conditions")) return;
    for (auto& cond : report["conditions"]) {
        const auto text = explain_condition(cond.value("condition", ""));
        if (*text) cond["explain"] = text;
    }
}

void emit(const json& run_report, bool as_json) {
    if (as_json) {
        std::cout << run_report.dump(2) << "\n";
        return;
    }
    // human-readable text rendered from the same JSON
    const json& res = run_report.at("results");
    const std::string verb = run_report.at("verb");
    if (verb == "check") {
        for (const auto& cond : res.at("classification").at("conditions")) {
            if (!cond.at("applicable").get<bool>()) continue;
            std::cout << (cond.at("satisfied").get<bool>() ? "  [ok]       " : "  [violated] ")
                      << cond.at("condition").get<std::string>() << ": "
                      << cond.at("note").get<std::string>() << "\n";
            if (cond.contains("explain"))
                std::cout << "             (" << cond.at("explain").get<std::string>() << ")\n";
        }
        const json& scan = res.at("classification").at("partition_scan");
        if (scan.at("ran").get<bool>())
            std::cout << "  partition scan: " << scan.at("viable").size()
                      << " viable bipartition(s)\n";
        for (const char* key : {"NIEP", "D-RNIEP", "SNIEP"}) {
            const json& v = res.at("classification").at("verdicts").at(key);
            std::cout << "  " << key << ": " << v.at("status").get<std::string>();
            if (v.contains("certificate")) {
                const json& c = v.at("certificate");
                std::cout << "  [" << c.at("kind").get<std::string>() << ": "
                          << c.at("source").get<std::string>();
                if (c.contains("parameter")) std::cout << " @ t=" << c.at("parameter").get<std::string>();
                std::cout << "]";
            }
            std::cout << "\n";
        }
    } else if (verb == "construct") {
        std::cout << res.at("matrix").dump(2) << "\n";
        const json& rep = res.at("verification");
        std::cout << "  charpoly_match=" << rep.at("charpoly_match") << " nonnegative="
                  << rep.at("nonnegative") << " irreducible=" << rep.at("irreducible")
                  << " symmetric=" << rep.at("symmetric") << " diagonalizable="
                  << rep.at("diagonalizable") << "\n";
    } else if (verb == "verify") {
        const json& rep = res.at("verification");
        std::cout << "  charpoly_match=" << rep.at("charpoly_match") << " nonnegative="
                  << rep.at("nonnegative") << " irreducible=" << rep.at("irreducible")
                  << " symmetric=" << rep.at("symmetric") << " diagonalizable="
                  << rep.at("diagonalizable") << "\n";
        for (const auto& jr : res.at("jordan")) {
            std::cout << "  jordan(" << jr.at("eigenvalue").get<std::string>() << "): blocks [";
            bool first = true;
            for (const auto& b : jr.at("block_sizes")) {
                std::cout << (first ? "" : ", ") << b;
                first = false;
            }
            std::cout << "], multiplicity " << jr.at("algebraic_multiplicity") << "\n";
        }
    } else if (verb == "threshold") {
        const json& t = res.at("threshold");
        std::cout << "  family " << t.at("family").get<std::string>() << ": threshold in ["
                  << t.at("interval").at("lo").get<std::string>() << ", "
                  << t.at("interval").at("hi").get<std::string>() << "]\n";
        if (t.contains("binding_entry"))
            std::cout << "  binding entry (" << t.at("binding_entry").at("row") << ","
                      << t.at("binding_entry").at("col") << ")\n";
        if (t.contains("closed_form_check")) {
            const json& cf = t.at("closed_form_check");
            std::cout << "  closed form " << cf.at("expression").get<std::string>() << " = "
                      << cf.at("closed_form_decimal").get<std::string>() << "\n"
                      << "  interval midpoint            = "
                      << cf.at("interval_mid_decimal").get<std::string>() << "\n"
                      << "  |difference| = " << cf.at("abs_diff").get<std::string>()
                      << (cf.at("agrees").get<bool>() ? "  (agrees)" : "  (DISAGREES)") << "\n";
        }
    } else if (verb == "fit-meehan") {
        const json& f = res.at("fit");
        if (f.contains("converged") && !f.at("converged").get<bool>()) {
            std::cout << "  no convergence; best residual " << f.at("best_residual").get<std::string>()
                      << "\n";
        } else {
            std::cout << "  p=" << f.at("p").get<std::string>() << " q=" << f.at("q").get<std::string>()
                      << " w=" << f.at("w").get<std::string>() << " h=" << f.at("h").get<std::string>()
                      << "\n  residual=" << f.at("residual").get<std::string>() << " nonnegative="
                      << f.at("nonnegative") << "\n";
        }
    } else if (verb == "roots") {
        for (const auto& iv : res.at("roots"))
            std::cout << "  root in (" << iv.at("lo").get<std::string>() << ", "
                      << iv.at("hi").get<std::string>() << "]\n";
        if (res.at("roots").empty()) std::cout << "  no real roots\n";
    }
    std::cout << "exit " << run_report.at("exit_code") << "\n";
}

json run_report(const std::string& verb, json inputs, json results, int code) {
    return json{{"verb", verb},
                {"inputs", std::move(inputs)},
                {"results", std::move(results)},
                {"exit_code", code}};
}

int cmd_check(const std::string& input, int depth, bool as_json, bool explain) {
    const niep::Spectrum sp = niep::spectrum_from_json(read_input(input));
    const niep::Classification cls = niep::classify(sp, {depth});
    json c = to_json(cls);
    if (explain) attach_explanations(c);

    bool failed = false;
    for (const auto& rep : cls.conditions)
        if (rep.violated()) failed = true;
    for (const auto* v : {&cls.niep, &cls.drniep, &cls.sniep})
        if (v->status == niep::Status::NOT_REALIZABLE) failed = true;

    const int code = failed ? kFailedResult : kOk;
    emit(run_report("check", json{{"spectrum", to_json(sp)}, {"depth", depth}},
                    json{{"classification", c}}, code),
         as_json);
    return code;
}

int cmd_construct(const std::string& name, const std::string& t_str, bool as_json) {
    json inputs{{"name", name}};
    if (const niep::MatrixFamily* fam = niep::find_family(name)) {
        if (t_str.empty()) {
            std::cerr << "construct: family '" << name << "' needs --t\n";
            return kInvalidInput;
        }
        const niep::Rational t = niep::Rational::from_string(t_str);
        inputs["t"] = t.str();
        const niep::MatrixQ m = fam->eval(t);
        const niep::Spectrum target = fam->target_at(t);
        const niep::VerificationReport rep = niep::verify_spectrum(m, target);
        const int code = rep.ok() ? kOk : kFailedResult;
        emit(run_report("construct", inputs,
                        json{{"matrix", to_json(m)},
                             {"target_spectrum", to_json(target)},
                             {"verification", to_json(rep)}},
                        code),
             as_json);
        return code;
    }
    if (const niep::CatalogEntry* entry = niep::find_catalog_entry(name)) {
        if (!t_str.empty()) {
            std::cerr << "construct: catalog entry '" << name << "' takes no --t\n";
            return kInvalidInput;
        }
        const niep::VerificationReport rep = std::visit(
            [&](const auto& m) { return niep::verify_spectrum(m, entry->claimed_spectrum); },
            entry->matrix);
        const int code = rep.ok() ? kOk : kFailedResult;
        json mj = std::visit([](const auto& m) { return to_json(m); }, entry->matrix);
        emit(run_report("construct", inputs,
                        json{{"matrix", mj},
                             {"target_spectrum", to_json(entry->claimed_spectrum)},
                             {"verification", to_json(rep)}},
                        code),
             as_json);
        return code;
    }
    std::cerr << "construct: unknown name '" << name << "' (families: lm_sigma_hat, perturbed; "
              << "catalog: sym_sigma_t1, sym_sigma_hat_t1, jordan_sigma_3_4)\n";
    return kInvalidInput;
}

int cmd_verify(const std::string& matrix_in, const std::string& spectrum_in, bool as_json) {
    const niep::MatrixAny m = niep::matrix_from_json(read_input(matrix_in));
    const niep::Spectrum sp = niep::spectrum_from_json(read_input(spectrum_in));

    const niep::VerificationReport rep =
        std::visit([&](const auto& mm) { return niep::verify_spectrum(mm, sp); }, m);

    // Jordan analysis at each distinct rational eigenvalue of the matrix
    json jordan = json::array();
    std::vector<niep::Rational> seen;
    for (const auto& lam : sp.values()) {
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == lam;
        if (dup) continue;
        seen.push_back(lam);
        try {
            const niep::JordanReport jr = std::visit(
                [&](const auto& mm) { return niep::jordan_structure(mm, lam); }, m);
            jordan.push_back(to_json(jr));
        } catch (const niep::DomainError&) {
            // listed value is not an eigenvalue; the charpoly mismatch flag
            // already reports the discrepancy
        }
    }

    const int code = rep.ok() ? kOk : kFailedResult;
    emit(run_report("verify", json{{"matrix", to_json(m)}, {"spectrum", to_json(sp)}},
                    json{{"verification", to_json(rep)}, {"jordan", jordan}}, code),
         as_json);
    return code;
}

int cmd_threshold(const std::string& family, const std::string& eps_str, bool as_json) {
    const niep::MatrixFamily* fam = niep::find_family(family);
    if (fam == nullptr) {
        std::cerr << "threshold: unknown family '" << family << "'\n";
        return kInvalidInput;
    }
    const niep::Rational eps = niep::Rational::from_string(eps_str);
    const niep::ThresholdResult res = niep::family_nonneg_threshold(*fam, eps);
    emit(run_report("threshold", json{{"family", family}, {"eps", eps.str()}},
                    json{{"threshold", to_json(res)}}, kOk),
         as_json);
    return kOk;
}

int cmd_fit_meehan(double t, int attempts, bool as_json) {
    json inputs{{"t", niep::double_str(t)}, {"attempts", attempts}};
    try {
        const niep::FitResult fit = niep::meehan_fit(t, attempts);
        json f = to_json(fit);
        f["converged"] = true;
        const int code = fit.nonnegative ? kOk : kFailedResult;
        emit(run_report("fit-meehan", inputs, json{{"fit", f}}, code), as_json);
        return code;
    } catch (const niep::ConvergenceError& e) {
        json f{{"converged", false}, {"best_residual", niep::double_str(e.best_residual())}};
        emit(run_report("fit-meehan", inputs, json{{"fit", f}}, kFailedResult), as_json);
        return kFailedResult;
    }
}

int cmd_roots(const std::string& input, const std::string& eps_str, bool as_json) {
    const niep::Poly p = niep::poly_from_json(read_input(input));
    if (p.is_zero()) {
        std::cerr << "roots: zero polynomial\n";
        return kInvalidInput;
    }
    const niep::Rational eps = niep::Rational::from_string(eps_str);
    const auto intervals = niep::isolate_real_roots(p, eps);
    json arr = json::array();
    for (const auto& iv : intervals) arr.push_back(to_json(iv));
    emit(run_report("roots", json{{"poly", to_json(p)}, {"eps", eps.str()}},
                    json{{"roots", arr}}, kOk),
         as_json);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact realizability toolkit for real spectra of nonnegative matrices"};
    app.require_subcommand(1);
    app.fallthrough();  // parent flags like --json may follow the subcommand
    bool as_json = false;
    bool explain = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string spectrum_in, matrix_in, name, t_rational, poly_in;
    std::string eps = "1/1000000000";
    int depth = 10;
    int attempts = 256;
    double t_decimal = 0;

    auto* check = app.add_subcommand("check", "condition reports and verdicts for a spectrum");
    check->add_option("spectrum", spectrum_in, "spectrum JSON (file, '-' or inline)")->required();
    check->add_option("--depth", depth, "power-sum/JLL depth (default 10)");
    check->add_flag("--explain", explain, "attach the rationale for each condition");

    auto* construct = app.add_subcommand("construct", "emit a family instance or catalog matrix");
    construct->add_option("name", name, "family or catalog name")->required();
    construct->add_option("--t", t_rational, "family parameter (exact rational string)");

    auto* verify = app.add_subcommand("verify", "verify a matrix against a spectrum");
    verify->add_option("--matrix", matrix_in, "matrix JSON (file, '-' or inline)")->required();
    verify->add_option("--spectrum", spectrum_in, "spectrum JSON (file, '-' or inline)")->required();

    auto* threshold = app.add_subcommand("threshold", "isolate a family's nonnegativity threshold");
    threshold->add_option("family", name, "family name")->required();
    threshold->add_option("--eps", eps, "interval width (exact rational string)");

    auto* fit = app.add_subcommand("fit-meehan", "fit the structured form for (3+t,3,-2,-2,-2)");
    fit->add_option("--t", t_decimal, "parameter t > 0 (decimal)")->required();
    fit->add_option("--attempts", attempts, "multistart seed budget (default 256)");

    auto* roots = app.add_subcommand("roots", "isolate all real roots of a polynomial");
    roots->add_option("poly", poly_in, "coefficient array JSON, lowest degree first")->required();
    roots->add_option("--eps", eps, "interval width (exact rational string)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(spectrum_in, depth, as_json, explain);
        if (construct->parsed()) return cmd_construct(name, t_rational, as_json);
        if (verify->parsed()) return cmd_verify(matrix_in, spectrum_in, as_json);
        if (threshold->parsed()) return cmd_threshold(name, eps, as_json);
        if (fit->parsed()) {
            if (t_decimal <= 0) {
                std::cerr << "fit-meehan: t must be positive\n";
                return kInvalidInput;
            }
            return cmd_fit_meehan(t_decimal, attempts, as_json);
        }
        if (roots->parsed()) return cmd_roots(poly_in, eps, as_json);
    } catch (const niep::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: invalid JSON input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const niep::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailedResult;
    }
    return kInvalidInput;
}
