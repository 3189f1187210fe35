#include "cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbtop/construction.hpp"
#include "orbtop/number_theory.hpp"
#include "orbtop/obstruction.hpp"
#include "orbtop/orbifold_json.hpp"

namespace orbtop::cli {

namespace {

using Json = nlohmann::ordered_json;

// FNV-1a over the canonical input rendering; stable across runs.
std::string digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

Json group_to_json(const FiniteAbelianGroup& g) {
    Json j;
    j["rank"] = g.free_rank();
    Json torsion = Json::array();
    for (const auto& c : g.torsion())
        torsion.push_back(Json{{"prime", int_str(c.prime)},
                               {"exponent", c.exponent},
                               {"multiplicity", c.multiplicity}});
    j["prime_power_torsion"] = torsion;
    Json factors = Json::array();
    for (const Int& k : g.invariant_factors()) factors.push_back(int_str(k));
    j["invariant_factors"] = factors;
    j["pretty"] = g.to_string();
    return j;
}

Json rat_vec_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& q : v) out.push_back(rat_str(q));
    return out;
}

Json h1_report_json(const H1Report& report) {
    Json j;
    j["b1_zero"] = report.b1_zero;
    j["surjective"] = report.surjective;
    j["primitive"] = report.primitive;
    j["all"] = report.all();
    j["failing_prime"] =
        report.failing_prime ? Json(int_str(*report.failing_prime)) : Json(nullptr);
    j["primitivity_gcd"] = int_str(report.primitivity_gcd);
    Json notes = Json::array();
    for (const auto& n : report.notes) notes.push_back(n);
    j["notes"] = notes;
    return j;
}

Json label_json(const SmaleBardenLabel& label) {
    Json j;
    j["rank"] = label.rank;
    Json factors = Json::array();
    for (const Int& k : label.invariant_factors) factors.push_back(int_str(k));
    j["invariant_factors"] = factors;
    j["barden"] = label.barden;
    j["name"] = label.name();
    return j;
}

struct ReportPrinter {
    std::string command;
    Json inputs = Json::object();
    Json outputs = Json::object();
    std::vector<std::string> human_lines;
    bool human = false;

    int emit() const {
        if (human) {
            for (const auto& line : human_lines) std::cout << line << "\n";
            return 0;
        }
        Json report;
        report["command"] = command;
        report["inputs"] = inputs;
        report["digest"] = digest(inputs.dump());
        report["outputs"] = outputs;
        report["status"] = "ok";
        std::cout << report.dump(2) << "\n";
        return 0;
    }
};

int emit_error(bool human, const std::string& kind, const std::string& message) {
    if (human) {
        std::cerr << "error (" << kind << "): " << message << "\n";
    } else {
        Json report;
        report["status"] = "error";
        report["error"] = Json{{"kind", kind}, {"message", message}};
        std::cout << report.dump(2) << "\n";
    }
    return 1;
}

HJChain parse_chain_arg(const std::string& text) {
    HJChain chain;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw ParseError("empty chain entry in '" + text + "'");
        chain.coeffs.push_back(parse_int(item));
    }
    if (chain.coeffs.empty()) throw ParseError("empty chain '" + text + "'");
    return chain;
}

CyclicSingularity parse_fraction_arg(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw ParseError("expected d/r, got '" + text + "'");
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

Json chain_json(const HJChain& chain) {
    Json out = Json::array();
    for (const Int& b : chain.coeffs) out.push_back(int_str(b));
    return out;
}

int run_hjcf(const std::optional<std::string>& eval_arg,
             const std::optional<std::string>& expand_arg,
             const std::optional<std::string>& dual_arg, bool human) {
    ReportPrinter printer;
    printer.command = "hjcf";
    printer.human = human;
    if (eval_arg) {
        HJChain chain = parse_chain_arg(*eval_arg);
        CyclicSingularity s = hj_eval(chain);
        printer.inputs["eval"] = *eval_arg;
        printer.outputs["d"] = int_str(s.d);
        printer.outputs["r"] = int_str(s.r);
        printer.human_lines.push_back("[" + *eval_arg + "] = " + int_str(s.d) + "/" +
                                      int_str(s.r));
    } else if (expand_arg) {
        CyclicSingularity s = parse_fraction_arg(*expand_arg);
        HJChain chain = hj_expand(s);
        printer.inputs["expand"] = *expand_arg;
        printer.outputs["chain"] = chain_json(chain);
        std::string line = int_str(s.d) + "/" + int_str(s.r) + " = [";
        for (std::size_t i = 0; i < chain.length(); ++i)
            line += (i ? "," : "") + int_str(chain.coeffs[i]);
        printer.human_lines.push_back(line + "]");
    } else if (dual_arg) {
        CyclicSingularity s = parse_fraction_arg(*dual_arg);
        CyclicSingularity t = dual(s);
        printer.inputs["dual"] = *dual_arg;
        printer.outputs["d"] = int_str(t.d);
        printer.outputs["r"] = int_str(t.r);
        printer.human_lines.push_back("dual of " + int_str(s.d) + "/" + int_str(s.r) + " is " +
                                      int_str(t.d) + "/" + int_str(t.r));
    }
    return printer.emit();
}

int run_verify_monodromy(bool human) {
    ReportPrinter printer;
    printer.command = "verify-monodromy";
    printer.human = human;
    SL2Matrix product = monodromy_product();
    printer.outputs["identity"] = product.is_identity();
    printer.outputs["product"] =
        Json::array({Json::array({int_str(product.a), int_str(product.b)}),
                     Json::array({int_str(product.c), int_str(product.d)})});
    printer.human_lines.push_back(std::string("monodromy product is ") +
                                  (product.is_identity() ? "the identity" : "NOT the identity"));
    return printer.emit();
}

void fill_bundle_outputs(ReportPrinter& printer, const SeifertBundle& bundle) {
    printer.outputs["b2"] = bundle.base.b2();
    printer.outputs["ell"] = int_str(bundle.ell());
    printer.outputs["mu"] = int_str(bundle.mu());
    printer.outputs["chern"] = rat_vec_json(chern_class(bundle));
    H1Report report = h1_vanishing_report(bundle);
    printer.outputs["h1"] = h1_report_json(report);
    if (report.all()) {
        FiniteAbelianGroup h2 = h2_total_space(bundle);
        printer.outputs["h2"] = group_to_json(h2);
        std::optional<bool> spin;
        try {
            spin = spin_check(bundle);
        } catch (const MissingW2Data&) {
        }
        printer.outputs["spin"] = spin ? Json(*spin) : Json(nullptr);
        if (spin && *spin) {
            SmaleBardenLabel label = smale_barden_label(h2, true);
            printer.outputs["label"] = label_json(label);
            printer.human_lines.push_back("H_2 = " + h2.to_string() + ", spin, label " +
                                          label.name());
        } else {
            printer.outputs["label"] = Json(nullptr);
            printer.human_lines.push_back("H_2 = " + h2.to_string());
        }
    } else {
        printer.outputs["h2"] = Json(nullptr);
        printer.outputs["spin"] = Json(nullptr);
        printer.outputs["label"] = Json(nullptr);
        printer.human_lines.push_back("H_1 does not vanish; see the condition report");
    }
}

int run_homology(const std::string& path, bool human) {
    ReportPrinter printer;
    printer.command = "homology";
    printer.human = human;
    printer.inputs["model"] = path;
    SeifertBundle bundle = load_orbifold(path);
    fill_bundle_outputs(printer, bundle);
    return printer.emit();
}

int run_classify(const std::string& path, bool human) {
    ReportPrinter printer;
    printer.command = "classify";
    printer.human = human;
    printer.inputs["model"] = path;
    SeifertBundle bundle = load_orbifold(path);
    FiniteAbelianGroup h2 = h2_total_space(bundle);
    bool spin = spin_check(bundle);
    SmaleBardenLabel label = smale_barden_label(h2, spin);
    printer.outputs["h2"] = group_to_json(h2);
    printer.outputs["spin"] = spin;
    printer.outputs["label"] = label_json(label);
    printer.human_lines.push_back("H_2 = " + h2.to_string());
    printer.human_lines.push_back("label " + label.name());
    return printer.emit();
}

int run_build_construction(long n, const std::optional<std::string>& emit_model, bool human) {
    if (n < 0) throw InvalidParams("N must be nonnegative");
    ReportPrinter printer;
    printer.command = "build-construction";
    printer.human = human;
    printer.inputs["N"] = n;
    ConstructionModel c = assemble_orbifold(static_cast<std::size_t>(n));

    Json scheme = Json::array();
    for (const auto& row : c.scheme.p) {
        Json r = Json::array();
        for (const Int& p : row) r.push_back(int_str(p));
        scheme.push_back(r);
    }
    printer.outputs["scheme"] = scheme;
    Json mults;
    Json mt = Json::array(), mtp = Json::array();
    for (const Int& m : c.mults.t) mt.push_back(int_str(m));
    for (const Int& m : c.mults.t_prime) mtp.push_back(int_str(m));
    mults["t"] = mt;
    mults["t_prime"] = mtp;
    mults["a"] = int_str(c.mults.a);
    printer.outputs["multiplicities"] = mults;
    printer.outputs["b0"] = int_str(c.b0);
    fill_bundle_outputs(printer, c.bundle);

    FiniteAbelianGroup pi1 =
        abelianized_orbifold_pi1(pi1_relation_matrix(c.scheme.n, c.scheme));
    FiniteAbelianGroup control =
        abelianized_orbifold_pi1(pi1_relation_matrix(c.scheme.n, c.scheme, {false}));
    Json pi1_json;
    Json gens = Json::array();
    for (const auto& g : pi1_generator_labels(c.scheme.n)) gens.push_back(g);
    pi1_json["generators"] = gens;
    pi1_json["abelianization"] = group_to_json(pi1);
    pi1_json["trivial"] = pi1.is_trivial();
    pi1_json["negative_control_trivial"] = control.is_trivial();
    printer.outputs["pi1"] = pi1_json;
    printer.human_lines.push_back("pi_1 abelianization " +
                                  std::string(pi1.is_trivial() ? "trivial" : pi1.to_string()));

    if (emit_model) {
        save_orbifold(c.bundle, *emit_model);
        printer.outputs["model_written"] = *emit_model;
    }
    return printer.emit();
}

int run_certify(const std::string& eps_text, long t0, long n_of_1, long g_a,
                const std::optional<std::string>& t5_text, long n_leq, bool human) {
    ReportPrinter printer;
    printer.command = "certify";
    printer.human = human;
    ConstantsPipelineInput input;
    input.eps = parse_rat(eps_text);
    input.t0 = t0;
    input.n_of_1 = n_of_1;
    input.g_a = g_a;
    if (t5_text) input.t5 = parse_rat(*t5_text);
    input.n_leq = n_leq;
    printer.inputs["eps"] = eps_text;
    printer.inputs["t0"] = t0;
    printer.inputs["n_of_1"] = n_of_1;
    printer.inputs["g_a"] = g_a;
    printer.inputs["t5"] = t5_text ? Json(*t5_text) : Json(nullptr);
    printer.inputs["n_leq"] = n_leq;

    ConstantsLedger ledger = constants_pipeline(input);
    Json out;
    out["T0"] = int_str(ledger.T0);
    out["T1"] = rat_str(ledger.T1);
    out["T2"] = rat_str(ledger.T2);
    out["T3"] = rat_str(ledger.T3);
    out["T4"] = rat_str(ledger.T4);
    out["T5"] = rat_str(ledger.T5);
    out["T6"] = rat_str(ledger.T6);
    out["T7_squared"] = rat_str(ledger.T7_squared);
    RatInterval t7 = ledger.T7.enclose(Rat(1, pow_int(10, 12)));
    out["T7_enclosure"] = Json::array({rat_str(t7.lo), rat_str(t7.hi)});
    RatInterval t8 = ledger.T8.enclose(Rat(1, pow_int(10, 12)));
    out["T8_enclosure"] = Json::array({rat_str(t8.lo), rat_str(t8.hi)});
    out["T8_ceil"] = int_str(ledger.T8.ceil());
    out["N0"] = int_str(ledger.N0);
    out["N1"] = int_str(ledger.N1);
    out["N_of_1"] = int_str(ledger.N_of_1);
    out["n0"] = int_str(ledger.n0);
    out["R"] = int_str(ledger.R);
    out["eps"] = rat_str(ledger.eps);
    out["N_leq"] = int_str(ledger.N_leq);
    out["N_gt"] = int_str(ledger.N_gt);
    out["N"] = int_str(ledger.N_final);
    Json audit = Json::array();
    for (const auto& entry : ledger.audit)
        audit.push_back(Json{{"key", entry.key},
                             {"formula", entry.formula},
                             {"value", entry.value},
                             {"provenance", entry.provenance}});
    out["audit"] = audit;
    printer.outputs = out;
    printer.human_lines.push_back("N = " + int_str(ledger.N_final) + "  (N_leq = " +
                                  int_str(ledger.N_leq) + ", N_gt = " + int_str(ledger.N_gt) +
                                  ")");
    for (const auto& entry : ledger.audit)
        printer.human_lines.push_back("  " + entry.key + " = " + entry.value + "  [" +
                                      entry.provenance + "] " + entry.formula);
    return printer.emit();
}

int run_diophantine(long q, long ymax, long xmax, bool human) {
    if (q < 1 || ymax < 0 || xmax < 0) throw InvalidParams("invalid diophantine range");
    ReportPrinter printer;
    printer.command = "diophantine";
    printer.human = human;
    printer.inputs["q"] = q;
    printer.inputs["ymax"] = ymax;
    printer.inputs["xmax_for_y0"] = xmax;

    auto brute = diophantine_solutions_brute(q, ymax, xmax);
    auto family = diophantine_family_set(q, ymax, xmax);
    Json table = Json::array();
    bool complete = true;
    for (long y = 0; y <= ymax; ++y) {
        std::size_t count = 0, hit = 0;
        for (const auto& t : brute) {
            if (t.y != y) continue;
            ++count;
            if (family.count(t)) ++hit;
        }
        complete = complete && (count == hit);
        table.push_back(Json{{"y", y}, {"brute_force", count}, {"family", hit}});
    }
    printer.outputs["table"] = table;
    printer.outputs["brute_force_total"] = brute.size();
    printer.outputs["complete"] = complete;
    printer.human_lines.push_back("x^2 + " + std::to_string(8 * q) + " y^2 = z^2: " +
                                  std::to_string(brute.size()) + " solutions, family " +
                                  (complete ? "reaches all of them" : "MISSES some"));
    return printer.emit();
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"exact invariants of Seifert circle bundles over cyclic 4-orbifolds"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format: json or human")
        ->check(CLI::IsMember({"json", "human"}));

    auto* hjcf = app.add_subcommand("hjcf", "continued-fraction calculus for chains");
    std::string eval_arg, expand_arg, dual_arg;
    auto* eval_opt = hjcf->add_option("--eval", eval_arg, "evaluate a chain b1,b2,...");
    auto* expand_opt = hjcf->add_option("--expand", expand_arg, "expand d/r into a chain");
    auto* dual_opt = hjcf->add_option("--dual", dual_arg, "dual singularity of d/r");

    auto* monodromy =
        app.add_subcommand("verify-monodromy", "check the elliptic fibration monodromy relation");

    auto* homology =
        app.add_subcommand("homology", "homology of the Seifert bundle over a model");
    std::string homology_path;
    homology->add_option("--model", homology_path, "orbifold JSON file")->required();

    auto* classify = app.add_subcommand("classify", "classification label of the total space");
    std::string classify_path;
    classify->add_option("--model", classify_path, "orbifold JSON file")->required();

    auto* build = app.add_subcommand("build-construction",
                                     "assemble the orbifold with the prime scheme at level N");
    long build_n = 0;
    build->add_option("--N", build_n, "scheme size parameter")->required();
    std::string emit_model;
    auto* emit_opt = build->add_option("--emit-model", emit_model, "write the model JSON here");

    auto* certify = app.add_subcommand("certify", "universal constants ledger");
    std::string eps_text = "1/10";
    long t0 = 662, n_of_1 = 0, g_a = 0, n_leq = 0;
    std::string t5_text;
    certify->add_option("--eps", eps_text, "ball radius parameter (rational p/q)");
    certify->add_option("--t0", t0, "singular point bound");
    certify->add_option("--n-of-1", n_of_1, "N(1); 0 computes the default from T0");
    certify->add_option("--g-a", g_a, "genus bound g_a; 0 uses N0^2 + 1");
    auto* t5_opt = certify->add_option("--t5", t5_text, "override T5 (rational)");
    certify->add_option("--n-leq", n_leq, "supplied N_leq (no closed form exists)");

    auto* dioph = app.add_subcommand("diophantine", "family vs brute force for x^2+8qy^2=z^2");
    long q = 1, ymax = 40, xmax = 100;
    dioph->add_option("--q", q, "coefficient q")->required();
    dioph->add_option("--ymax", ymax, "largest |y| to enumerate");
    dioph->add_option("--xmax", xmax, "largest x listed for y = 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    bool human = format == "human";
    try {
        if (hjcf->parsed()) {
            int given = int(bool(*eval_opt)) + int(bool(*expand_opt)) + int(bool(*dual_opt));
            if (given != 1) {
                std::cerr << "hjcf needs exactly one of --eval, --expand, --dual\n";
                return 2;
            }
            return run_hjcf(*eval_opt ? std::optional(eval_arg) : std::nullopt,
                            *expand_opt ? std::optional(expand_arg) : std::nullopt,
                            *dual_opt ? std::optional(dual_arg) : std::nullopt, human);
        }
        if (monodromy->parsed()) return run_verify_monodromy(human);
        if (homology->parsed()) return run_homology(homology_path, human);
        if (classify->parsed()) return run_classify(classify_path, human);
        if (build->parsed())
            return run_build_construction(
                build_n, *emit_opt ? std::optional(emit_model) : std::nullopt, human);
        if (certify->parsed()) {
            if (n_of_1 == 0) {
                // Default N(1): the (N0 - 3)-rd prime above N0 = 4 T0 + 1,
                // the least possible supremum of the disjoint index sets.
                Int n0 = 4 * Int(t0) + 1;
                Int p = n0;
                for (Int i = 0; i < n0 - 3; ++i) p = next_prime(p + 1);
                if (!p.fits_slong_p()) throw InvalidParams("computed N(1) out of range");
                n_of_1 = p.get_si();
            }
            if (g_a == 0) {
                Int n0 = 4 * Int(t0) + 1;
                Int g = n0 * n0 + 1;
                if (!g.fits_slong_p()) throw InvalidParams("computed g_a out of range");
                g_a = g.get_si();
            }
            return run_certify(eps_text, t0, n_of_1, g_a,
                               *t5_opt ? std::optional(t5_text) : std::nullopt, n_leq, human);
        }
        if (dioph->parsed()) return run_diophantine(q, ymax, xmax, human);
        return emit_error(human, "ParseError", "no subcommand given");
    } catch (const Error& e) {
        return emit_error(human, e.kind(), e.what());
    } catch (const std::exception& e) {
        return emit_error(human, "InternalError", e.what());
    }
}

}  // namespace orbtop::cli
