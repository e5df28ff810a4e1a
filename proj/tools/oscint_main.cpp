// Copyright (c) 2026 the oscint authors.
// SPDX-License-Identifier: Apache-2.0
//
// oscint: evaluate singular oscillatory integrals with polynomial phase,
// exact sublevel-set measures, bound formulas, proof certificates, and the
// growth/extremal experiment harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "oscint/bounds.hpp"
#include "oscint/certify.hpp"
#include "oscint/errors.hpp"
#include "oscint/harness.hpp"
#include "oscint/kernel.hpp"
#include "oscint/oscquad.hpp"
#include "oscint/roots.hpp"
#include "oscint/sublevel.hpp"

using nlohmann::json;
using namespace oscint;

namespace {

struct GlobalOpts {
    std::string out;
    std::string format = "json";
    std::string config;
    double tol = 0.0;
    int threads = 0;
    uint64_t seed = 1;
};

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    in >> j;
    return j;
}

template <class T>
void from_config(const json& cfg, const CLI::App* cmd, const std::string& flag,
                 const std::string& key, T& value) {
    if (cmd->count("--" + flag) == 0 && cfg.contains(key)) value = cfg[key].get<T>();
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(g.out, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + g.out);
        out << text;
    }
}

MultiPoly parse_mpoly(const std::string& arg, int dim) {
    std::string text;
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::runtime_error("cannot open polynomial file: " + arg.substr(1));
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        text = arg;
        for (char& c : text)
            if (c == ';') c = '\n';
    }
    return MultiPoly::parse(text, dim);
}

json pv_record(const std::string& poly, const std::string& kernel, int n, const PvEstimate& e) {
    json ladder = json::array();
    for (double r : e.radii_used) ladder.push_back(r);
    return json{{"poly", poly},
                {"kernel", kernel},
                {"n", n},
                {"value_re", e.value.real()},
                {"value_im", e.value.imag()},
                {"abs_err", e.abs_error_estimate},
                {"ladder", ladder},
                {"converged", e.converged}};
}

json certificate_json(const Certificate& c) {
    json levels = json::array();
    for (const CertificateLevel& lv : c.levels) {
        levels.push_back(json{{"level_degree", lv.level_degree},
                              {"skipped", lv.skipped},
                              {"scale", lv.scale},
                              {"j0", lv.j0},
                              {"i1_tail", lv.i1_tail},
                              {"vdc_term", lv.vdc_term},
                              {"sublevel_term", lv.sublevel_term},
                              {"log_expr_term", lv.log_expr_term},
                              {"polweight_part", lv.polweight_part},
                              {"llogl_part", lv.llogl_part},
                              {"young_max_defect", lv.young_max_defect},
                              {"level_sum", lv.sum()}});
    }
    json j{{"dim", c.dim},
           {"source_degree", c.source_degree},
           {"padded_degree", c.padded_degree},
           {"levels", levels},
           {"base_c1", c.base_c1},
           {"total_bracket", c.total_bracket}};
    if (c.measured_valid) {
        j["measured_re"] = c.measured.real();
        j["measured_im"] = c.measured.imag();
        j["measured_abs"] = c.measured_abs;
        j["ratio"] = c.ratio;
    }
    return j;
}

void print_certificate_table(const Certificate& c) {
    std::printf("degree %d (padded to %d), dim %d\n", c.source_degree, c.padded_degree, c.dim);
    std::printf("%8s %8s %10s %10s %10s %10s %10s %10s\n", "level", "scale", "i1", "vdc",
                "sublevel", "polweight", "llogl", "sum");
    for (const CertificateLevel& lv : c.levels) {
        if (lv.skipped) {
            std::printf("%8d %8s %10s\n", lv.level_degree, "-", "(skipped)");
            continue;
        }
        std::printf("%8d %8.3g %10.4g %10.4g %10.4g %10.4g %10.4g %10.4g\n", lv.level_degree,
                    lv.scale, lv.i1_tail, lv.vdc_term, lv.sublevel_term, lv.polweight_part,
                    lv.llogl_part, lv.sum());
    }
    std::printf("%8s %8s %10.4g\n", "base", "", c.base_c1);
    std::printf("total bracket: %.6g\n", c.total_bracket);
    if (c.measured_valid)
        std::printf("measured |In|: %.6g   ratio: %.6g\n", c.measured_abs, c.ratio);
}

int run(int argc, char** argv) {
    CLI::App app{"singular oscillatory integrals with polynomial phase"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--out", g.out, "write the result to this file instead of stdout");
    app.add_option("--format", g.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--tol", g.tol, "override the main tolerance of the subcommand");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)");
    app.add_option("--seed", g.seed, "seed for randomized commands");
    app.add_option("--config", g.config, "JSON file with default parameter values");

    // pv1d
    auto* pv1d_cmd = app.add_subcommand("pv1d", "p.v. integral of e^{iP(x)}/x over R");
    std::string pv1d_poly = "[0,1]";
    pv1d_cmd->add_option("--poly", pv1d_poly, "coefficients as JSON array, constant first");

    // pvn
    auto* pvn_cmd = app.add_subcommand("pvn", "I_n(P) with an angular kernel");
    std::string pvn_poly, pvn_kernel = "sign", pvn_method = "direct";
    int pvn_n = 1;
    pvn_cmd->add_option("--mpoly", pvn_poly, "terms 'coef e1 .. en' separated by ';' or @file")
        ->required();
    pvn_cmd->add_option("--n", pvn_n, "dimension 1..3");
    pvn_cmd->add_option("--kernel", pvn_kernel, "kernel id");
    pvn_cmd->add_option("--method", pvn_method, "direct|odd")
        ->check(CLI::IsMember({"direct", "odd"}));

    // sublevel
    auto* sub_cmd = app.add_subcommand("sublevel", "exact sublevel set and log measure");
    std::string sub_poly;
    double sub_alpha = 1.0, sub_R = 0.0;
    int sub_sweep = 0, sub_maxdeg = 32;
    sub_cmd->add_option("--poly", sub_poly, "coefficients as JSON array");
    sub_cmd->add_option("--alpha", sub_alpha, "level");
    sub_cmd->add_option("--R", sub_R, "right endpoint (0 = unbounded)");
    sub_cmd->add_option("--sweep", sub_sweep, "emit a CSV suite of this many cases");
    sub_cmd->add_option("--max-degree", sub_maxdeg, "sweep degree cap");

    // bound
    auto* bound_cmd = app.add_subcommand("bound", "evaluate a bound bracket");
    std::string bound_formula = "log_lemma";
    double b_alpha = 1.0, b_M = 1.0, b_R = 2.0, b_q = 2.0, b_lq = 1.0;
    int b_d = 1, b_r = 0, b_k = 1, b_n = 1;
    bound_cmd->add_option("--formula", bound_formula,
                          "log_lemma|vinogradov|genphase|carbery_wright");
    bound_cmd->add_option("--alpha", b_alpha, "level");
    bound_cmd->add_option("--M", b_M, "coefficient / derivative bound");
    bound_cmd->add_option("--R", b_R, "interval endpoint");
    bound_cmd->add_option("--q", b_q, "integrability index (inf allowed)");
    bound_cmd->add_option("--lq", b_lq, "L^q norm value");
    bound_cmd->add_option("--d", b_d, "degree");
    bound_cmd->add_option("--r", b_r, "tail index");
    bound_cmd->add_option("--k", b_k, "derivative order");
    bound_cmd->add_option("--n", b_n, "dimension");

    // vdc
    auto* vdc_cmd = app.add_subcommand("vdc", "oscillation decay check");
    std::string vdc_poly;
    double vdc_lambda = 10.0, vdc_a = 0.0, vdc_b = 1.0;
    vdc_cmd->add_option("--phase", vdc_poly, "phase coefficients as JSON array")->required();
    vdc_cmd->add_option("--lambda", vdc_lambda, "frequency");
    vdc_cmd->add_option("--a", vdc_a, "left endpoint");
    vdc_cmd->add_option("--b", vdc_b, "right endpoint");

    // polweight
    auto* pw_cmd = app.add_subcommand("polweight", "sphere integral of (sup|P|/|P|)^(1/2k)");
    std::string pw_poly;
    int pw_n = 2;
    pw_cmd->add_option("--mpoly", pw_poly, "homogeneous polynomial")->required();
    pw_cmd->add_option("--n", pw_n, "dimension 1..3");

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "degree-halving proof certificate");
    std::string cert_poly, cert_kernel = "sign";
    int cert_n = 1, cert_measure = 1;
    cert_cmd->add_option("--mpoly", cert_poly, "polynomial")->required();
    cert_cmd->add_option("--n", cert_n, "dimension");
    cert_cmd->add_option("--kernel", cert_kernel, "kernel id");
    cert_cmd->add_option("--measure", cert_measure, "also evaluate |In| (0/1)");

    // search
    auto* search_cmd = app.add_subcommand("search", "extremal coefficient search");
    int s_d = 3, s_n = 1, s_budget = 200;
    std::string s_kernel = "sign";
    search_cmd->add_option("--d", s_d, "degree");
    search_cmd->add_option("--n", s_n, "dimension");
    search_cmd->add_option("--kernel", s_kernel, "kernel id");
    search_cmd->add_option("--budget", s_budget, "objective evaluation budget");

    // growth
    auto* growth_cmd = app.add_subcommand("growth", "sup |In| versus degree");
    std::string g_degrees = "2,4,8", g_kernel = "sign";
    int g_n = 1, g_samples = 50, g_budget = 0;
    growth_cmd->add_option("--degrees", g_degrees, "comma-separated degree list");
    growth_cmd->add_option("--n", g_n, "dimension");
    growth_cmd->add_option("--kernel", g_kernel, "kernel id");
    growth_cmd->add_option("--samples", g_samples, "random samples per degree");
    growth_cmd->add_option("--budget", g_budget, "search budget per degree");

    CLI11_PARSE(app, argc, argv);
    const json cfg = load_config(g.config);
    if (app.count("--seed") == 0 && cfg.contains("seed")) g.seed = cfg["seed"].get<uint64_t>();
    if (app.count("--threads") == 0 && cfg.contains("threads"))
        g.threads = cfg["threads"].get<int>();

    if (pv1d_cmd->parsed()) {
        from_config(cfg, pv1d_cmd, "poly", "poly", pv1d_poly);
        const Poly p = Poly::from_json(pv1d_poly);
        const PvEstimate e = pv_1d(p, g.tol > 0.0 ? g.tol : 1e-7);
        emit(g, pv_record(p.to_json(), "1/x", 1, e).dump(2));
        return 0;
    }
    if (pvn_cmd->parsed()) {
        from_config(cfg, pvn_cmd, "kernel", "kernel", pvn_kernel);
        from_config(cfg, pvn_cmd, "n", "n", pvn_n);
        const MultiPoly p = parse_mpoly(pvn_poly, pvn_n);
        const KernelSpec omega = KernelSpec::from_id(pvn_kernel, pvn_n);
        InOptions opt;
        opt.threads = g.threads;
        if (g.tol > 0.0) opt.sphere_tol_factor = g.tol;
        const PvEstimate e =
            pvn_method == "odd" ? remark_odd(p, omega, opt) : In(p, omega, opt);
        emit(g, pv_record(p.to_text(), pvn_kernel, pvn_n, e).dump(2));
        return 0;
    }
    if (sub_cmd->parsed()) {
        if (sub_sweep > 0) {
            const auto cases = sublevel_cases(sub_sweep, sub_maxdeg, g.seed);
            std::vector<SublevelRow> rows;
            rows.reserve(cases.size());
            for (const SublevelCase& c : cases) rows.push_back(sublevel_row(c));
            emit(g, sublevel_csv(rows));
            return 0;
        }
        if (sub_poly.empty()) throw CLI::ValidationError("--poly is required without --sweep");
        const Poly p = Poly::from_json(sub_poly);
        const Domain dom = sub_R > 0.0 ? Domain::interval(1.0, sub_R) : Domain::ray();
        const IntervalUnion e = sublevel_set(p, sub_alpha, dom);
        json intervals = json::array();
        for (const auto& iv : e.intervals()) intervals.push_back(json::array({iv.lo, iv.hi}));
        json out{{"poly", p.to_json()},
                 {"alpha", sub_alpha},
                 {"intervals", intervals},
                 {"log_measure", e.log_measure()}};
        const double M = p.top_half_max();
        if (M > 0.0) {
            const BoundBracket b = log_lemma_bracket(sub_alpha, M, p.degree());
            out["M"] = M;
            out["bracket"] = b.value;
            out["branch"] = to_string(b.branch);
            out["ratio"] = b.value > 0.0 ? e.log_measure() / b.value : 0.0;
        }
        emit(g, out.dump(2));
        return 0;
    }
    if (bound_cmd->parsed()) {
        BoundBracket b;
        if (bound_formula == "log_lemma")
            b = log_lemma_bracket(b_alpha, b_M, b_d);
        else if (bound_formula == "vinogradov")
            b = vinogradov_bracket(b_alpha, b_M, b_r, b_d, b_R);
        else if (bound_formula == "genphase")
            b = genphase_bracket(b_k, b_M, b_alpha);
        else if (bound_formula == "carbery_wright")
            b = carbery_wright_bracket(b_q, b_d, b_n, b_alpha, b_lq);
        else
            throw CLI::ValidationError("unknown formula: " + bound_formula);
        emit(g, json{{"formula", b.formula},
                     {"value", b.value},
                     {"branch", to_string(b.branch)}}
                    .dump(2));
        return 0;
    }
    if (vdc_cmd->parsed()) {
        const Poly phase = Poly::from_json(vdc_poly);
        const VdcReport r = vdc_check(phase, vdc_lambda, vdc_a, vdc_b);
        emit(g, json{{"lambda", r.lambda},
                     {"integral_modulus", r.integral_modulus},
                     {"N", r.monotonicity_changes},
                     {"ratio", r.ratio}}
                    .dump(2));
        return 0;
    }
    if (pw_cmd->parsed()) {
        const MultiPoly p = parse_mpoly(pw_poly, pw_n);
        emit(g, json{{"value", polweight_integral(p, pw_n)}}.dump(2));
        return 0;
    }
    if (cert_cmd->parsed()) {
        const MultiPoly p = parse_mpoly(cert_poly, cert_n);
        const KernelSpec omega = KernelSpec::from_id(cert_kernel, cert_n);
        CertificateOptions opt;
        opt.measure = cert_measure != 0;
        opt.threads = g.threads;
        const Certificate c = certificate(p, omega, opt);
        if (g.out.empty()) print_certificate_table(c);
        emit(g, certificate_json(c).dump(2));
        return 0;
    }
    if (search_cmd->parsed()) {
        const KernelSpec omega = KernelSpec::from_id(s_kernel, s_n);
        const SearchResult r = search_extremal(s_d, s_n, omega, s_budget, g.seed, {}, g.threads);
        emit(g, json{{"best", r.best.to_text()},
                     {"value", r.value},
                     {"evaluations", r.evaluations}}
                    .dump(2));
        return 0;
    }
    if (growth_cmd->parsed()) {
        from_config(cfg, growth_cmd, "degrees", "degrees", g_degrees);
        from_config(cfg, growth_cmd, "samples", "samples", g_samples);
        from_config(cfg, growth_cmd, "kernel", "kernel", g_kernel);
        from_config(cfg, growth_cmd, "n", "n", g_n);
        std::vector<int> degrees;
        std::istringstream ds(g_degrees);
        std::string tok;
        while (std::getline(ds, tok, ',')) degrees.push_back(std::stoi(tok));
        const KernelSpec omega = KernelSpec::from_id(g_kernel, g_n);
        GrowthFit fit;
        const auto rows = growth_study(degrees, g_n, omega, g_samples, g.seed, g_budget,
                                       g.threads, &fit);
        if (g.format == "csv") {
            emit(g, growth_csv(rows));
        } else {
            json jr = json::array();
            for (const GrowthRow& r : rows)
                jr.push_back(json{{"d", r.d},
                                  {"n", r.n},
                                  {"kernel_id", r.kernel_id},
                                  {"samples", r.samples},
                                  {"sup_abs_integral", r.sup_abs_integral},
                                  {"empirical_c", r.empirical_c}});
            emit(g, json{{"rows", jr},
                         {"fit", json{{"slope", fit.slope},
                                      {"intercept", fit.intercept},
                                      {"r2", fit.r2},
                                      {"power_slope", fit.power_slope},
                                      {"power_r2", fit.power_r2}}}}
                        .dump(2));
        }
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
