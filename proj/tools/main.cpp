// Command-line front end: every computation as a subcommand with CSV or
// JSON output. Exit codes: 0 success, 1 usage, 2 bad input, 3 failed
// numerical self-check.

#include "acceptance.hpp"

#include "sschur/errors.hpp"
#include "sschur/fermion_kernel.hpp"
#include "sschur/higher_airy.hpp"
#include "sschur/limit_shape.hpp"
#include "sschur/miwa.hpp"
#include "sschur/parallel.hpp"
#include "sschur/scaling_lab.hpp"
#include "sschur/schur_q.hpp"
#include "sschur/skew_linalg.hpp"
#include "sschur/strict_partition.hpp"
#include "sschur/tracy_widom.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sschur;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw validation_error("cannot open output file " + out_path);
    file << content;
}

std::string join_parts(const std::vector<int>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(parts[i]);
    }
    return s;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        values.push_back(std::stod(item, &pos));
        if (pos != item.size()) throw validation_error("bad number in list: " + item);
    }
    return values;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (double v : parse_double_list(text)) {
        const int i = static_cast<int>(v);
        if (v != i) throw validation_error("expected integers in list");
        values.push_back(i);
    }
    return values;
}

// "2..6" -> {2,3,4,5,6}; plain comma lists also accepted
std::vector<int> parse_interval(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return parse_int_list(text);
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (hi < lo) throw validation_error("empty interval " + text);
    std::vector<int> values;
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
}

// shared parameter-source flags: exactly one of --p / --t-file
struct ParamSource {
    int p = 0;
    std::string t_file;

    void attach(CLI::App* cmd, bool required = true) {
        auto* popt = cmd->add_option("--p", p, "even multicritical degree (minimal family)");
        auto* fopt = cmd->add_option("--t-file", t_file, "JSON file with the coefficient map");
        popt->excludes(fopt);
        fopt->excludes(popt);
        if (required) {
            // one of the two must be present; enforced at resolve time for
            // a clean exit code
        }
    }

    MiwaParams resolve() const {
        if (p != 0 && !t_file.empty())
            throw validation_error("give exactly one of --p and --t-file");
        if (p != 0) return solve_minimal_multicritical(p);
        if (!t_file.empty()) {
            std::ifstream in(t_file);
            if (!in) throw validation_error("cannot read " + t_file);
            std::stringstream ss;
            ss << in.rdbuf();
            return MiwaParams::from_json(ss.str());
        }
        throw validation_error("need --p or --t-file");
    }
};

struct Cli {
    std::string out;
    std::string format = "csv";
    double tol = 0.0;
    std::uint64_t seed = 1;
};

int run(int argc, char** argv) {
    CLI::App app{"shifted Schur measure toolkit"};
    app.require_subcommand(1);
    Cli cli;

    // ---- multicritical ----------------------------------------------------
    auto* cmd_multi = app.add_subcommand("multicritical", "solve the minimal parameter family");
    int multi_p = 2;
    cmd_multi->add_option("--p", multi_p, "even degree")->required();
    cmd_multi->add_option("--out", cli.out);
    cmd_multi->callback([&] {
        const MiwaParams params = solve_minimal_multicritical(multi_p);
        emit(cli.out, params.to_json() + "\n");
    });

    // ---- weights ----------------------------------------------------------
    auto* cmd_weights = app.add_subcommand("weights", "measure weights up to a size cap");
    ParamSource weights_src;
    weights_src.attach(cmd_weights);
    long long weights_max = 12;
    cmd_weights->add_option("--max-size", weights_max);
    cmd_weights->add_option("--out", cli.out);
    cmd_weights->add_option("--format", cli.format)->check(CLI::IsMember({"csv", "json"}));
    cmd_weights->callback([&] {
        const MiwaParams params = weights_src.resolve();
        const QSeries series(params, static_cast<int>(weights_max) + 2);
        const double z = partition_function(params);
        if (cli.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for_each_strict(weights_max, [&](const StrictPartition& lambda) {
                const double w = measure_weight(lambda, series);
                rows.push_back({{"partition", lambda.parts()},
                                {"length", lambda.length()},
                                {"size", lambda.size()},
                                {"Q", schur_q(lambda, series)},
                                {"weight", w},
                                {"probability", w / z}});
            });
            emit(cli.out, rows.dump(2) + "\n");
            return;
        }
        std::string csv = "partition,length,size,Q,weight,probability\n";
        for_each_strict(weights_max, [&](const StrictPartition& lambda) {
            const double q = schur_q(lambda, series);
            const double w = measure_weight(lambda, series);
            csv += join_parts(lambda.parts()) + "," + std::to_string(lambda.length()) + "," +
                   std::to_string(lambda.size()) + "," + fmt17(q) + "," + fmt17(w) + "," +
                   fmt17(w / z) + "\n";
        });
        emit(cli.out, csv);
    });

    // ---- jtable -----------------------------------------------------------
    auto* cmd_jtable = app.add_subcommand("jtable", "Fourier coefficients of the wave function");
    ParamSource jtable_src;
    jtable_src.attach(cmd_jtable);
    cmd_jtable->add_option("--out", cli.out);
    cmd_jtable->callback([&] {
        const JTable table(jtable_src.resolve());
        std::string csv = "m,J\n";
        for (long long m = 0; m <= table.max_index(); ++m)
            csv += std::to_string(m) + "," + fmt17(table.j(m)) + "\n";
        emit(cli.out, csv);
    });

    // ---- kernel -----------------------------------------------------------
    auto* cmd_kernel = app.add_subcommand("kernel", "correlation kernel at site pairs");
    ParamSource kernel_src;
    kernel_src.attach(cmd_kernel);
    std::string kernel_points;
    cmd_kernel->add_option("--points", kernel_points, "flattened pairs a1,b1,a2,b2,...")
        ->required();
    cmd_kernel->add_option("--tol", cli.tol, "series truncation floor");
    cmd_kernel->add_option("--out", cli.out);
    cmd_kernel->callback([&] {
        const std::vector<int> flat = parse_int_list(kernel_points);
        if (flat.size() % 2 != 0) throw validation_error("--points needs pairs");
        const JTable table(kernel_src.resolve());
        const double tol = cli.tol > 0.0 ? cli.tol : table.floor_tol();
        std::string csv = "a,b,K,truncation_bound\n";
        for (std::size_t i = 0; i < flat.size(); i += 2) {
            const KernelValue kv = kernel_K(table, flat[i], flat[i + 1], tol);
            csv += std::to_string(flat[i]) + "," + std::to_string(flat[i + 1]) + "," +
                   fmt17(kv.value) + "," + fmt17(kv.bound) + "\n";
        }
        emit(cli.out, csv);
    });

    // ---- correlation --------------------------------------------------------
    auto* cmd_corr = app.add_subcommand("correlation", "occupation probability of a site set");
    ParamSource corr_src;
    corr_src.attach(cmd_corr);
    std::string corr_points;
    cmd_corr->add_option("--points", corr_points, "comma list of sites")->required();
    cmd_corr->add_option("--out", cli.out);
    cmd_corr->callback([&] {
        const std::vector<int> sites = parse_int_list(corr_points);
        const CorrelationResult r = correlation(sites, corr_src.resolve());
        std::string csv = "points,value,error_bound\n";
        csv += join_parts(sites) + "," + fmt17(r.value) + "," + fmt17(r.bound) + "\n";
        emit(cli.out, csv);
    });

    // ---- gap ----------------------------------------------------------------
    auto* cmd_gap = app.add_subcommand("gap", "probability that an interval is empty");
    ParamSource gap_src;
    gap_src.attach(cmd_gap);
    std::string gap_interval;
    cmd_gap->add_option("--interval", gap_interval, "lo..hi or comma list")->required();
    cmd_gap->add_option("--out", cli.out);
    cmd_gap->callback([&] {
        const std::vector<int> sites = parse_interval(gap_interval);
        const JTable table(gap_src.resolve());
        const double value = gap_probability(sites, table);
        // route agreement gives a computable error estimate when feasible
        double bound;
        if (sites.size() <= 12)
            bound = std::abs(value - gap_probability_block_pfaffian(sites, table)) + 1e-14;
        else
            bound = static_cast<double>(sites.size()) * sites.size() * table.floor_tol();
        std::string csv = "interval,value,error_bound\n";
        csv += gap_interval + "," + fmt17(value) + "," + fmt17(bound) + "\n";
        emit(cli.out, csv);
    });

    // ---- limit-shape ---------------------------------------------------------
    auto* cmd_shape = app.add_subcommand("limit-shape", "limit shape and density curve");
    ParamSource shape_src;
    shape_src.attach(cmd_shape);
    int shape_grid = 200;
    double shape_xmax = 0.0;
    cmd_shape->add_option("--grid", shape_grid);
    cmd_shape->add_option("--xmax", shape_xmax);
    cmd_shape->add_option("--out", cli.out);
    cmd_shape->callback([&] {
        const MiwaParams params = shape_src.resolve();
        const double xmax = shape_xmax > 0.0 ? shape_xmax : params.b() + 1.0;
        const ShapeCurve curve = shape_curve(params, shape_grid, xmax);
        std::string csv = "x,omega,density\n";
        for (std::size_t i = 0; i < curve.x.size(); ++i)
            csv += fmt17(curve.x[i]) + "," + fmt17(curve.omega[i]) + "," +
                   fmt17(curve.density[i]) + "\n";
        emit(cli.out, csv);
    });

    // ---- profile ---------------------------------------------------------------
    auto* cmd_profile = app.add_subcommand("profile", "expected profile at finite mesh");
    ParamSource profile_src;
    profile_src.attach(cmd_profile);
    double profile_eps = 0.125;
    int profile_grid = 50;
    double profile_xmax = 0.0;
    cmd_profile->add_option("--epsilon", profile_eps)->required();
    cmd_profile->add_option("--grid", profile_grid);
    cmd_profile->add_option("--xmax", profile_xmax);
    cmd_profile->add_option("--tol", cli.tol);
    cmd_profile->add_option("--out", cli.out);
    cmd_profile->callback([&] {
        const MiwaParams params = profile_src.resolve();
        const double xmax = profile_xmax > 0.0 ? profile_xmax : params.b() + 1.0;
        const double tol = cli.tol > 0.0 ? cli.tol : 1e-12;
        std::vector<std::string> rows(static_cast<std::size_t>(profile_grid) + 1);
        parallel_for(rows.size(), [&](std::size_t i) {
            const double x = xmax * static_cast<double>(i) / profile_grid;
            rows[i] = fmt17(x) + "," + fmt17(expected_profile(params, profile_eps, x, tol)) +
                      "," + fmt17(limit_shape(params, x)) + "\n";
        });
        std::string csv = "x,expected_profile,omega\n";
        for (const std::string& row : rows) csv += row;
        emit(cli.out, csv);
    });

    // ---- airy -----------------------------------------------------------------
    auto* cmd_airy = app.add_subcommand("airy", "degree-p Airy function on a grid");
    int airy_p_deg = 2;
    double airy_xmin = -6.0, airy_xmax = 4.0, airy_step = 0.05;
    cmd_airy->add_option("--p", airy_p_deg)->required();
    cmd_airy->add_option("--xmin", airy_xmin);
    cmd_airy->add_option("--xmax", airy_xmax);
    cmd_airy->add_option("--step", airy_step);
    cmd_airy->add_option("--out", cli.out);
    cmd_airy->callback([&] {
        if (airy_step <= 0.0) throw validation_error("--step must be positive");
        const AiryEvaluator eval(airy_p_deg);
        const std::size_t count =
            static_cast<std::size_t>(std::floor((airy_xmax - airy_xmin) / airy_step + 1e-9)) + 1;
        std::vector<std::string> rows(count);
        parallel_for(count, [&](std::size_t i) {
            const double x = airy_xmin + airy_step * static_cast<double>(i);
            rows[i] = fmt17(x) + "," + fmt17(eval(x)) + "," + fmt17(eval.derivative(x, 1)) + "\n";
        });
        std::string csv = "x,Ai_p,dAi_p\n";
        for (const std::string& row : rows) csv += row;
        emit(cli.out, csv);
    });

    // ---- tw ---------------------------------------------------------------------
    auto* cmd_tw = app.add_subcommand("tw", "limiting distribution of the largest part");
    int tw_p = 2;
    double tw_smin = -6.0, tw_smax = 4.0, tw_step = 0.1;
    cmd_tw->add_option("--p", tw_p)->required();
    cmd_tw->add_option("--smin", tw_smin);
    cmd_tw->add_option("--smax", tw_smax);
    cmd_tw->add_option("--step", tw_step);
    cmd_tw->add_option("--out", cli.out);
    cmd_tw->callback([&] {
        if (tw_step <= 0.0) throw validation_error("--step must be positive");
        const std::size_t count =
            static_cast<std::size_t>(std::floor((tw_smax - tw_smin) / tw_step + 1e-9)) + 1;
        std::vector<std::string> rows(count);
        parallel_for(count, [&](std::size_t i) {
            const double s = tw_smin + tw_step * static_cast<double>(i);
            rows[i] = fmt17(s) + "," + fmt17(tw_cdf(tw_p, s)) + "\n";
        });
        std::string csv = "s,F_p\n";
        for (const std::string& row : rows) csv += row;
        emit(cli.out, csv);
    });

    // ---- edge-converge -------------------------------------------------------------
    auto* cmd_edge = app.add_subcommand("edge-converge", "finite-mesh values against their limits");
    int edge_p = 2;
    std::string edge_target = "j";
    std::string edge_eps = "0.25,0.16666666666666666,0.125,0.1";
    std::string edge_args = "-1,0,1";
    cmd_edge->add_option("--p", edge_p)->required();
    cmd_edge->add_option("--target", edge_target)
        ->check(CLI::IsMember({"j", "kernel", "pfdet", "tw"}));
    cmd_edge->add_option("--eps", edge_eps);
    cmd_edge->add_option("--args", edge_args);
    cmd_edge->add_option("--out", cli.out);
    cmd_edge->callback([&] {
        const std::vector<double> eps = parse_double_list(edge_eps);
        const std::vector<double> args = parse_double_list(edge_args);
        ScalingReport report;
        if (edge_target == "j")
            report = edge_j_report(edge_p, eps, args);
        else if (edge_target == "kernel")
            report = edge_kernel_report(edge_p, eps, args);
        else if (edge_target == "pfdet")
            report = pfdet_report(edge_p, eps, args);
        else
            report = largest_part_report(edge_p, eps, args);
        std::string csv = "target,p,epsilon,args,finite_value,limit_value,abs_error\n";
        for (const ScalingRow& row : report.rows) {
            std::string arg_text;
            for (std::size_t i = 0; i < row.args.size(); ++i) {
                if (i) arg_text += ';';
                arg_text += fmt17(row.args[i]);
            }
            csv += report.target + "," + std::to_string(report.p) + "," + fmt17(row.epsilon) +
                   "," + arg_text + "," + fmt17(row.finite_value) + "," +
                   fmt17(row.limit_value) + "," + fmt17(row.abs_error) + "\n";
        }
        emit(cli.out, csv);
    });

    // ---- sample ----------------------------------------------------------------------
    auto* cmd_sample = app.add_subcommand("sample", "draw partitions from the measure");
    ParamSource sample_src;
    sample_src.attach(cmd_sample);
    long long sample_max = 30;
    int sample_count = 10;
    cmd_sample->add_option("--max-size", sample_max);
    cmd_sample->add_option("--count", sample_count);
    cmd_sample->add_option("--seed", cli.seed);
    cmd_sample->add_option("--out", cli.out);
    cmd_sample->add_option("--format", cli.format)->check(CLI::IsMember({"csv", "json"}));
    cmd_sample->callback([&] {
        const std::vector<StrictPartition> draws =
            sample_partitions(sample_src.resolve(), sample_max, sample_count, cli.seed);
        if (cli.format == "json") {
            nlohmann::json rows = nlohmann::json::array();
            for (const StrictPartition& lambda : draws) rows.push_back(lambda.parts());
            emit(cli.out, rows.dump() + "\n");
            return;
        }
        std::string csv = "index,partition,length,size\n";
        for (std::size_t i = 0; i < draws.size(); ++i)
            csv += std::to_string(i) + "," + join_parts(draws[i].parts()) + "," +
                   std::to_string(draws[i].length()) + "," + std::to_string(draws[i].size()) +
                   "\n";
        emit(cli.out, csv);
    });

    // ---- verify ----------------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    std::string suite = "full";
    cmd_verify->add_option("--suite", suite)->check(CLI::IsMember({"quick", "full"}));
    cmd_verify->callback([&] {
        const auto results = sschur::checks::run_acceptance(suite == "quick");
        if (!sschur::checks::report(results))
            throw consistency_error("verification suite reported failures");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message or help text
        return e.get_exit_code() == 0 ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const validation_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const consistency_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
