// logdens: measures, block densities, convex geometry and completeness
// criteria for exponential systems, from the command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logdens/criteria.hpp"
#include "logdens/generators.hpp"
#include "logdens/io.hpp"
#include "logdens/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonOptions {
    std::string config_path;
    std::string input_path;
    std::string generator_spec;
    std::string out;
    logdens::EstimationParams params;

    // flag presence markers so CLI flags override the config file
    CLI::Option* opt_grid_base = nullptr;
    CLI::Option* opt_grid_ratio = nullptr;
    CLI::Option* opt_horizon = nullptr;
    CLI::Option* opt_tail_fraction = nullptr;
    CLI::Option* opt_divergence_margin = nullptr;
    CLI::Option* opt_bounded_margin = nullptr;
    CLI::Option* opt_tolerance = nullptr;
    CLI::Option* opt_theta_steps = nullptr;
    double grid_base = 0, grid_ratio = 0, horizon = 0, tail_fraction = 0;
    double divergence_margin = 0, bounded_margin = 0, tolerance = 0;
    int theta_steps = 0;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool needs_input) {
    cmd->add_option("--config", o.config_path, "JSON config file");
    if (needs_input) {
        cmd->add_option("--input", o.input_path, "distribution file");
        cmd->add_option("--gen", o.generator_spec, "generator spec, e.g. 'arith n=1000 step=1'");
    }
    cmd->add_option("--out", o.out, "output file or directory");
    o.opt_grid_base = cmd->add_option("--grid-base", o.grid_base, "radial grid base");
    o.opt_grid_ratio = cmd->add_option("--grid-ratio", o.grid_ratio, "radial grid ratio (> 1)");
    o.opt_horizon = cmd->add_option("--horizon", o.horizon, "radial grid horizon");
    o.opt_tail_fraction =
        cmd->add_option("--tail-fraction", o.tail_fraction, "tail fraction for limsup estimates");
    o.opt_divergence_margin = cmd->add_option("--divergence-margin", o.divergence_margin,
                                              "per-decade growth declared divergent");
    o.opt_bounded_margin = cmd->add_option("--bounded-margin", o.bounded_margin,
                                           "per-decade growth declared bounded");
    o.opt_tolerance = cmd->add_option("--tolerance", o.tolerance, "relative spread tolerance");
    o.opt_theta_steps = cmd->add_option("--theta-steps", o.theta_steps,
                                        "directions over [0, pi) for the corollary sweeps");
}

void resolve_params(CommonOptions& o) {
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw logdens::Error("cannot open config file '" + o.config_path + "'");
        json cfg = json::parse(in);
        auto& p = o.params;
        p.grid_base = cfg.value("grid_base", p.grid_base);
        p.grid_ratio = cfg.value("grid_ratio", p.grid_ratio);
        p.horizon = cfg.value("horizon", p.horizon);
        p.block.tail_fraction = cfg.value("tail_fraction", p.block.tail_fraction);
        p.block.tolerance = cfg.value("tolerance", p.block.tolerance);
        p.block.b_growth_tol = cfg.value("b_growth_tol", p.block.b_growth_tol);
        p.pair.divergence_margin = cfg.value("divergence_margin", p.pair.divergence_margin);
        p.pair.bounded_margin = cfg.value("bounded_margin", p.pair.bounded_margin);
        p.theta_steps = cfg.value("theta_steps", p.theta_steps);
        if (o.out.empty()) o.out = cfg.value("out", std::string());
    }
    if (*o.opt_grid_base) o.params.grid_base = o.grid_base;
    if (*o.opt_grid_ratio) o.params.grid_ratio = o.grid_ratio;
    if (*o.opt_horizon) o.params.horizon = o.horizon;
    if (*o.opt_tail_fraction) o.params.block.tail_fraction = o.tail_fraction;
    if (*o.opt_divergence_margin) o.params.pair.divergence_margin = o.divergence_margin;
    if (*o.opt_bounded_margin) o.params.pair.bounded_margin = o.bounded_margin;
    if (*o.opt_tolerance) o.params.block.tolerance = o.tolerance;
    if (*o.opt_theta_steps) o.params.theta_steps = o.theta_steps;
    o.params.validate();
}

logdens::PointDistribution load_input(const CommonOptions& o) {
    if (!o.input_path.empty() && !o.generator_spec.empty())
        throw logdens::Error("--input and --gen are mutually exclusive");
    if (!o.input_path.empty()) return logdens::read_distribution(o.input_path);
    if (!o.generator_spec.empty())
        return logdens::generate(logdens::GeneratorSpec::parse(o.generator_spec));
    throw logdens::Error("a distribution is required: pass --input or --gen");
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        logdens::atomic_write(out_path, content);
}

int cmd_generate(CommonOptions& o, const std::vector<std::string>& spec_tokens) {
    resolve_params(o);
    if (o.out.empty()) throw logdens::Error("generate requires --out FILE");
    std::string spec_text;
    for (const auto& t : spec_tokens) {
        if (!spec_text.empty()) spec_text += ' ';
        spec_text += t;
    }
    const auto dist = logdens::generate(logdens::GeneratorSpec::parse(spec_text));
    logdens::write_distribution(o.out, dist);
    std::cout << "wrote " << o.out << " (" << dist.total_count() << " points)\n";
    return 0;
}

int cmd_measure(CommonOptions& o, const std::string& kind, double r, double R,
                const std::string& table_path) {
    resolve_params(o);
    const auto dist = load_input(o);
    if (!table_path.empty()) {
        const auto grid = o.params.grid_for(dist);
        const auto table = logdens::IntervalMeasureTable::from_distribution(
            dist, grid, logdens::provenance_from_string(kind));
        logdens::write_table_csv(table_path, table);
        std::cout << "wrote " << table_path << "\n";
        return 0;
    }
    double value = 0.0;
    if (kind == "right")
        value = logdens::right_log_measure(dist, r, R);
    else if (kind == "left")
        value = logdens::left_log_measure(dist, r, R);
    else if (kind == "submeasure")
        value = logdens::log_submeasure(dist, r, R);
    else
        throw logdens::Error("--kind must be right, left or submeasure");
    std::cout << logdens::format_g12(value) << "\n";
    return 0;
}

int cmd_density(CommonOptions& o) {
    resolve_params(o);
    const auto dist = load_input(o);
    logdens::DensityReport report;
    std::optional<logdens::IntervalMeasureTable> table;
    if (dist.empty()) {
        report.value = 0.0;
        report.converged = true;
    } else {
        const auto grid = o.params.grid_for(dist);
        table = logdens::IntervalMeasureTable::from_distribution(dist, grid,
                                                                 logdens::Provenance::Submeasure);
        report = logdens::block_density(*table, o.params.block);
    }
    const std::string csv = logdens::density_report_to_csv(report);
    std::cout << csv;
    if (o.out.empty()) return 0;

    const fs::path dir = o.out;
    logdens::atomic_write(dir / "density_report.csv", csv);
    if (table) {
        logdens::write_table_csv(dir / "density_table.csv", *table);

        logdens::PlotSeries blocks;
        blocks.label = "(1/ln a) limsup L(r, ar)";
        blocks.points = logdens::block_ratio_curve(*table, o.params.block.tail_fraction);
        logdens::PlotOptions block_opts;
        block_opts.title = "block density estimates";
        block_opts.xlabel = "block factor a";
        block_opts.ylabel = "estimate";
        block_opts.log_x = true;
        logdens::write_line_plot_svg(dir / "density_blocks.svg",
                                     std::span(&blocks, 1), block_opts);

        const auto& radii = table->radii();
        const int m = table->point_count();
        std::vector<logdens::PlotSeries> curves;
        for (int k : {8, 16, 32}) {
            if (k >= m) continue;
            logdens::PlotSeries s;
            s.label = "a = " + logdens::format_g12(std::exp(k * table->log_step()));
            for (int i = 0; i + k < m; ++i)
                s.points.emplace_back(radii[static_cast<std::size_t>(i)], table->value(i, i + k));
            curves.push_back(std::move(s));
        }
        logdens::PlotOptions curve_opts;
        curve_opts.title = "L(r, ar) against r";
        curve_opts.xlabel = "r";
        curve_opts.ylabel = "L(r, ar)";
        curve_opts.log_x = true;
        logdens::write_line_plot_svg(dir / "density_curves.svg", curves, curve_opts);
    }
    std::cout << "wrote artifacts under " << dir.string() << "\n";
    return 0;
}

int cmd_geom(const std::vector<std::string>& body_args, const std::string& body_path,
             const std::vector<std::string>& theta_args, const std::string& out_path) {
    logdens::ConvexBody body;
    if (!body_path.empty()) {
        body = logdens::read_body(body_path);
    } else if (!body_args.empty()) {
        std::string text = body_args[0] + ":";
        for (std::size_t i = 1; i < body_args.size(); ++i) text += " " + body_args[i];
        if (body_args[0] == "polygon") {
            // positional polygon form: polygon re im re im ...
            if ((body_args.size() - 1) % 2 != 0)
                throw logdens::Error("polygon needs an even number of coordinates");
            std::string lines;
            for (std::size_t i = 1; i + 1 < body_args.size(); i += 2)
                lines += "polygon: " + body_args[i] + " " + body_args[i + 1] + "\n";
            body = logdens::parse_body(lines);
        } else {
            body = logdens::parse_body(text);
        }
    } else {
        throw logdens::Error("geom requires a body: positional args or --body FILE");
    }
    std::ostringstream out;
    out << "quantity,value\n";
    for (const std::string& t : theta_args) {
        const double theta = logdens::parse_scalar(t);
        out << "support(" << t << ")," << logdens::format_g12(logdens::support(body, theta))
            << "\n";
        out << "width(" << t << ")," << logdens::format_g12(logdens::width(body, theta)) << "\n";
    }
    out << "breadth," << logdens::format_g12(logdens::breadth(body)) << "\n";
    out << "diameter," << logdens::format_g12(logdens::diameter(body)) << "\n";
    emit(out_path, out.str());
    return 0;
}

logdens::CompletenessVerdict run_criterion(const std::string& criterion,
                                           const logdens::PointDistribution& dist, double b,
                                           double theta, bool assert_redheffer,
                                           const logdens::EstimationParams& params) {
    if (criterion == "theorem1") return logdens::theorem1_verdict(dist, b, theta, params);
    if (criterion == "theorem2")
        return logdens::theorem2_verdict(dist, b, theta,
                                         assert_redheffer
                                             ? logdens::RedhefferAssertion::UserAsserted
                                             : logdens::RedhefferAssertion::CheckHeuristically,
                                         params);
    if (criterion == "breadth") return logdens::breadth_criterion(dist, b, params);
    if (criterion == "diameter") return logdens::diameter_sufficient(dist, b, params);
    throw logdens::Error("--criterion must be theorem1, theorem2, breadth or diameter");
}

int cmd_verdict(CommonOptions& o, const std::string& criterion, const std::string& b_text,
                const std::string& theta_text, bool assert_redheffer) {
    resolve_params(o);
    const auto dist = load_input(o);
    const double b = logdens::parse_scalar(b_text);
    const double theta = theta_text.empty() ? logdens::kPi / 2.0
                                            : logdens::parse_scalar(theta_text);
    const auto verdict = run_criterion(criterion, dist, b, theta, assert_redheffer, o.params);
    emit(o.out, logdens::verdicts_to_csv(std::span(&verdict, 1)));
    return 0;
}

int cmd_sweep(CommonOptions& o, const std::string& criterion,
              const std::vector<std::string>& b_texts, const std::vector<std::string>& theta_texts,
              bool assert_redheffer) {
    resolve_params(o);
    const auto dist = load_input(o);
    std::vector<double> thetas;
    for (const auto& t : theta_texts) thetas.push_back(logdens::parse_scalar(t));
    if (thetas.empty()) thetas.push_back(logdens::kPi / 2.0);
    std::vector<logdens::CompletenessVerdict> verdicts;
    for (const auto& b_text : b_texts)
        for (double theta : thetas)
            verdicts.push_back(run_criterion(criterion, dist, logdens::parse_scalar(b_text),
                                             theta, assert_redheffer, o.params));
    emit(o.out, logdens::verdicts_to_csv(verdicts));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"logarithmic block densities and completeness criteria for exponential systems"};
    app.require_subcommand(1);

    CommonOptions gen_opts, measure_opts, density_opts, verdict_opts, sweep_opts;

    auto* generate = app.add_subcommand("generate", "materialize a generator spec into a file");
    std::vector<std::string> spec_tokens;
    generate->add_option("spec", spec_tokens, "generator spec tokens")->required();
    add_common(generate, gen_opts, false);

    auto* measure = app.add_subcommand("measure", "logarithmic interval measures");
    std::string measure_kind = "right", measure_table;
    double measure_r = 0.0, measure_R = 0.0;
    measure->add_option("--kind", measure_kind, "right | left | submeasure");
    measure->add_option("--r", measure_r, "interval start");
    measure->add_option("--R", measure_R, "interval end");
    measure->add_option("--table", measure_table, "write the full grid table CSV here");
    add_common(measure, measure_opts, true);

    auto* density = app.add_subcommand("density", "block-density report and plots");
    add_common(density, density_opts, true);

    auto* geom = app.add_subcommand("geom", "support, width, breadth, diameter of a body");
    std::vector<std::string> body_args, theta_args;
    std::string body_path, geom_out;
    geom->add_option("shape", body_args,
                     "disk re im r | strip phi b [offset] | polygon re im ...");
    geom->add_option("--body", body_path, "body file");
    geom->add_option("--theta", theta_args, "directions to evaluate (accepts pi forms)");
    geom->add_option("--out", geom_out, "output CSV file");

    auto* verdict = app.add_subcommand("verdict", "evaluate one completeness criterion");
    std::string verdict_criterion = "theorem1", verdict_b, verdict_theta;
    bool verdict_assert = false;
    verdict->add_option("--criterion", verdict_criterion,
                        "theorem1 | theorem2 | breadth | diameter");
    verdict->add_option("--b", verdict_b, "strip width b (accepts pi forms)")->required();
    verdict->add_option("--theta", verdict_theta, "direction theta (default pi/2)");
    verdict->add_flag("--assert-redheffer", verdict_assert,
                      "assert finite Redheffer density instead of checking heuristically");
    add_common(verdict, verdict_opts, true);

    auto* sweep = app.add_subcommand("sweep", "verdicts across b and theta lists");
    std::string sweep_criterion = "theorem1";
    std::vector<std::string> sweep_b, sweep_theta;
    bool sweep_assert = false;
    sweep->add_option("--criterion", sweep_criterion, "theorem1 | theorem2 | breadth | diameter");
    sweep->add_option("--b", sweep_b, "b values")->required();
    sweep->add_option("--theta", sweep_theta, "theta values (default pi/2)");
    sweep->add_flag("--assert-redheffer", sweep_assert, "assert finite Redheffer density");
    add_common(sweep, sweep_opts, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) return cmd_generate(gen_opts, spec_tokens);
        if (measure->parsed())
            return cmd_measure(measure_opts, measure_kind, measure_r, measure_R, measure_table);
        if (density->parsed()) return cmd_density(density_opts);
        if (geom->parsed()) return cmd_geom(body_args, body_path, theta_args, geom_out);
        if (verdict->parsed())
            return cmd_verdict(verdict_opts, verdict_criterion, verdict_b, verdict_theta,
                               verdict_assert);
        if (sweep->parsed())
            return cmd_sweep(sweep_opts, sweep_criterion, sweep_b, sweep_theta, sweep_assert);
    } catch (const logdens::HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
