// gof: boundary-free kernel distribution/density estimation and smoothed
// Kolmogorov-Smirnov / Cramer-von Mises goodness-of-fit testing.
//
// Exit codes: 0 success (test decisions are payload, not status), 2 usage
// error, 3 data error, 1 unexpected failure. Errors go to stderr as a single
// machine-parseable "code: message" line.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gof/bandwidth.hpp"
#include "gof/errors.hpp"
#include "gof/estimators.hpp"
#include "gof/io.hpp"
#include "gof/simulation.hpp"
#include "gof/statistics.hpp"
#include "gof/version.hpp"

namespace {

using nlohmann::json;

json json_number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

struct CommonFlags {
    std::string data_path;
    std::string support_text;
    std::string estimator = "boundary-free";
    std::string transform = "auto";
    std::string kernel = "gaussian";
    std::string h_text = "cv";
    std::string h_grid;
    std::string out_dir = "out";
    unsigned threads = 0;
};

gof::Sample read_sample(const std::string& path, const gof::Interval& support) {
    if (path == "-") return gof::ingest_data(std::cin, support);
    std::ifstream in(path);
    if (!in) throw gof::DataError("cannot open data file '" + path + "'");
    return gof::ingest_data(in, support);
}

gof::CvOptions parse_h_grid(const std::string& text) {
    gof::CvOptions options;
    if (text.empty()) return options;
    double lo, hi;
    long count;
    if (std::sscanf(text.c_str(), "%lf,%lf,%ld", &lo, &hi, &count) != 3 || !(lo > 0.0) ||
        !(hi > lo) || count < 3) {
        throw gof::UsageError("--h-grid must be LO,HI,COUNT with 0 < LO < HI and COUNT >= 3");
    }
    options.grid_lo_factor = lo;
    options.grid_hi_factor = hi;
    options.grid_size = static_cast<std::size_t>(count);
    return options;
}

std::optional<gof::Bijection> resolve_bijection(const CommonFlags& flags,
                                                const gof::Interval& support,
                                                gof::EstimatorKind kind) {
    if (kind != gof::EstimatorKind::transformed_kernel) {
        if (flags.transform != "auto" && flags.transform != "none") {
            throw gof::UsageError("--transform applies only to the boundary-free estimator");
        }
        return std::nullopt;
    }
    if (flags.transform == "none") {
        throw gof::UsageError("the boundary-free estimator requires a transform");
    }
    const gof::BijectionType type = flags.transform == "auto" ? gof::auto_bijection(support)
                                                              : gof::parse_bijection(flags.transform);
    return gof::Bijection::make(type, support);
}

struct FittedModel {
    gof::CdfEstimator estimator;
    json bandwidth_diagnostics;
    std::string transform_name;
};

FittedModel fit_from_flags(const CommonFlags& flags, const gof::Sample& sample,
                           gof::BandwidthTarget target) {
    const gof::EstimatorKind kind = gof::parse_estimator_kind(flags.estimator);
    const gof::Kernel kernel(gof::parse_kernel(flags.kernel));
    const auto bijection = resolve_bijection(flags, sample.support(), kind);

    if (kind == gof::EstimatorKind::empirical) {
        return {gof::CdfEstimator::empirical(sample), json(nullptr), ""};
    }

    double h;
    json diagnostics;
    if (flags.h_text == "cv") {
        const gof::CvOptions options = parse_h_grid(flags.h_grid);
        const gof::BandwidthSelection sel =
            target == gof::BandwidthTarget::cdf
                ? gof::select_bandwidth_cdf(sample, kernel, bijection, options)
                : gof::select_bandwidth_pdf(sample, kernel, bijection, options);
        h = sel.h_star;
        json trace = json::array();
        for (const auto& [hv, cv] : sel.criterion_values) {
            trace.push_back({{"h", hv}, {"cv", cv}});
        }
        diagnostics = {{"rule", "cv"},
                       {"h_star", sel.h_star},
                       {"interior", sel.interior},
                       {"grid_lo", sel.grid_lo},
                       {"grid_hi", sel.grid_hi},
                       {"trace", trace}};
    } else {
        try {
            h = std::stod(flags.h_text);
        } catch (const std::exception&) {
            throw gof::UsageError("--h must be 'cv' or a positive number");
        }
        if (!(h > 0.0)) throw gof::UsageError("--h must be positive");
        diagnostics = {{"rule", "fixed"}, {"h_star", h}};
    }

    if (kind == gof::EstimatorKind::naive_kernel) {
        return {gof::CdfEstimator::naive_kernel(sample, kernel, h), diagnostics, ""};
    }
    return {gof::CdfEstimator::transformed_kernel(sample, kernel, h, *bijection), diagnostics,
            std::string(bijection->name())};
}

json effective_config(const CommonFlags& flags, const gof::Interval& support,
                      const std::string& transform_name) {
    return {{"data", flags.data_path},
            {"support", support.str()},
            {"estimator", flags.estimator},
            {"transform", transform_name.empty() ? flags.transform : transform_name},
            {"kernel", flags.kernel},
            {"h", flags.h_text}};
}

int run_estimate(const CommonFlags& flags, const std::string& quantity, const std::string& grid_text) {
    const gof::Interval support = gof::parse_interval(flags.support_text);
    const gof::Sample sample = read_sample(flags.data_path, support);
    const bool density = quantity == "pdf";
    if (quantity != "pdf" && quantity != "cdf") {
        throw gof::UsageError("--quantity must be cdf or pdf");
    }
    if (density && flags.estimator == "edf") {
        throw gof::UsageError("the edf estimator has no density; use --quantity cdf");
    }
    const FittedModel model = fit_from_flags(
        flags, sample, density ? gof::BandwidthTarget::pdf : gof::BandwidthTarget::cdf);

    // Evaluation grid: explicit LO,HI,COUNT, or the data range padded by one
    // standard deviation and clipped to the support.
    double lo, hi;
    long count = 200;
    if (!grid_text.empty()) {
        if (std::sscanf(grid_text.c_str(), "%lf,%lf,%ld", &lo, &hi, &count) != 3 || !(hi > lo) ||
            count < 2) {
            throw gof::UsageError("--grid must be LO,HI,COUNT");
        }
        if (!support.contains_closure(lo) || !support.contains_closure(hi)) {
            throw gof::UsageError("--grid must lie inside the declared support");
        }
    } else {
        lo = std::max(support.lower, sample.min() - sample.stddev());
        hi = std::min(support.upper, sample.max() + sample.stddev());
    }

    std::filesystem::create_directories(flags.out_dir);
    const std::filesystem::path csv_path = std::filesystem::path(flags.out_dir) / "estimate.csv";
    std::ofstream csv(csv_path);
    csv << "x," << (density ? "pdf" : "cdf") << "\n";
    char buf[64];
    for (long i = 0; i < count; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
        double value;
        if (density) {
            value = support.contains_interior(x) ? model.estimator.pdf(x) : 0.0;
        } else {
            value = model.estimator.cdf(x);
        }
        std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", x, value);
        csv << buf;
    }

    json out;
    out["command"] = "estimate";
    out["config"] = effective_config(flags, support, model.transform_name);
    out["config"]["quantity"] = quantity;
    out["config"]["grid"] = {{"lo", lo}, {"hi", hi}, {"count", count}};
    out["n"] = sample.size();
    out["bandwidth"] = model.bandwidth_diagnostics;
    out["output"] = csv_path.string();
    const std::filesystem::path json_path = std::filesystem::path(flags.out_dir) / "estimate.json";
    std::ofstream(json_path) << out.dump(2) << '\n';

    std::cout << "estimate: n=" << sample.size() << " " << quantity << " values on [" << lo << ", "
              << hi << "] -> " << csv_path.string() << "\n";
    return 0;
}

int run_gof_test(CommonFlags& flags, const std::string& null_spec, const std::string& stat,
                 double alpha) {
    const gof::ReferenceDistribution null = gof::ReferenceDistribution::parse(null_spec);
    const gof::Interval support =
        flags.support_text.empty() ? null.support() : gof::parse_interval(flags.support_text);
    const gof::Sample sample = read_sample(flags.data_path, support);
    const FittedModel model = fit_from_flags(flags, sample, gof::BandwidthTarget::cdf);
    const gof::StatFamily family = gof::parse_stat_family(stat);
    const gof::TestReport report = gof::run_test(model.estimator, null, family, alpha);

    std::ostringstream line;
    line << stat << " " << flags.estimator;
    if (!model.transform_name.empty()) line << "(" << model.transform_name << ")";
    line << " vs " << null_spec << ": statistic=" << report.statistic
         << " scaled=" << report.scaled_statistic << " p=" << report.p_value
         << " reject at alpha=" << alpha << ": " << (report.reject ? "yes" : "no");

    json out;
    out["command"] = "test";
    out["config"] = effective_config(flags, support, model.transform_name);
    out["config"]["null"] = null_spec;
    out["config"]["stat"] = stat;
    out["config"]["alpha"] = alpha;
    out["report"] = {{"family", std::string(gof::stat_family_name(report.family))},
                     {"estimator", std::string(gof::estimator_kind_name(report.estimator))},
                     {"transform", report.transform},
                     {"n", report.n},
                     {"statistic", report.statistic},
                     {"scaled_statistic", report.scaled_statistic},
                     {"p_value", report.p_value},
                     {"alpha", report.alpha},
                     {"reject", report.reject},
                     {"critical_value", report.critical_value},
                     {"x_star", json_number(report.x_star)},
                     {"bandwidth", json_number(report.bandwidth)},
                     {"grid_points", report.grid_points}};
    out["bandwidth"] = model.bandwidth_diagnostics;

    std::cout << line.str() << "\n" << out.dump(2) << "\n";
    return 0;
}

int run_simulate(const std::string& config_path, const std::string& out_dir,
                 const std::string& basename, unsigned threads) {
    std::ifstream in(config_path);
    if (!in) throw gof::DataError("cannot open config file '" + config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    gof::ExperimentConfig config;
    try {
        config = gof::config_from_json(buffer.str());
        gof::validate_config(config);
    } catch (const std::invalid_argument& e) {
        throw gof::UsageError(e.what());
    }
    const auto result = gof::run_experiment(config, threads);
    const auto written = gof::emit_outputs({result}, out_dir, basename);
    std::cout << "simulate: " << result.cells.size() << " cells in " << result.wall_seconds
              << "s -> " << out_dir << "/ (";
    for (std::size_t i = 0; i < written.size(); ++i) std::cout << (i ? ", " : "") << written[i];
    std::cout << ")\n";
    return 0;
}

int run_reproduce_cmd(const std::string& target, std::size_t reps, std::uint64_t seed,
                      const std::string& out_dir, unsigned threads) {
    std::vector<std::string> written;
    try {
        written = gof::run_reproduce(target, reps, seed, out_dir, threads);
    } catch (const std::invalid_argument& e) {
        throw gof::UsageError(e.what());
    }
    std::cout << "reproduce " << target << ": reps=" << reps << " seed=" << seed << " -> "
              << out_dir << "/ (";
    for (std::size_t i = 0; i < written.size(); ++i) std::cout << (i ? ", " : "") << written[i];
    std::cout << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary-free kernel estimators and smoothed KS/CvM goodness-of-fit tests"};
    app.require_subcommand(0, 1);
    // The bandwidth flag is --h, so help stays long-form only.
    app.set_help_flag("--help", "print help");
    bool show_version = false;
    app.add_flag("--version", show_version, "print version and registry");

    CommonFlags flags;
    std::string quantity = "cdf", grid_text, null_spec, stat = "ks";
    double alpha = 0.01;
    std::string config_path, basename = "experiment", target;
    std::size_t reps = 1000;
    std::uint64_t seed = 0;

    CLI::App* estimate = app.add_subcommand("estimate", "fit an estimator and emit a value grid");
    estimate->set_help_flag("--help", "print help");
    estimate->add_option("--data", flags.data_path, "input file, one value per line ('-' = stdin)")
        ->required();
    estimate->add_option("--support", flags.support_text, "declared support LO,HI")->required();
    estimate->add_option("--estimator", flags.estimator, "edf | naive | boundary-free");
    estimate->add_option("--transform", flags.transform, "auto | log | phi-gamma | probit | logit | none");
    estimate->add_option("--kernel", flags.kernel, "gaussian | epanechnikov");
    estimate->add_option("--h", flags.h_text, "'cv' or a positive bandwidth");
    estimate->add_option("--h-grid", flags.h_grid, "cv grid LO,HI,COUNT (factors of s*n^(-1/3))");
    estimate->add_option("--quantity", quantity, "cdf | pdf");
    estimate->add_option("--grid", grid_text, "evaluation grid LO,HI,COUNT");
    estimate->add_option("--out", flags.out_dir, "output directory");

    CLI::App* test = app.add_subcommand("test", "goodness-of-fit test against a null distribution");
    test->set_help_flag("--help", "print help");
    test->add_option("--data", flags.data_path, "input file ('-' = stdin)")->required();
    test->add_option("--null", null_spec, "null distribution spec, e.g. weibull:2,2")->required();
    test->add_option("--stat", stat, "ks | cvm");
    test->add_option("--estimator", flags.estimator, "edf | naive | boundary-free");
    test->add_option("--transform", flags.transform, "auto | log | phi-gamma | probit | logit");
    test->add_option("--kernel", flags.kernel, "gaussian | epanechnikov");
    test->add_option("--alpha", alpha, "significance level");
    test->add_option("--h", flags.h_text, "'cv' or a positive bandwidth");
    test->add_option("--h-grid", flags.h_grid, "cv grid LO,HI,COUNT");
    test->add_option("--support", flags.support_text, "declared support (default: the null's)");

    CLI::App* simulate = app.add_subcommand("simulate", "run a Monte Carlo experiment from JSON");
    simulate->set_help_flag("--help", "print help");
    simulate->add_option("--config", config_path, "experiment config JSON")->required();
    simulate->add_option("--out", flags.out_dir, "output directory");
    simulate->add_option("--basename", basename, "output file basename");
    simulate->add_option("--threads", flags.threads, "worker threads (0 = auto)");

    CLI::App* reproduce = app.add_subcommand("reproduce", "rerun a study target");
    reproduce->set_help_flag("--help", "print help");
    reproduce->add_option("--target", target, "table1 | table2 | fig3 | fig4 | fig5")->required();
    reproduce->add_option("--reps", reps, "replications per cell");
    reproduce->add_option("--seed", seed, "base seed");
    reproduce->add_option("--out", flags.out_dir, "output directory");
    reproduce->add_option("--threads", flags.threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    }

    if (show_version) {
        std::cout << "gof " << gof::kVersion << "\n"
                  << "kernels: gaussian, epanechnikov\n"
                  << "transforms: log, phi-gamma, probit, logit\n"
                  << "distributions: gamma, weibull, lognorm, absnorm, uniform, beta\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << "usage: expected a subcommand (estimate | test | simulate | reproduce)\n";
        return 2;
    }

    try {
        if (estimate->parsed()) return run_estimate(flags, quantity, grid_text);
        if (test->parsed()) return run_gof_test(flags, null_spec, stat, alpha);
        if (simulate->parsed()) return run_simulate(config_path, flags.out_dir, basename, flags.threads);
        if (reproduce->parsed()) {
            return run_reproduce_cmd(target, reps, seed, flags.out_dir, flags.threads);
        }
    } catch (const gof::UsageError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const gof::DataError& e) {
        std::cerr << "data: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "data: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
