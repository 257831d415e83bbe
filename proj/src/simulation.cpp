#include "gof/simulation.hpp"

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gof/bandwidth.hpp"
#include "gof/detail/parallel.hpp"
#include "gof/svg.hpp"
#include "gof/version.hpp"

namespace gof {

namespace {

using nlohmann::json;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
    return out;
}

// FNV-1a over the canonical config JSON.
std::string hash_hex(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Bandwidth by the configured rule, then the requested estimator. When
// shared_h is given (AISE table runs) it overrides the selection for kernel
// estimators.
CdfEstimator fit_estimator(const Sample& sample, const EstimatorSpec& spec,
                           const ExperimentConfig& config, const Kernel& kernel,
                           BandwidthTarget target, std::optional<double> shared_h = std::nullopt) {
    if (spec.kind == EstimatorKind::empirical) return CdfEstimator::empirical(sample);

    std::optional<Bijection> bijection;
    if (spec.kind == EstimatorKind::transformed_kernel) {
        bijection = Bijection::make(*spec.transform, sample.support());
    }
    double h;
    if (shared_h) {
        h = *shared_h;
    } else if (config.bandwidth_rule == BandwidthRule::cv) {
        const BandwidthSelection sel = target == BandwidthTarget::cdf
                                           ? select_bandwidth_cdf(sample, kernel, bijection)
                                           : select_bandwidth_pdf(sample, kernel, bijection);
        h = sel.h_star;
    } else {
        h = reference_bandwidth(sample, bijection, target == BandwidthTarget::cdf ? 1.0 / 3.0 : 0.2);
    }
    if (spec.kind == EstimatorKind::naive_kernel) return CdfEstimator::naive_kernel(sample, kernel, h);
    return CdfEstimator::transformed_kernel(sample, kernel, h, *bijection);
}

// Per-replication bandwidths for an AISE comparison: every transformed
// estimator selects on its own scale; the naive estimator reuses the first
// transformed estimator's h, so the boundary treatment is the only thing
// that differs between the table columns. (With no transformed column the
// naive estimator selects for itself.)
std::vector<std::optional<double>> aise_bandwidths(const Sample& sample,
                                                   const ExperimentConfig& config,
                                                   const Kernel& kernel, BandwidthTarget target) {
    std::vector<std::optional<double>> h(config.estimators.size());
    std::optional<double> first_transformed;
    for (std::size_t e = 0; e < config.estimators.size(); ++e) {
        const auto& spec = config.estimators[e];
        if (spec.kind != EstimatorKind::transformed_kernel) continue;
        const Bijection map = Bijection::make(*spec.transform, sample.support());
        if (config.bandwidth_rule == BandwidthRule::cv) {
            const BandwidthSelection sel = target == BandwidthTarget::cdf
                                               ? select_bandwidth_cdf(sample, kernel, map)
                                               : select_bandwidth_pdf(sample, kernel, map);
            h[e] = sel.h_star;
        } else {
            h[e] = reference_bandwidth(sample, map, target == BandwidthTarget::cdf ? 1.0 / 3.0 : 0.2);
        }
        if (!first_transformed) first_transformed = h[e];
    }
    for (std::size_t e = 0; e < config.estimators.size(); ++e) {
        if (config.estimators[e].kind == EstimatorKind::naive_kernel) h[e] = first_transformed;
    }
    return h;
}

struct MeanSe {
    double mean;
    double se;
};

MeanSe mean_and_se(const std::vector<double>& values) {
    const double n = static_cast<double>(values.size());
    const double mean = detail::pairwise_sum(values) / n;
    std::vector<double> sq(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) sq[i] = (values[i] - mean) * (values[i] - mean);
    const double var = values.size() > 1 ? detail::pairwise_sum(sq) / (n - 1.0) : 0.0;
    return {mean, std::sqrt(var / n)};
}

}  // namespace

std::string_view experiment_mode_name(ExperimentMode mode) {
    switch (mode) {
        case ExperimentMode::aise_cdf: return "aise_cdf";
        case ExperimentMode::aise_pdf: return "aise_pdf";
        case ExperimentMode::rejection_curve: return "rejection_curve";
    }
    return "?";
}

ExperimentMode parse_experiment_mode(std::string_view name) {
    if (name == "aise_cdf") return ExperimentMode::aise_cdf;
    if (name == "aise_pdf") return ExperimentMode::aise_pdf;
    if (name == "rejection_curve") return ExperimentMode::rejection_curve;
    throw std::invalid_argument("unknown experiment mode: " + std::string(name));
}

std::string_view bandwidth_rule_name(BandwidthRule rule) {
    return rule == BandwidthRule::cv ? "cv" : "deterministic";
}

BandwidthRule parse_bandwidth_rule(std::string_view name) {
    if (name == "cv") return BandwidthRule::cv;
    if (name == "deterministic") return BandwidthRule::deterministic;
    throw std::invalid_argument("unknown bandwidth rule: " + std::string(name));
}

std::string EstimatorSpec::label() const {
    std::string s(estimator_kind_name(kind));
    if (transform) s += ":" + std::string(bijection_name(*transform));
    return s;
}

void validate_config(const ExperimentConfig& config) {
    if (config.replications < 1) throw std::invalid_argument("config: replications must be >= 1");
    if (config.n_list.empty()) throw std::invalid_argument("config: n_list must not be empty");
    if (config.estimators.empty()) throw std::invalid_argument("config: estimators must not be empty");
    if (!(config.alpha > 0.0 && config.alpha < 1.0)) throw std::invalid_argument("config: alpha in (0,1)");
    const ReferenceDistribution generator = ReferenceDistribution::parse(config.generator);
    for (const auto& spec : config.estimators) {
        if (spec.kind == EstimatorKind::transformed_kernel) {
            if (!spec.transform) {
                throw std::invalid_argument("config: boundary-free estimator needs a transform");
            }
            Bijection::make(*spec.transform, generator.support());  // throws if incompatible
        } else if (spec.transform) {
            throw std::invalid_argument("config: transform is only valid for the boundary-free estimator");
        }
        if (config.mode == ExperimentMode::aise_pdf && spec.kind == EstimatorKind::empirical) {
            throw std::invalid_argument("config: the empirical estimator has no density (aise_pdf)");
        }
    }
    if (config.mode == ExperimentMode::rejection_curve) {
        if (config.nulls.empty()) throw std::invalid_argument("config: rejection mode needs nulls");
        for (const auto& spec : config.nulls) {
            const ReferenceDistribution null = ReferenceDistribution::parse(spec);
            if (!null.support().covers(generator.support())) {
                throw std::invalid_argument("config: null support must cover the generator support: " + spec);
            }
        }
    }
}

double integrated_squared_error(const std::function<double(double)>& fn,
                                const ReferenceDistribution& truth, ExperimentMode mode,
                                std::size_t cells) {
    // Base range: the truth's central quantile span. Past a bounded support
    // edge the truth is exactly 0/1 (cdf) or 0 (pdf) but a naive kernel
    // estimator is not: that leakage is the boundary failure itself, so the
    // domain extends by two span-widths on each bounded side to capture it.
    // The boundary-free estimator contributes exactly zero there.
    double lo = truth.quantile(1e-6);
    double hi = truth.quantile(1.0 - 1e-6);
    const double width = hi - lo;
    if (truth.support().bounded_below()) lo = truth.support().lower - 2.0 * width;
    if (truth.support().bounded_above()) hi = truth.support().upper + 2.0 * width;

    const bool pdf_mode = mode == ExperimentMode::aise_pdf;
    auto integrand = [&](double x) {
        const double e = fn(x) - (pdf_mode ? truth.pdf(x) : truth.cdf(x));
        return e * e;
    };
    const double step = (hi - lo) / static_cast<double>(cells);
    double sum = integrand(lo) + integrand(hi);
    for (std::size_t k = 1; k < cells; ++k) {
        sum += integrand(lo + step * static_cast<double>(k)) * (k % 2 == 1 ? 4.0 : 2.0);
    }
    return sum * step / 3.0;
}

// Estimator evaluation extended past a bounded support: the transformed
// estimator's cdf continues as exact 0/1 and its density as 0; the other
// kinds are defined on all of R already.
double extended_value(const CdfEstimator& est, ExperimentMode mode, double x) {
    if (est.kind() == EstimatorKind::transformed_kernel) {
        const Interval& support = est.bijection()->support();
        if (mode == ExperimentMode::aise_cdf) {
            if (!support.contains_closure(x)) return x < support.lower ? 0.0 : 1.0;
        } else if (!support.contains_interior(x)) {
            return 0.0;
        }
    }
    return mode == ExperimentMode::aise_cdf ? est.cdf(x) : est.pdf(x);
}

ExperimentResult run_aise(const ExperimentConfig& config, unsigned threads) {
    validate_config(config);
    if (config.mode == ExperimentMode::rejection_curve) {
        throw std::invalid_argument("run_aise: config mode is rejection_curve");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const ReferenceDistribution generator = ReferenceDistribution::parse(config.generator);
    const Kernel kernel(config.kernel);
    const BandwidthTarget target =
        config.mode == ExperimentMode::aise_cdf ? BandwidthTarget::cdf : BandwidthTarget::pdf;
    const std::size_t reps = config.replications;
    const std::size_t n_estimators = config.estimators.size();

    ExperimentResult result;
    result.config = config;
    result.config_hash = hash_hex(config_to_json(config));

    for (std::size_t n_idx = 0; n_idx < config.n_list.size(); ++n_idx) {
        const std::size_t n = config.n_list[n_idx];
        std::vector<std::vector<double>> ise(n_estimators, std::vector<double>(reps));
        detail::parallel_for(
            reps,
            [&](std::size_t r) {
                SeededRng rng = SeededRng::stream(config.seed, n_idx * reps + r);
                const Sample sample(generator.sample(rng, n), generator.support());
                const auto shared = aise_bandwidths(sample, config, kernel, target);
                for (std::size_t e = 0; e < n_estimators; ++e) {
                    const CdfEstimator est =
                        fit_estimator(sample, config.estimators[e], config, kernel, target, shared[e]);
                    auto fn = [&](double x) { return extended_value(est, config.mode, x); };
                    ise[e][r] = integrated_squared_error(fn, generator, config.mode);
                }
            },
            threads);
        for (std::size_t e = 0; e < n_estimators; ++e) {
            const MeanSe agg = mean_and_se(ise[e]);
            CellResult cell;
            cell.metric = config.mode == ExperimentMode::aise_cdf ? "aise_cdf_x1e5" : "aise_pdf_x1e5";
            cell.estimator = config.estimators[e];
            cell.n = n;
            cell.value = agg.mean * 1e5;
            cell.mc_se = agg.se * 1e5;
            cell.replications = reps;
            result.cells.push_back(std::move(cell));
        }
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

ExperimentResult run_rejection_curve(const ExperimentConfig& config, unsigned threads) {
    validate_config(config);
    if (config.mode != ExperimentMode::rejection_curve) {
        throw std::invalid_argument("run_rejection_curve: config mode is not rejection_curve");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const ReferenceDistribution generator = ReferenceDistribution::parse(config.generator);
    const Kernel kernel(config.kernel);
    const std::size_t reps = config.replications;
    const std::size_t n_estimators = config.estimators.size();
    const std::size_t n_nulls = config.nulls.size();

    std::vector<ReferenceDistribution> nulls;
    std::vector<NullGrids> grids;
    nulls.reserve(n_nulls);
    grids.reserve(n_nulls);
    for (const auto& spec : config.nulls) {
        nulls.push_back(ReferenceDistribution::parse(spec));
        grids.emplace_back(nulls.back());
    }

    ExperimentResult result;
    result.config = config;
    result.config_hash = hash_hex(config_to_json(config));

    // reject flags indexed [null][estimator][family][rep]
    const auto cell_index = [&](std::size_t u, std::size_t e, std::size_t fam) {
        return (u * n_estimators + e) * 2 + fam;
    };

    for (std::size_t n_idx = 0; n_idx < config.n_list.size(); ++n_idx) {
        const std::size_t n = config.n_list[n_idx];
        std::vector<std::vector<std::uint8_t>> rejects(n_nulls * n_estimators * 2,
                                                       std::vector<std::uint8_t>(reps, 0));
        detail::parallel_for(
            reps,
            [&](std::size_t r) {
                SeededRng rng = SeededRng::stream(config.seed, n_idx * reps + r);
                const Sample sample(generator.sample(rng, n), generator.support());
                for (std::size_t e = 0; e < n_estimators; ++e) {
                    const CdfEstimator est =
                        fit_estimator(sample, config.estimators[e], config, kernel, BandwidthTarget::cdf);
                    for (std::size_t u = 0; u < n_nulls; ++u) {
                        const double d = ks_statistic(est, nulls[u], grids[u]).statistic;
                        const double p_ks = ks_pvalue(d, n);
                        rejects[cell_index(u, e, 0)][r] = p_ks < config.alpha ? 1 : 0;
                        const double t = cvm_statistic(est, nulls[u], grids[u]);
                        const double p_cvm = cvm_pvalue(t);
                        rejects[cell_index(u, e, 1)][r] = p_cvm < config.alpha ? 1 : 0;
                    }
                }
            },
            threads);
        for (std::size_t u = 0; u < n_nulls; ++u) {
            for (std::size_t e = 0; e < n_estimators; ++e) {
                for (std::size_t fam = 0; fam < 2; ++fam) {
                    std::size_t count = 0;
                    for (std::uint8_t b : rejects[cell_index(u, e, fam)]) count += b;
                    const double p = static_cast<double>(count) / static_cast<double>(reps);
                    CellResult cell;
                    cell.metric = fam == 0 ? "ks_rejection_pct" : "cvm_rejection_pct";
                    cell.null_spec = config.nulls[u];
                    cell.estimator = config.estimators[e];
                    cell.n = n;
                    cell.value = 100.0 * p;
                    cell.mc_se = 100.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(reps));
                    cell.replications = reps;
                    result.cells.push_back(std::move(cell));
                }
            }
        }
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads) {
    return config.mode == ExperimentMode::rejection_curve ? run_rejection_curve(config, threads)
                                                          : run_aise(config, threads);
}

void write_csv(const std::vector<ExperimentResult>& results, std::ostream& out) {
    out << "mode,generator,null,estimator,transform,n,metric,value,mc_se,seed\n";
    for (const auto& result : results) {
        const auto& cfg = result.config;
        for (const auto& cell : result.cells) {
            out << experiment_mode_name(cfg.mode) << ',' << csv_field(cfg.generator) << ','
                << csv_field(cell.null_spec) << ',' << estimator_kind_name(cell.estimator.kind) << ','
                << (cell.estimator.transform ? bijection_name(*cell.estimator.transform) : "") << ','
                << cell.n << ',' << cell.metric << ',' << fmt_double(cell.value) << ','
                << fmt_double(cell.mc_se) << ',' << cfg.seed << '\n';
        }
    }
}

namespace {

// One rejection-curve chart per null: percentage vs n, one series per
// (family x estimator).
std::vector<std::pair<std::string, SvgChart>> rejection_charts(const ExperimentResult& result) {
    std::vector<std::pair<std::string, SvgChart>> charts;
    for (const auto& null_spec : result.config.nulls) {
        SvgChart chart;
        chart.title = "data " + result.config.generator + " vs H0 " + null_spec;
        chart.x_label = "n";
        chart.y_label = "rejection %";
        chart.y_lo = 0.0;
        chart.y_hi = 102.0;
        std::map<std::string, SvgSeries> series;
        for (const auto& cell : result.cells) {
            if (cell.null_spec != null_spec) continue;
            const std::string family = cell.metric.substr(0, cell.metric.find('_'));
            const std::string key = family + " " + cell.estimator.label();
            auto& s = series[key];
            s.label = key;
            s.points.emplace_back(static_cast<double>(cell.n), cell.value);
        }
        for (auto& [key, s] : series) chart.series.push_back(std::move(s));
        charts.emplace_back(sanitize(null_spec), std::move(chart));
    }
    return charts;
}

std::vector<std::pair<std::string, SvgChart>> aise_charts(const ExperimentResult& result) {
    std::vector<std::pair<std::string, SvgChart>> charts;
    if (result.config.n_list.size() < 2) return charts;
    SvgChart chart;
    chart.title = "AISE (x1e5), data " + result.config.generator;
    chart.x_label = "n";
    chart.y_label = "AISE x 1e5";
    std::map<std::string, SvgSeries> series;
    for (const auto& cell : result.cells) {
        auto& s = series[cell.estimator.label()];
        s.label = cell.estimator.label();
        s.points.emplace_back(static_cast<double>(cell.n), cell.value);
    }
    for (auto& [key, s] : series) chart.series.push_back(std::move(s));
    charts.emplace_back("aise_" + sanitize(result.config.generator), std::move(chart));
    return charts;
}

}  // namespace

std::vector<std::string> emit_outputs(const std::vector<ExperimentResult>& results,
                                      const std::filesystem::path& dir, const std::string& basename) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;

    const std::filesystem::path csv_path = dir / (basename + ".csv");
    {
        std::ofstream csv(csv_path);
        if (!csv) throw std::runtime_error("emit_outputs: cannot write " + csv_path.string());
        write_csv(results, csv);
    }
    written.push_back(csv_path.filename().string());

    for (std::size_t i = 0; i < results.size(); ++i) {
        const auto charts = results[i].config.mode == ExperimentMode::rejection_curve
                                ? rejection_charts(results[i])
                                : aise_charts(results[i]);
        for (const auto& [tag, chart] : charts) {
            const std::filesystem::path svg_path =
                dir / (basename + "_" + std::to_string(i) + "_" + tag + ".svg");
            std::ofstream svg(svg_path);
            svg << render_svg(chart);
            written.push_back(svg_path.filename().string());
        }
    }

    json manifest;
    manifest["library_version"] = std::string(kVersion);
    manifest["outputs"] = written;
    double wall = 0.0;
    json configs = json::array();
    for (const auto& result : results) {
        json entry;
        entry["config"] = json::parse(config_to_json(result.config));
        entry["config_hash"] = result.config_hash;
        configs.push_back(entry);
        wall += result.wall_seconds;
    }
    manifest["experiments"] = configs;
    manifest["wall_seconds"] = wall;
    const std::filesystem::path manifest_path = dir / (basename + "_manifest.json");
    std::ofstream mf(manifest_path);
    mf << manifest.dump(2) << '\n';
    written.push_back(manifest_path.filename().string());
    return written;
}

std::string config_to_json(const ExperimentConfig& config) {
    json j;
    j["mode"] = std::string(experiment_mode_name(config.mode));
    j["generator"] = config.generator;
    j["nulls"] = config.nulls;
    json estimators = json::array();
    for (const auto& spec : config.estimators) {
        json e;
        e["kind"] = std::string(estimator_kind_name(spec.kind));
        if (spec.transform) e["transform"] = std::string(bijection_name(*spec.transform));
        estimators.push_back(e);
    }
    j["estimators"] = estimators;
    j["n_list"] = config.n_list;
    j["replications"] = config.replications;
    j["alpha"] = config.alpha;
    j["seed"] = config.seed;
    j["kernel"] = std::string(kernel_name(config.kernel));
    j["bandwidth_rule"] = std::string(bandwidth_rule_name(config.bandwidth_rule));
    return j.dump();
}

ExperimentConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config json: ") + e.what());
    }
    ExperimentConfig config;
    try {
        config.mode = parse_experiment_mode(j.at("mode").get<std::string>());
        config.generator = j.at("generator").get<std::string>();
        if (j.contains("nulls")) config.nulls = j["nulls"].get<std::vector<std::string>>();
        for (const auto& e : j.at("estimators")) {
            EstimatorSpec spec;
            spec.kind = parse_estimator_kind(e.at("kind").get<std::string>());
            if (e.contains("transform")) {
                spec.transform = parse_bijection(e["transform"].get<std::string>());
            }
            config.estimators.push_back(spec);
        }
        config.n_list = j.at("n_list").get<std::vector<std::size_t>>();
        if (j.contains("replications")) config.replications = j["replications"].get<std::size_t>();
        if (j.contains("alpha")) config.alpha = j["alpha"].get<double>();
        if (j.contains("seed")) config.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("kernel")) config.kernel = parse_kernel(j["kernel"].get<std::string>());
        if (j.contains("bandwidth_rule")) {
            config.bandwidth_rule = parse_bandwidth_rule(j["bandwidth_rule"].get<std::string>());
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config json: ") + e.what());
    }
    return config;
}

namespace {

EstimatorSpec edf_spec() { return {EstimatorKind::empirical, std::nullopt}; }
EstimatorSpec naive_spec() { return {EstimatorKind::naive_kernel, std::nullopt}; }
EstimatorSpec transformed_spec(BijectionType t) { return {EstimatorKind::transformed_kernel, t}; }

const std::vector<std::string>& table_generators() {
    static const std::vector<std::string> rows = {"gamma:2,2", "weibull:2,2", "lognorm:0,1",
                                                  "absnorm",   "uniform:0,1", "beta:1,3",
                                                  "beta:2,2",  "beta:3,1"};
    return rows;
}

std::vector<EstimatorSpec> table_estimators(const ReferenceDistribution& generator) {
    if (generator.support().bounded()) {
        return {naive_spec(), transformed_spec(BijectionType::probit),
                transformed_spec(BijectionType::logit)};
    }
    return {naive_spec(), transformed_spec(BijectionType::log_exp),
            transformed_spec(BijectionType::phi_gamma)};
}

std::vector<std::size_t> curve_sizes() { return {10, 20, 30, 40, 50, 60, 70, 80, 90, 100}; }

}  // namespace

std::vector<ExperimentConfig> reproduce_configs(std::string_view target, std::size_t replications,
                                                std::uint64_t seed) {
    std::vector<ExperimentConfig> configs;
    if (target == "table1" || target == "table2") {
        for (std::size_t row = 0; row < table_generators().size(); ++row) {
            ExperimentConfig config;
            config.mode = target == "table1" ? ExperimentMode::aise_cdf : ExperimentMode::aise_pdf;
            config.generator = table_generators()[row];
            config.estimators = table_estimators(ReferenceDistribution::parse(config.generator));
            config.n_list = {50};
            config.replications = replications;
            config.seed = SeededRng::mix(seed ^ SeededRng::mix(row + 1));
            configs.push_back(std::move(config));
        }
        return configs;
    }
    ExperimentConfig config;
    config.mode = ExperimentMode::rejection_curve;
    config.n_list = curve_sizes();
    config.replications = replications;
    config.alpha = 0.01;
    config.seed = seed;
    if (target == "fig3" || target == "fig4") {
        config.generator = target == "fig3" ? "weibull:2,2" : "lognorm:0,1";
        config.nulls = {"gamma:2,2", "weibull:2,2", "lognorm:0,1", "absnorm"};
        config.estimators = {edf_spec(), transformed_spec(BijectionType::log_exp),
                             transformed_spec(BijectionType::phi_gamma)};
    } else if (target == "fig5") {
        config.generator = "beta:1,3";
        config.nulls = {"uniform:0,1", "beta:1,3", "beta:2,2", "beta:3,1"};
        config.estimators = {edf_spec(), transformed_spec(BijectionType::probit),
                             transformed_spec(BijectionType::logit)};
    } else {
        throw std::invalid_argument("unknown reproduce target: " + std::string(target) +
                                    " (expected table1|table2|fig3|fig4|fig5)");
    }
    configs.push_back(std::move(config));
    return configs;
}

namespace {

// Single-sample overlay figures in the spirit of the estimator-comparison
// plots: truth plus each fitted estimator on one n=50 draw.
std::vector<std::string> write_overlay_figures(std::string_view target, std::uint64_t seed,
                                               const std::filesystem::path& dir) {
    const bool density = target == "table2";
    const std::vector<std::string> shown = {"gamma:2,2", "absnorm", "uniform:0,1", "beta:2,2"};
    std::vector<std::string> written;
    const Kernel kernel = Kernel::gaussian();
    for (std::size_t i = 0; i < shown.size(); ++i) {
        const ReferenceDistribution truth = ReferenceDistribution::parse(shown[i]);
        SeededRng rng = SeededRng::stream(seed, 1000000 + i);
        const Sample sample(truth.sample(rng, 50), truth.support());

        SvgChart chart;
        chart.title = std::string(density ? "density" : "distribution") + " estimates, data " + shown[i];
        chart.x_label = "x";
        chart.y_label = density ? "f(x)" : "F(x)";

        const double lo = truth.quantile(1e-4);
        const double hi = truth.quantile(1.0 - 1e-4);
        const std::size_t points = 400;
        auto curve = [&](const std::function<double(double)>& fn, const std::string& label) {
            SvgSeries s;
            s.label = label;
            for (std::size_t k = 0; k <= points; ++k) {
                const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(points);
                s.points.emplace_back(x, fn(x));
            }
            chart.series.push_back(std::move(s));
        };

        curve([&](double x) { return density ? truth.pdf(x) : truth.cdf(x); }, "truth");
        ExperimentConfig fit_config;
        fit_config.bandwidth_rule = BandwidthRule::cv;
        fit_config.estimators = table_estimators(truth);
        const BandwidthTarget target_kind = density ? BandwidthTarget::pdf : BandwidthTarget::cdf;
        const auto shared = aise_bandwidths(sample, fit_config, kernel, target_kind);
        for (std::size_t e = 0; e < fit_config.estimators.size(); ++e) {
            const auto& spec = fit_config.estimators[e];
            const CdfEstimator est =
                fit_estimator(sample, spec, fit_config, kernel, target_kind, shared[e]);
            curve([&, est](double x) { return density ? est.pdf(x) : est.cdf(x); }, spec.label());
        }

        const std::string name = std::string(target == "table1" ? "fig1" : "fig2") +
                                 static_cast<char>('a' + i) + "_" + sanitize(shown[i]) + ".svg";
        std::ofstream out(dir / name);
        out << render_svg(chart);
        written.push_back(name);
    }
    return written;
}

}  // namespace

std::vector<std::string> run_reproduce(std::string_view target, std::size_t replications,
                                       std::uint64_t seed, const std::filesystem::path& out_dir,
                                       unsigned threads) {
    const auto configs = reproduce_configs(target, replications, seed);
    std::vector<ExperimentResult> results;
    results.reserve(configs.size());
    for (const auto& config : configs) results.push_back(run_experiment(config, threads));
    auto written = emit_outputs(results, out_dir, std::string(target));
    if (target == "table1" || target == "table2") {
        std::filesystem::create_directories(out_dir);
        for (auto& name : write_overlay_figures(target, seed, out_dir)) {
            written.push_back(std::move(name));
        }
    }
    return written;
}

}  // namespace gof
