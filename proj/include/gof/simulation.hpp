#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gof/distributions.hpp"
#include "gof/estimators.hpp"
#include "gof/kernels.hpp"
#include "gof/statistics.hpp"
#include "gof/transforms.hpp"

namespace gof {

enum class ExperimentMode { aise_cdf, aise_pdf, rejection_curve };
enum class BandwidthRule { cv, deterministic };

std::string_view experiment_mode_name(ExperimentMode mode);
ExperimentMode parse_experiment_mode(std::string_view name);
std::string_view bandwidth_rule_name(BandwidthRule rule);
BandwidthRule parse_bandwidth_rule(std::string_view name);

struct EstimatorSpec {
    EstimatorKind kind = EstimatorKind::empirical;
    std::optional<BijectionType> transform;  // transformed_kernel only

    std::string label() const;  // "edf", "naive", "boundary-free:log"
};

// One Monte Carlo experiment: either an AISE comparison of estimators at the
// configured sample sizes, or rejection-percentage curves of the test
// variants against a list of nulls. (config, seed) fully determines every
// output: replication r of size index k draws from stream (seed, k*R + r)
// and aggregates are reduced in a fixed tree order.
struct ExperimentConfig {
    ExperimentMode mode = ExperimentMode::rejection_curve;
    std::string generator;            // distribution spec string
    std::vector<std::string> nulls;   // rejection mode only
    std::vector<EstimatorSpec> estimators;
    std::vector<std::size_t> n_list;
    std::size_t replications = 1000;
    double alpha = 0.01;
    std::uint64_t seed = 0;
    KernelType kernel = KernelType::gaussian;
    BandwidthRule bandwidth_rule = BandwidthRule::cv;
};

struct CellResult {
    std::string metric;     // aise_cdf_x1e5 | aise_pdf_x1e5 | ks_rejection_pct | cvm_rejection_pct
    std::string null_spec;  // empty for AISE cells
    EstimatorSpec estimator;
    std::size_t n = 0;
    double value = 0.0;
    double mc_se = 0.0;
    std::size_t replications = 0;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<CellResult> cells;
    std::string config_hash;
    double wall_seconds = 0.0;
};

void validate_config(const ExperimentConfig& config);

ExperimentResult run_aise(const ExperimentConfig& config, unsigned threads = 0);
ExperimentResult run_rejection_curve(const ExperimentConfig& config, unsigned threads = 0);
ExperimentResult run_experiment(const ExperimentConfig& config, unsigned threads = 0);

// int (fn - truth)^2 by 1024-cell Simpson over the truth's [1e-6, 1-1e-6]
// quantile span, extended by two span-widths past each bounded support edge
// so that naive-estimator boundary leakage is counted. For cdf mode fn is
// compared against truth.cdf, for pdf mode against truth.pdf.
double integrated_squared_error(const std::function<double(double)>& fn,
                                const ReferenceDistribution& truth, ExperimentMode mode,
                                std::size_t cells = 1024);

// Estimator evaluation extended past a bounded support (exact 0/1 cdf tails,
// zero density) so it can feed integrated_squared_error.
double extended_value(const CdfEstimator& estimator, ExperimentMode mode, double x);

// Long-format CSV: mode,generator,null,estimator,transform,n,metric,value,mc_se,seed.
void write_csv(const std::vector<ExperimentResult>& results, std::ostream& out);

// CSV + per-figure SVG charts + JSON manifest under dir, named from basename.
// Returns the list of files written.
std::vector<std::string> emit_outputs(const std::vector<ExperimentResult>& results,
                                      const std::filesystem::path& dir, const std::string& basename);

// Canonical configurations reproducing the simulation study:
//   table1 / table2: AISE comparison of the DF / density estimators, n=50.
//   fig3 / fig4 / fig5: rejection curves for Weibull(2,2), log-normal and
//   Beta(1,3) data, n = 10..100.
std::vector<ExperimentConfig> reproduce_configs(std::string_view target, std::size_t replications,
                                                std::uint64_t seed);

// Runs a reproduce target and writes csv/svg/manifest (plus single-sample
// estimator overlay figures for the table targets) into out_dir.
std::vector<std::string> run_reproduce(std::string_view target, std::size_t replications,
                                       std::uint64_t seed, const std::filesystem::path& out_dir,
                                       unsigned threads = 0);

std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);

}  // namespace gof
