#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hgeo {

enum class NmiNorm { ArithmeticMean, GeometricMean };

/// Normalized mutual information between two partitions, in [0, 1]:
/// mutual information divided by the arithmetic (default) or geometric
/// mean of the label entropies. Identical single-cluster partitions score
/// 1; otherwise a zero-entropy side scores 0. Invariant to renaming.
double nmi(const std::vector<int>& labels_a, const std::vector<int>& labels_b,
           NmiNorm norm = NmiNorm::ArithmeticMean);

/// The reproducible experiment suites. The table suites cluster freshly
/// generated datasets (one per run, seeded seed + run index) with each of
/// the suite's dissimilarities and score NMI against the generating
/// labels. kappa_fig samples quasi-triangle-ratio statistics and
/// convergence_fig traces the minimax geodesic walk against a
/// multi-restart reference.
enum class Suite {
    Table2,          // simplex clusters, k-means++ seeding
    Table3,          // simplex clusters, k-center
    Table4,          // positive measures, k-means++ seeding
    Table5,          // correlation matrices, k-means++ seeding
    Table6,          // SPD matrices, k-means++ seeding
    KappaFig,        // kappa1/kappa2 sampling over dimensions 1..10
    ConvergenceFig,  // geodesic walk error vs iteration count
};

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite s);

struct BenchmarkRow {
    nlohmann::json config;        // generator / algorithm parameters
    std::string metric;
    int runs = 0;
    double mean = 0.0;            // NMI mean (or the suite's headline stat)
    double stddev = 0.0;
    std::vector<double> per_run;  // raw per-run scores (empty for figures)
};

struct BenchmarkReport {
    std::string suite;
    std::uint64_t seed = 0;
    int runs = 0;
    std::vector<BenchmarkRow> rows;
};

/// Runs every configuration of the chosen suite for the given number of
/// runs. Independent runs execute in parallel on `threads` workers
/// (0 = hardware concurrency); results are deterministic for a given seed
/// regardless of scheduling.
BenchmarkReport run_benchmark(Suite suite, int runs, std::uint64_t seed, int threads = 0);

nlohmann::json report_to_json(const BenchmarkReport& report, bool include_per_run = false);

/// Plain-text table with one aligned row per (config, metric) pair.
std::string render_text_table(const BenchmarkReport& report);

/// Per-run scores as CSV: config, metric, run, score.
std::string report_to_csv(const BenchmarkReport& report);

} // namespace hgeo
