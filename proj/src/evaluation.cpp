#include "hgeo/evaluation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "hgeo/clustering.hpp"
#include "hgeo/datagen.hpp"
#include "hgeo/distances.hpp"
#include "hgeo/errors.hpp"
#include "hgeo/metrics.hpp"

namespace hgeo {

namespace {

using nlohmann::json;

double entropy(const std::map<int, std::size_t>& counts, double n) {
    double h = 0.0;
    for (const auto& [label, c] : counts) {
        double p = static_cast<double>(c) / n;
        h -= p * std::log(p);
    }
    return h;
}

} // namespace

double nmi(const std::vector<int>& labels_a, const std::vector<int>& labels_b,
           NmiNorm norm) {
    if (labels_a.size() != labels_b.size() || labels_a.empty())
        throw LengthMismatchError("nmi: label vectors must have equal positive length");
    const double n = static_cast<double>(labels_a.size());
    std::map<int, std::size_t> ca, cb;
    std::map<std::pair<int, int>, std::size_t> joint;
    for (std::size_t i = 0; i < labels_a.size(); ++i) {
        ++ca[labels_a[i]];
        ++cb[labels_b[i]];
        ++joint[{labels_a[i], labels_b[i]}];
    }
    double ha = entropy(ca, n);
    double hb = entropy(cb, n);
    if (ha == 0.0 && hb == 0.0) return 1.0;  // both single-cluster: identical
    if (ha == 0.0 || hb == 0.0) return 0.0;
    double mi = 0.0;
    for (const auto& [ab, c] : joint) {
        double pij = static_cast<double>(c) / n;
        double pi = static_cast<double>(ca[ab.first]) / n;
        double pj = static_cast<double>(cb[ab.second]) / n;
        mi += pij * std::log(pij / (pi * pj));
    }
    double denom = norm == NmiNorm::ArithmeticMean ? 0.5 * (ha + hb) : std::sqrt(ha * hb);
    double v = mi / denom;
    return std::clamp(v, 0.0, 1.0);
}

Suite suite_from_name(const std::string& name) {
    if (name == "table2") return Suite::Table2;
    if (name == "table3") return Suite::Table3;
    if (name == "table4") return Suite::Table4;
    if (name == "table5") return Suite::Table5;
    if (name == "table6") return Suite::Table6;
    if (name == "kappa_fig" || name == "kappa") return Suite::KappaFig;
    if (name == "convergence_fig" || name == "convergence") return Suite::ConvergenceFig;
    throw UnknownSuiteError("unknown suite '" + name +
                            "'; valid: table2 table3 table4 table5 table6 kappa_fig "
                            "convergence_fig");
}

std::string suite_name(Suite s) {
    switch (s) {
        case Suite::Table2: return "table2";
        case Suite::Table3: return "table3";
        case Suite::Table4: return "table4";
        case Suite::Table5: return "table5";
        case Suite::Table6: return "table6";
        case Suite::KappaFig: return "kappa_fig";
        case Suite::ConvergenceFig: return "convergence_fig";
    }
    return "?";
}

namespace {

struct MeanStd {
    double mean = 0.0;
    double stddev = 0.0;
};

MeanStd mean_std(const std::vector<double>& v) {
    MeanStd out;
    if (v.empty()) return out;
    for (double x : v) out.mean += x;
    out.mean /= static_cast<double>(v.size());
    if (v.size() > 1) {
        double acc = 0.0;
        for (double x : v) acc += (x - out.mean) * (x - out.mean);
        out.stddev = std::sqrt(acc / static_cast<double>(v.size() - 1));
    }
    return out;
}

/// Runs fn(run_index) for run_index in [0, runs) on a fixed-size worker
/// pool. fn must only touch its own run's slot, which keeps the reduction
/// deterministic.
void parallel_runs(int runs, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, runs));
    if (threads == 1) {
        for (int r = 0; r < runs; ++r) fn(r);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int r = next.fetch_add(1);
                if (r >= runs) return;
                fn(r);
            }
        });
    }
    for (auto& th : pool) th.join();
}

/// One suite configuration: a dataset factory plus a labeling procedure
/// per metric. Scores land in per-metric vectors indexed by run.
template <typename P>
void score_suite_rows(BenchmarkReport& report, const json& config, int runs, int threads,
                      const std::vector<std::string>& metric_names,
                      const std::function<LabeledDataset<P>(std::uint64_t)>& make_dataset,
                      const std::function<std::vector<int>(const LabeledDataset<P>&,
                                                           const std::string&, Rng&)>& label) {
    std::vector<std::vector<double>> scores(metric_names.size(),
                                            std::vector<double>(runs, 0.0));
    parallel_runs(runs, threads, [&](int r) {
        auto dataset = make_dataset(report.seed + static_cast<std::uint64_t>(r));
        for (std::size_t m = 0; m < metric_names.size(); ++m) {
            Rng rng(report.seed + static_cast<std::uint64_t>(r));
            auto labels = label(dataset, metric_names[m], rng);
            scores[m][r] = nmi(dataset.labels, labels);
        }
    });
    for (std::size_t m = 0; m < metric_names.size(); ++m) {
        BenchmarkRow row;
        row.config = config;
        row.metric = metric_names[m];
        row.runs = runs;
        auto ms = mean_std(scores[m]);
        row.mean = ms.mean;
        row.stddev = ms.stddev;
        row.per_run = std::move(scores[m]);
        report.rows.push_back(std::move(row));
    }
}

void run_table2(BenchmarkReport& report, int runs, int threads, bool kcenter) {
    const std::vector<std::string> metrics = {"fhr", "kl", "hilbert", "euc", "l1"};
    for (double sigma : {0.5, 0.9}) {
        SimplexClusterSpec spec;
        spec.k = 3;
        spec.n = 50;
        spec.d = 9;
        spec.sigma = sigma;
        spec.noise = NoiseKind::Gaussian;
        json config{{"k", spec.k},       {"n", spec.n},
                    {"d", spec.d},       {"sigma", spec.sigma},
                    {"generator", 1},    {"algo", kcenter ? "kcenter" : "kmeanspp"},
                    {"refine_rounds", 0}};
        if (kcenter) {
            config["rounds"] = 10;
            config["walk_iterations"] = 100;
        }
        score_suite_rows<SimplexPoint>(
            report, config, runs, threads, metrics,
            [spec](std::uint64_t seed) {
                auto s = spec;
                s.seed = seed;
                return gen_simplex_clusters(s);
            },
            [kcenter](const LabeledDataset<SimplexPoint>& data, const std::string& name,
                      Rng& rng) {
                auto metric = simplex_metric_from_name(name);
                auto d = make_simplex_dissimilarity(metric);
                if (!kcenter)
                    return kmeanspp_cluster(data.points, 3, d, rng, 0).labels;
                auto cut = make_simplex_geodesic_cut(metric);
                return kcenter_cluster(data.points, 3, d, rng, 10, cut, 100).labels;
            });
    }
}

void run_table4(BenchmarkReport& report, int runs, int threads) {
    const std::vector<std::string> metrics = {"ekl", "rekl", "sekl", "birkhoff"};
    for (std::size_t k : {3, 5}) {
        for (double sigma : {0.5, 0.9}) {
            SimplexClusterSpec spec;
            spec.k = k;
            spec.n = 50;
            spec.d = 9;  // ten-coordinate positive measures
            spec.sigma = sigma;
            json config{{"k", k}, {"n", spec.n}, {"d", spec.d}, {"sigma", sigma},
                        {"algo", "kmeanspp"}};
            score_suite_rows<ConeVector>(
                report, config, runs, threads, metrics,
                [spec](std::uint64_t seed) {
                    auto s = spec;
                    s.seed = seed;
                    return gen_positive_measures(s);
                },
                [k](const LabeledDataset<ConeVector>& data, const std::string& name,
                    Rng& rng) {
                    auto d = make_cone_dissimilarity(cone_metric_from_name(name));
                    return kmeanspp_cluster(data.points, k, d, rng, 0).labels;
                });
        }
    }
}

void run_table5(BenchmarkReport& report, int runs, int threads) {
    const std::vector<std::string> metrics = {"hilbert", "euc", "l1", "sqrtlogdet"};
    for (double nu2 : {10.0, 30.0, 50.0}) {
        ElliptopeClusterSpec spec;
        spec.k = 3;
        spec.n = 100;
        spec.d = 3;
        spec.nu1 = 4.0;
        spec.nu2 = nu2;
        json config{{"k", spec.k}, {"n", spec.n}, {"d", spec.d},
                    {"nu1", spec.nu1}, {"nu2", nu2}, {"algo", "kmeanspp"}};
        score_suite_rows<CorrelationMatrix>(
            report, config, runs, threads, metrics,
            [spec](std::uint64_t seed) {
                auto s = spec;
                s.seed = seed;
                return gen_elliptope_clusters(s);
            },
            [](const LabeledDataset<CorrelationMatrix>& data, const std::string& name,
               Rng& rng) {
                auto base = make_matrix_dissimilarity(matrix_metric_from_name(name));
                Dissimilarity<CorrelationMatrix> d{
                    [base](const CorrelationMatrix& a, const CorrelationMatrix& b) {
                        return base.fn(a, b);
                    },
                    base.symmetric, base.squared_for_kmeans};
                return kmeanspp_cluster(data.points, 3, d, rng, 0).labels;
            });
    }
}

void run_table6(BenchmarkReport& report, int runs, int threads) {
    const std::vector<std::string> metrics = {"logdet", "rlogdet", "slogdet", "thompson"};
    for (double shape : {2.0, 5.0}) {
        for (double sigma : {0.1, 0.3}) {
            PsdClusterSpec spec;
            spec.k = 5;
            spec.n = 250;
            spec.d = 2;
            spec.gamma_shape = shape;
            spec.gamma_scale = 1.0;
            spec.sigma = sigma;
            json config{{"k", spec.k},          {"n", spec.n},
                        {"d", spec.d},          {"gamma_shape", shape},
                        {"gamma_scale", 1.0},   {"sigma", sigma},
                        {"algo", "kmeanspp"}};
            score_suite_rows<SpdMatrix>(
                report, config, runs, threads, metrics,
                [spec](std::uint64_t seed) {
                    auto s = spec;
                    s.seed = seed;
                    return gen_psd_clusters(s);
                },
                [](const LabeledDataset<SpdMatrix>& data, const std::string& name,
                   Rng& rng) {
                    auto d = make_matrix_dissimilarity(matrix_metric_from_name(name));
                    return kmeanspp_cluster(data.points, 5, d, rng, 0).labels;
                });
        }
    }
}

void run_kappa_fig(BenchmarkReport& report, int samples, int threads) {
    struct Entry {
        const char* name;
        SimplexMetric metric;
        bool squared;
    };
    // the seeding analysis squares metric distances; the symmetrized KL is
    // averaged over the two directions instead
    const std::vector<Entry> entries = {
        {"fhr^2", SimplexMetric::Fhr, true},
        {"hilbert^2", SimplexMetric::Hilbert, true},
        {"l1^2", SimplexMetric::L1, true},
        {"skl/2", SimplexMetric::SymKl, false},
    };
    std::vector<json> configs;
    std::vector<KappaStats> stats((10) * entries.size());
    std::vector<int> dims;
    for (int d = 1; d <= 10; ++d) dims.push_back(d);
    parallel_runs(static_cast<int>(dims.size()), threads, [&](int di) {
        int d = dims[di];
        for (std::size_t e = 0; e < entries.size(); ++e) {
            auto base = make_simplex_dissimilarity(entries[e].metric);
            Dissimilarity<SimplexPoint> used;
            if (entries[e].squared) {
                used = {[base](const SimplexPoint& a, const SimplexPoint& b) {
                            double v = base.fn(a, b);
                            return v * v;
                        },
                        base.symmetric, false};
            } else if (entries[e].metric == SimplexMetric::SymKl) {
                used = {[base](const SimplexPoint& a, const SimplexPoint& b) {
                            return 0.5 * base.fn(a, b);
                        },
                        base.symmetric, false};
            } else {
                used = base;
            }
            Rng rng(report.seed + static_cast<std::uint64_t>(1000 * d) +
                    static_cast<std::uint64_t>(e));
            stats[di * entries.size() + e] =
                estimate_kappa(used, static_cast<std::size_t>(d),
                               static_cast<std::size_t>(samples), rng);
        }
    });
    for (std::size_t di = 0; di < dims.size(); ++di) {
        for (std::size_t e = 0; e < entries.size(); ++e) {
            const auto& ks = stats[di * entries.size() + e];
            BenchmarkRow row;
            row.config = json{{"d", dims[di]},
                              {"kappa1_max", ks.kappa1.max},
                              {"kappa1_min", ks.kappa1.min},
                              {"kappa2_max", ks.kappa2.max}};
            row.metric = entries[e].name;
            row.runs = samples;
            row.mean = ks.kappa1.mean;
            row.stddev = ks.kappa1.std;
            report.rows.push_back(std::move(row));
        }
    }
}

void run_convergence_fig(BenchmarkReport& report, int restarts, int threads) {
    // 100 uniform points on the 9-dimensional simplex; walk error measured
    // against the best center found by long multi-restart walks.
    Rng data_rng(report.seed);
    std::vector<SimplexPoint> points;
    points.reserve(100);
    for (int i = 0; i < 100; ++i)
        points.emplace_back(data_rng.dirichlet_uniform(10));
    auto d = make_simplex_dissimilarity(SimplexMetric::Hilbert);
    auto cut = make_simplex_geodesic_cut(SimplexMetric::Hilbert);

    auto radius_about = [&](const SimplexPoint& c) {
        double worst = 0.0;
        for (const auto& p : points) worst = std::max(worst, rho_hilbert(p, c));
        return worst;
    };

    restarts = std::max(1, restarts);
    std::vector<SimplexPoint> candidates;
    std::vector<double> radii(static_cast<std::size_t>(restarts), 0.0);
    candidates.reserve(static_cast<std::size_t>(restarts));
    for (int s = 0; s < restarts; ++s) candidates.push_back(points[0]);
    parallel_runs(restarts, threads, [&](int s) {
        // rotate the start point between restarts
        std::vector<SimplexPoint> rotated(points.begin() + (s * 13) % 100, points.end());
        rotated.insert(rotated.end(), points.begin(), points.begin() + (s * 13) % 100);
        candidates[static_cast<std::size_t>(s)] = minimax_center(rotated, d, cut, 20000);
        radii[static_cast<std::size_t>(s)] =
            radius_about(candidates[static_cast<std::size_t>(s)]);
    });
    std::size_t best = static_cast<std::size_t>(
        std::min_element(radii.begin(), radii.end()) - radii.begin());
    const SimplexPoint reference = candidates[best];
    const double reference_radius = radii[best];

    for (int t : {10, 100, 1000}) {
        auto c = minimax_center(points, d, cut, t);
        BenchmarkRow row;
        row.config = json{{"T", t},
                          {"reference_radius", reference_radius},
                          {"restarts", restarts}};
        row.metric = "hilbert";
        row.runs = 1;
        row.mean = rho_hilbert(c, reference) / reference_radius;
        row.stddev = 0.0;
        report.rows.push_back(std::move(row));
    }
}

} // namespace

BenchmarkReport run_benchmark(Suite suite, int runs, std::uint64_t seed, int threads) {
    if (runs < 1) throw std::invalid_argument("run_benchmark: runs must be positive");
    BenchmarkReport report;
    report.suite = suite_name(suite);
    report.seed = seed;
    report.runs = runs;
    switch (suite) {
        case Suite::Table2: run_table2(report, runs, threads, false); break;
        case Suite::Table3: run_table2(report, runs, threads, true); break;
        case Suite::Table4: run_table4(report, runs, threads); break;
        case Suite::Table5: run_table5(report, runs, threads); break;
        case Suite::Table6: run_table6(report, runs, threads); break;
        case Suite::KappaFig: run_kappa_fig(report, runs, threads); break;
        case Suite::ConvergenceFig: run_convergence_fig(report, runs, threads); break;
    }
    return report;
}

json report_to_json(const BenchmarkReport& report, bool include_per_run) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r{{"config", row.config},
               {"metric", row.metric},
               {"runs", row.runs},
               {"nmi_mean", row.mean},
               {"nmi_std", row.stddev}};
        if (include_per_run) r["per_run"] = row.per_run;
        rows.push_back(std::move(r));
    }
    return json{{"suite", report.suite}, {"seed", report.seed}, {"rows", rows}};
}

std::string render_text_table(const BenchmarkReport& report) {
    std::ostringstream out;
    out << "suite: " << report.suite << "  seed: " << report.seed << "\n";
    std::string last_config;
    for (const auto& row : report.rows) {
        std::string cfg = row.config.dump();
        if (cfg != last_config) {
            out << cfg << "\n";
            last_config = cfg;
        }
        char buf[96];
        std::snprintf(buf, sizeof(buf), "  %-12s %0.2f +- %0.2f  (%d runs)\n",
                      row.metric.c_str(), row.mean, row.stddev, row.runs);
        out << buf;
    }
    return out.str();
}

std::string report_to_csv(const BenchmarkReport& report) {
    std::ostringstream out;
    out << "config,metric,run,score\n";
    for (const auto& row : report.rows) {
        std::string cfg = row.config.dump();
        for (char& c : cfg)
            if (c == ',') c = ';';
        for (std::size_t r = 0; r < row.per_run.size(); ++r) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.9g", row.per_run[r]);
            out << '"' << cfg << "\"," << row.metric << ',' << r << ',' << buf << "\n";
        }
    }
    return out.str();
}

} // namespace hgeo
