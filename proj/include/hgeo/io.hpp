#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hgeo/clustering.hpp"
#include "hgeo/datagen.hpp"
#include "hgeo/matrix_geometry.hpp"
#include "hgeo/simplex.hpp"

namespace hgeo {

/// Points: one CSV row per point, plain decimal coordinates, or a JSON
/// array of arrays. Readers funnel every row through the validating
/// constructors.
std::vector<SimplexPoint> read_simplex_points_csv(const std::filesystem::path& path);
std::vector<SimplexPoint> read_simplex_points_json(const std::filesystem::path& path);
std::vector<ConeVector> read_cone_vectors_csv(const std::filesystem::path& path);

void write_points_csv(const std::filesystem::path& path,
                      const std::vector<SimplexPoint>& points);
void write_points_csv(const std::filesystem::path& path,
                      const std::vector<ConeVector>& points);
nlohmann::json points_to_json(const std::vector<SimplexPoint>& points);

/// Matrices: JSON array of row-major nested arrays, or CSV blocks (one row
/// per line) separated by blank lines. Readers verify the SPD or
/// correlation invariants.
std::vector<SpdMatrix> read_spd_matrices_json(const std::filesystem::path& path);
std::vector<CorrelationMatrix> read_correlation_matrices_json(const std::filesystem::path& path);
std::vector<SpdMatrix> read_spd_matrices_csv(const std::filesystem::path& path);
void write_matrices_json(const std::filesystem::path& path,
                         const std::vector<SpdMatrix>& mats);
nlohmann::json matrix_to_json(const Eigen::MatrixXd& m);

/// Datasets: points file plus a JSON sidecar carrying labels, the spec
/// echo and the seed. The sidecar path is <points path> + ".meta.json".
std::filesystem::path dataset_sidecar_path(const std::filesystem::path& points_path);

void write_dataset(const std::filesystem::path& points_path,
                   const LabeledDataset<SimplexPoint>& data);
void write_dataset(const std::filesystem::path& points_path,
                   const LabeledDataset<ConeVector>& data);
void write_dataset(const std::filesystem::path& points_path,
                   const LabeledDataset<SpdMatrix>& data);
void write_dataset(const std::filesystem::path& points_path,
                   const LabeledDataset<CorrelationMatrix>& data);

LabeledDataset<SimplexPoint> read_simplex_dataset(const std::filesystem::path& points_path);
LabeledDataset<ConeVector> read_cone_dataset(const std::filesystem::path& points_path);
LabeledDataset<SpdMatrix> read_spd_dataset(const std::filesystem::path& points_path);

/// Clustering results serialize with labels, centers, objective,
/// iteration count and the seed that produced them.
nlohmann::json clustering_result_to_json(const ClusteringResult<SimplexPoint>& result);
nlohmann::json clustering_result_to_json(const ClusteringResult<ConeVector>& result);
nlohmann::json clustering_result_to_json(const ClusteringResult<SpdMatrix>& result);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

} // namespace hgeo
