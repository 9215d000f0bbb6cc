#include "hgeo/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hgeo/errors.hpp"

namespace hgeo {

namespace {

void check_positive(const std::vector<double>& raw, const char* what) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (!(raw[i] > kMinCoordinate)) {
            throw NonPositiveCoordinateError(
                std::string(what) + ": coordinate " + std::to_string(i) +
                " = " + std::to_string(raw[i]) + " is not strictly positive (min " +
                "1e-300)");
        }
    }
}

} // namespace

SimplexPoint::SimplexPoint(std::vector<double> raw) : coords_(std::move(raw)) {
    if (coords_.size() < 2)
        throw DimensionTooSmallError("SimplexPoint: need at least 2 coordinates");
    check_positive(coords_, "SimplexPoint");
    double total = 0.0;
    for (double x : coords_) total += x;
    for (double& x : coords_) x /= total;
}

ConeVector::ConeVector(std::vector<double> raw) : coords_(std::move(raw)) {
    if (coords_.empty())
        throw DimensionTooSmallError("ConeVector: need at least 1 coordinate");
    check_positive(coords_, "ConeVector");
}

SimplexPoint ConeVector::normalized() const {
    return SimplexPoint(coords_);
}

NormedPoint::NormedPoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw DimensionTooSmallError("NormedPoint: need at least 2 coordinates");
    double total = 0.0;
    for (double x : coords_) total += x;
    if (std::abs(total) > 1e-10)
        throw ZeroSumViolationError("NormedPoint: coordinates sum to " +
                                    std::to_string(total) + ", expected 0");
}

SimplexPoint make_simplex_point(std::vector<double> raw) {
    return SimplexPoint(std::move(raw));
}

NormedPoint simplex_to_normed(const SimplexPoint& p) {
    const auto& lam = p.coords();
    std::vector<double> v(lam.size());
    double mean_log = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) {
        v[i] = std::log(lam[i]);
        mean_log += v[i];
    }
    mean_log /= static_cast<double>(lam.size());
    for (double& x : v) x -= mean_log;
    return NormedPoint(std::move(v));
}

SimplexPoint normed_to_simplex(const NormedPoint& v) {
    const auto& x = v.coords();
    double hi = *std::max_element(x.begin(), x.end());
    std::vector<double> lam(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) lam[i] = std::exp(x[i] - hi);
    return SimplexPoint(std::move(lam));
}

double variation_norm(const std::vector<double>& x) {
    auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo;
}

double hilbert_norm(const NormedPoint& v) {
    return variation_norm(v.coords());
}

std::vector<double> natural_params(const SimplexPoint& p) {
    const auto& lam = p.coords();
    std::vector<double> theta(lam.size() - 1);
    double log0 = std::log(lam[0]);
    for (std::size_t i = 1; i < lam.size(); ++i)
        theta[i - 1] = std::log(lam[i]) - log0;
    return theta;
}

} // namespace hgeo
