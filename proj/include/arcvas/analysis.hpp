#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "arcvas/grid.hpp"
#include "arcvas/vae.hpp"

namespace arcvas {

inline constexpr std::size_t kFeatureCount = 18;

/// Complexity and procedure features of one item. "_x" fields describe the
/// example inputs, "_y" fields the example outputs.
struct ItemFeatures {
    double number_examples = 0;
    double size_differences = 0;    // example inputs differ in size
    double grid_size_change = 0;    // some example output differs in size from its input
    double grid_size_change_t = 0;  // test input size matches no example input
    double color_change = 0;        // some example output uses a different color set than its input
    double color_change_t = 0;      // test input uses a color absent from all example inputs
    double average_size_x = 0;      // mean cell count
    double average_size_y = 0;
    double average_colors_x = 0;    // mean distinct non-black colors
    double average_colors_y = 0;
    double average_roc_x = 0;       // mean fraction of differing adjacent cells
    double average_roc_y = 0;
    double average_zeros_x = 0;     // mean black fraction
    double average_zeros_y = 0;
    double average_similarity = 0;  // mean matching-cell fraction of canonical input/output pairs
    double average_scale_x = 0;     // mean upscaling factor
    double average_scale_y = 0;
    double average_reconstruction = 0;

    std::array<double, kFeatureCount> values() const;
};

/// Column names in the order of ItemFeatures::values().
const std::array<std::string, kFeatureCount>& feature_names();

/// Fraction of horizontally and vertically adjacent cell pairs whose colors
/// differ; 0 for a 1x1 grid.
double rate_of_change(const Grid& g);

ItemFeatures extract_features(const VaeParams& params, const Item& item);

/// Features without the reconstruction term (left at 0); needs no model.
ItemFeatures extract_item_features(const Item& item);

std::string features_csv(std::span<const std::string> ids, std::span<const ItemFeatures> rows);

struct Design {
    Eigen::MatrixXd x;
    std::vector<std::string> names;
    std::vector<std::string> dropped; // constant columns
};

/// Centers each column and scales it to unit (sample) standard deviation;
/// constant columns are dropped.
Design standardize_columns(const Eigen::MatrixXd& raw, std::span<const std::string> names);
Eigen::VectorXd standardize(const Eigen::VectorXd& y);

struct Coefficient {
    std::string name;
    double estimate = 0;
    double se = 0;
    double ci_low = 0;
    double ci_high = 0;
    double t = 0;
    double p = 1;
};

struct RegressionResult {
    std::vector<Coefficient> coefficients; // in column order
    double intercept = 0;
    double r2 = 0;
    double sigma = 0;
    std::size_t n = 0;
    std::size_t p = 0;
};

nlohmann::json to_json(const RegressionResult& r);
/// Rows sorted by ascending p-value.
std::string regression_csv(const RegressionResult& r);

/// OLS with an intercept. Standard errors from sigma^2 (X'X)^-1 with
/// n - p - 1 degrees of freedom; two-sided t-test p-values and 95% intervals.
/// Throws RankError naming collinear columns.
RegressionResult ols_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, std::span<const std::string> names);

struct LassoResult {
    std::vector<double> coefficients;
    std::vector<std::string> selected;
    double intercept = 0;
    double penalty = 0;
    int iterations = 0;
};

nlohmann::json to_json(const LassoResult& r);

/// Coordinate descent on 1/(2n) ||y - b0 - X b||^2 + penalty ||b||_1 with an
/// unpenalized intercept; stops when no coefficient moves by tolerance or more.
LassoResult lasso_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y, std::span<const std::string> names,
                      double penalty = 1.0, int max_iterations = 100000, double tolerance = 1e-6);

/// Forward selection: repeatedly add the feature with the smallest joint-fit
/// p-value while that p-value is below the threshold.
std::vector<std::string> stepwise_forward(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                          std::span<const std::string> names, double p_threshold = 0.01);

} // namespace arcvas
