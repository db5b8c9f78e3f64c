// Diagonal-covariance Gaussian mixtures over (f_b, f_a), fitted by EM.
// Component count selection by BIC with k-fold cross-validation as an
// independent check, plus the mapping of components onto the four named
// dynamical classes.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tagdyn/rng.hpp"

namespace tagdyn {

// A point in the (f_b, f_a) plane.
struct Vec2 {
  double b = 0.0;
  double a = 0.0;
};

struct GaussianComponent {
  double weight = 0.0;
  Vec2 mean;
  Vec2 variance;  // per-axis, diagonal covariance
};

struct MixtureModel {
  std::vector<GaussianComponent> components;
  double log_likelihood = 0.0;
  size_t n_points = 0;
  // Per-iteration log-likelihood, including the value after the final step.
  std::vector<double> loglik_trace;
  // Iterations at which a starved component was re-seeded (rare; the EM
  // monotonicity guarantee does not cover these steps).
  std::vector<int> rescue_iterations;

  int component_count() const { return static_cast<int>(components.size()); }
  // Free parameters of a K-component diagonal model in 2-D: per component
  // two means, two variances and a weight, minus the weight-sum constraint.
  int free_parameters() const { return 5 * component_count() - 1; }
};

struct EmOptions {
  double tolerance = 1e-8;   // stop when the log-likelihood gain drops below
  int max_iterations = 500;
  double variance_floor = 1e-6;
};

enum class ClassLabel { kBefore, kAfter, kSymmetric, kPeakDay };

const char* class_label_name(ClassLabel label);
ClassLabel class_label_from_name(const std::string& name);

struct Assignment {
  std::string hashtag;
  Vec2 point;
  std::vector<double> posteriors;
  int component = 0;
  ClassLabel label = ClassLabel::kPeakDay;
  double uncertainty = 0.0;  // 1 - max posterior
};

// One EM run from a k-means++-style initialization drawn from `rng`.
// Components are returned in canonical order (ascending mean.b + mean.a).
// Throws DataError if K exceeds the point count or any input is non-finite.
MixtureModel em_fit(const std::vector<Vec2>& points, int k, Rng& rng,
                    const EmOptions& opts = {});

// Best of `restarts` runs by final log-likelihood.
MixtureModel fit_best(const std::vector<Vec2>& points, int k, int restarts,
                      uint64_t seed, const EmOptions& opts = {});

// 2*logL - p*ln(n); model selection maximizes this.
double bic(const MixtureModel& model);

struct BicRow {
  int k = 0;
  double log_likelihood = 0.0;
  int free_parameters = 0;
  double bic = 0.0;
};

struct SelectionResult {
  MixtureModel best;
  std::vector<BicRow> table;
};

// Fits every K in [k_min, k_max] with `restarts` initializations each and
// returns the BIC-maximal model (smallest K on ties) with the full table.
SelectionResult select_model(const std::vector<Vec2>& points, int k_min, int k_max,
                             int restarts, uint64_t seed, const EmOptions& opts = {});

struct CvRow {
  int k = 0;
  double mean_heldout_loglik = 0.0;  // per-point, averaged over folds
};

// Seeded random fold split; per K, the held-out per-point log density
// averaged over folds. Throws DataError when n_points < folds.
std::vector<CvRow> cross_validate(const std::vector<Vec2>& points, int k_min, int k_max,
                                  int folds, int restarts, uint64_t seed,
                                  const EmOptions& opts = {});

struct LabelRules {
  // Means with b + a below this are PeakDay.
  double peakday_sum = 0.25;
  // Otherwise Before/After when one coordinate exceeds `ratio` times the
  // other, else Symmetric.
  double ratio = 2.0;
};

struct Labeling {
  std::vector<ClassLabel> labels;  // one per component, same order
  bool duplicates = false;         // some label used more than once
};

Labeling label_components(const MixtureModel& model, const LabelRules& rules = {});

// Posterior responsibilities of `point` under the model; label of the
// argmax component, ties to the lowest index. Throws on non-finite input.
Assignment classify(const MixtureModel& model, const Labeling& labeling, Vec2 point);

// Log mixture density at a point (finite for any finite input).
double log_density(const MixtureModel& model, Vec2 point);

// Agreement between two flat clusterings, chance-corrected. Used to score
// recovered labels against generated ground truth.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

void write_model_json(const std::string& path, const MixtureModel& model,
                      const Labeling& labeling);
MixtureModel read_model_json(const std::string& path, Labeling* labeling = nullptr);

void write_assignments_csv(const std::string& path, const std::vector<Assignment>& rows);
std::vector<Assignment> read_assignments_csv(const std::string& path);

void write_bic_csv(const std::string& path, const std::vector<BicRow>& rows);
void write_cv_csv(const std::string& path, const std::vector<CvRow>& rows);

}  // namespace tagdyn
