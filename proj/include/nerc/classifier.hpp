#ifndef NERC_CLASSIFIER_HPP
#define NERC_CLASSIFIER_HPP

// Multinomial Naive Bayes over tf-idf rows. Scoring runs in log space: raw
// probability products underflow at real vocabulary sizes, and the argmax is
// unchanged. Fractional feature weights feed the count sums directly.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "nerc/errors.hpp"
#include "nerc/sparse.hpp"

namespace nerc {

/// Per-class log priors and per-class per-feature log likelihoods.
/// Immutable after fit; concurrent prediction on a shared model is safe.
class NbModel {
 public:
  /// Estimates priors and additively smoothed feature likelihoods:
  ///   prior[j]       = count(y = j) / N
  ///   likelihood[j][i] = (S_ji + alpha) / (S_j + alpha * n_features)
  /// with S_ji the sum of feature-i weights over rows of class j. Classes
  /// without training rows get a zero prior (-inf in log space) and uniform
  /// likelihoods rather than an error, so sparse cross-validation folds can
  /// miss rare classes without aborting.
  ///
  /// Floating-point sums run in a fixed order (rows ascending, features
  /// ascending), so identical input gives a bit-identical model.
  static NbModel fit(const TfIdfMatrix& X, const std::vector<int>& y, double alpha,
                     int n_classes) {
    if (!(alpha > 0.0))
      throw ArgumentError("smoothing constant must be positive, got " +
                          std::to_string(alpha));
    if (n_classes < 1) throw ArgumentError("need at least one class");
    if (X.rows.empty()) throw FitError("cannot fit a classifier on zero rows");
    if (X.rows.size() != y.size())
      throw FitError("row/label count mismatch: " + std::to_string(X.rows.size()) +
                     " rows vs " + std::to_string(y.size()) + " labels");
    if (X.dimension == 0) throw ArgumentError("feature dimension must be positive");

    const auto n_features = X.dimension;
    const auto n_cls = static_cast<std::size_t>(n_classes);

    std::vector<std::size_t> class_count(n_cls, 0);
    for (std::size_t r = 0; r < y.size(); ++r) {
      if (y[r] < 0 || y[r] >= n_classes)
        throw FitError("label " + std::to_string(y[r]) + " at row " +
                       std::to_string(r) + " is outside [0, " +
                       std::to_string(n_classes) + ")");
      ++class_count[static_cast<std::size_t>(y[r])];
    }

    std::vector<std::vector<double>> weight_sum(n_cls,
                                                std::vector<double>(n_features, 0.0));
    for (std::size_t r = 0; r < X.rows.size(); ++r) {
      auto& sums = weight_sum[static_cast<std::size_t>(y[r])];
      for (const auto& e : X.rows[r].entries) {
        if (e.weight < 0.0)
          throw FitError("negative feature weight at row " + std::to_string(r));
        sums[e.column] += e.weight;
      }
    }

    NbModel m;
    m.n_classes_ = n_classes;
    m.n_features_ = n_features;
    m.alpha_ = alpha;
    m.log_prior_.resize(n_cls);
    m.log_likelihood_.resize(n_cls);
    const double n_rows = static_cast<double>(X.rows.size());
    for (std::size_t j = 0; j < n_cls; ++j) {
      m.log_prior_[j] = class_count[j] == 0
                            ? -std::numeric_limits<double>::infinity()
                            : std::log(static_cast<double>(class_count[j]) / n_rows);
      double class_total = 0.0;
      for (std::size_t i = 0; i < n_features; ++i) class_total += weight_sum[j][i];
      auto& ll = m.log_likelihood_[j];
      ll.resize(n_features);
      const double denom = class_total + alpha * static_cast<double>(n_features);
      for (std::size_t i = 0; i < n_features; ++i)
        ll[i] = std::log((weight_sum[j][i] + alpha) / denom);
    }
    return m;
  }

  /// Restores a fitted model verbatim (model load).
  static NbModel from_parts(std::vector<double> log_prior,
                            std::vector<std::vector<double>> log_likelihood,
                            std::size_t n_features, double alpha) {
    if (log_prior.empty() || log_prior.size() != log_likelihood.size())
      throw ArgumentError("prior/likelihood class count mismatch");
    for (const auto& row : log_likelihood)
      if (row.size() != n_features)
        throw ArgumentError("likelihood row width does not match feature count");
    NbModel m;
    m.n_classes_ = static_cast<int>(log_prior.size());
    m.n_features_ = n_features;
    m.alpha_ = alpha;
    m.log_prior_ = std::move(log_prior);
    m.log_likelihood_ = std::move(log_likelihood);
    return m;
  }

  int n_classes() const noexcept { return n_classes_; }
  std::size_t n_features() const noexcept { return n_features_; }
  double alpha() const noexcept { return alpha_; }
  const std::vector<double>& log_prior() const noexcept { return log_prior_; }
  const std::vector<std::vector<double>>& log_likelihood() const noexcept {
    return log_likelihood_;
  }

 private:
  NbModel() = default;

  int n_classes_ = 0;
  std::size_t n_features_ = 0;
  double alpha_ = 1.0;
  std::vector<double> log_prior_;
  std::vector<std::vector<double>> log_likelihood_;
};

/// Label plus the unnormalized log posterior per class.
struct Prediction {
  int label = 0;
  std::vector<double> log_scores;
};

/// Unnormalized log posterior per class:
///   score[j] = log prior[j] + sum_i x_i * log likelihood[j][i]
/// The evidence term is a shared constant and is left out.
inline std::vector<double> predict_log_scores(const NbModel& model,
                                              const SparseVector& x) {
  if (x.dimension != model.n_features())
    throw ArgumentError("feature dimension mismatch: vector has " +
                        std::to_string(x.dimension) + ", model expects " +
                        std::to_string(model.n_features()));
  const auto n_cls = static_cast<std::size_t>(model.n_classes());
  std::vector<double> scores(n_cls);
  for (std::size_t j = 0; j < n_cls; ++j) {
    const auto& ll = model.log_likelihood()[j];
    double s = model.log_prior()[j];
    for (const auto& e : x.entries) s += e.weight * ll[e.column];
    scores[j] = s;
  }
  return scores;
}

/// Argmax of predict_log_scores; ties break to the lowest label index.
inline Prediction predict(const NbModel& model, const SparseVector& x) {
  Prediction p;
  p.log_scores = predict_log_scores(model, x);
  p.label = static_cast<int>(std::distance(
      p.log_scores.begin(),
      std::max_element(p.log_scores.begin(), p.log_scores.end())));
  return p;
}

/// Per-row predict; output order matches input order.
inline std::vector<Prediction> predict_batch(const NbModel& model,
                                             const TfIdfMatrix& X) {
  std::vector<Prediction> out;
  out.reserve(X.rows.size());
  for (const auto& row : X.rows) out.push_back(predict(model, row));
  return out;
}

}  // namespace nerc

#endif  // NERC_CLASSIFIER_HPP
