#ifndef NERC_EVALUATION_HPP
#define NERC_EVALUATION_HPP

// Per-class precision/recall/F1 scoring and k-fold cross-validation.

#include <algorithm>
#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "nerc/classifier.hpp"
#include "nerc/corpus.hpp"
#include "nerc/errors.hpp"
#include "nerc/tagset.hpp"
#include "nerc/vectorizer.hpp"

namespace nerc {

/// Raw true/false positive/negative tallies per class.
struct ClassCounts {
  std::vector<std::size_t> tp;
  std::vector<std::size_t> fp;
  std::vector<std::size_t> fn;
  std::vector<std::size_t> support;  // gold occurrences

  explicit ClassCounts(std::size_t n_classes = 0)
      : tp(n_classes, 0), fp(n_classes, 0), fn(n_classes, 0), support(n_classes, 0) {}

  std::size_t n_classes() const noexcept { return tp.size(); }

  /// Pools counts from another evaluation (used to aggregate CV folds).
  ClassCounts& operator+=(const ClassCounts& other) {
    if (other.n_classes() != n_classes())
      throw ArgumentError("cannot pool counts over differing class counts");
    for (std::size_t c = 0; c < n_classes(); ++c) {
      tp[c] += other.tp[c];
      fp[c] += other.fp[c];
      fn[c] += other.fn[c];
      support[c] += other.support[c];
    }
    return *this;
  }
};

/// Tallies predictions against gold labels position by position.
inline ClassCounts count_labels(const std::vector<int>& predicted,
                                const std::vector<int>& gold, int n_classes) {
  if (predicted.size() != gold.size())
    throw ArgumentError("predicted/gold length mismatch: " +
                        std::to_string(predicted.size()) + " vs " +
                        std::to_string(gold.size()));
  ClassCounts counts(static_cast<std::size_t>(n_classes));
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const int p = predicted[i];
    const int g = gold[i];
    if (p < 0 || p >= n_classes || g < 0 || g >= n_classes)
      throw ArgumentError("label out of range at position " + std::to_string(i));
    ++counts.support[static_cast<std::size_t>(g)];
    if (p == g) {
      ++counts.tp[static_cast<std::size_t>(g)];
    } else {
      ++counts.fp[static_cast<std::size_t>(p)];
      ++counts.fn[static_cast<std::size_t>(g)];
    }
  }
  return counts;
}

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
};

/// Per-class metrics plus the support-weighted averages, macro averages and
/// accuracy over one evaluation.
struct ClassificationReport {
  std::vector<ClassMetrics> per_class;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  std::size_t total_support = 0;
};

/// Precision/recall with a zero denominator are defined as 0, matching how
/// support-0 classes are reported.
inline ClassificationReport make_report(const ClassCounts& counts) {
  ClassificationReport rep;
  const std::size_t n = counts.n_classes();
  rep.per_class.resize(n);
  std::size_t correct = 0;
  for (std::size_t c = 0; c < n; ++c) {
    ClassMetrics& m = rep.per_class[c];
    const double tp = static_cast<double>(counts.tp[c]);
    const std::size_t p_den = counts.tp[c] + counts.fp[c];
    const std::size_t r_den = counts.tp[c] + counts.fn[c];
    m.precision = p_den == 0 ? 0.0 : tp / static_cast<double>(p_den);
    m.recall = r_den == 0 ? 0.0 : tp / static_cast<double>(r_den);
    m.f1 = (m.precision + m.recall) > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    m.support = counts.support[c];
    rep.total_support += m.support;
    correct += counts.tp[c];

    rep.weighted_precision += static_cast<double>(m.support) * m.precision;
    rep.weighted_recall += static_cast<double>(m.support) * m.recall;
    rep.weighted_f1 += static_cast<double>(m.support) * m.f1;
    rep.macro_precision += m.precision;
    rep.macro_recall += m.recall;
    rep.macro_f1 += m.f1;
  }
  if (rep.total_support > 0) {
    const double total = static_cast<double>(rep.total_support);
    rep.weighted_precision /= total;
    rep.weighted_recall /= total;
    rep.weighted_f1 /= total;
    rep.accuracy = static_cast<double>(correct) / total;
  }
  if (n > 0) {
    rep.macro_precision /= static_cast<double>(n);
    rep.macro_recall /= static_cast<double>(n);
    rep.macro_f1 /= static_cast<double>(n);
  }
  return rep;
}

/// One cross-validation fold's scores.
struct FoldResult {
  int fold_index = 0;  // 1-based, as printed
  ClassificationReport report;
  std::size_t support = 0;
};

struct CrossValidation {
  std::vector<FoldResult> folds;
  ClassificationReport aggregate;  // over counts pooled across folds
};

/// Runs k-fold cross-validation over the development corpus: per fold, fits
/// a vectorizer and classifier on the train part, predicts the held-out
/// part, and scores it. The aggregate report pools raw counts over all
/// folds, so every development token is scored exactly once.
inline CrossValidation cross_validate(const Corpus& dev, int k, double alpha,
                                      int n_classes) {
  const std::vector<Fold> folds = k_folds(dev, k);
  CrossValidation cv;
  ClassCounts pooled(static_cast<std::size_t>(n_classes));
  for (std::size_t i = 0; i < folds.size(); ++i) {
    try {
      const Fold& fold = folds[i];
      const FittedVectorizer fv = FittedVectorizer::fit(surfaces_of(fold.train));
      const NbModel model = NbModel::fit(fv.transform(surfaces_of(fold.train)),
                                         labels_of(fold.train), alpha, n_classes);
      const std::vector<Prediction> predictions =
          predict_batch(model, fv.transform(surfaces_of(fold.devtest)));
      std::vector<int> predicted;
      predicted.reserve(predictions.size());
      for (const auto& p : predictions) predicted.push_back(p.label);
      const ClassCounts counts =
          count_labels(predicted, labels_of(fold.devtest), n_classes);
      pooled += counts;
      cv.folds.push_back(FoldResult{static_cast<int>(i) + 1, make_report(counts),
                                    fold.devtest.size()});
    } catch (const Error& e) {
      throw FitError("fold " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  cv.aggregate = make_report(pooled);
  return cv;
}

namespace detail {

inline std::string fixed2(double v) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << v;
  return os.str();
}

/// Pads cell rows into a fixed-width table. `right_from` marks the first
/// right-aligned (numeric) column.
inline std::string layout_table(const std::vector<std::vector<std::string>>& rows,
                                std::size_t right_from) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) line += "  ";
      const std::size_t pad = width[c] - row[c].size();
      if (c >= right_from)
        line += std::string(pad, ' ') + row[c];
      else
        line += row[c] + std::string(pad, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

inline std::string join_tsv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) os << '\t';
      os << row[c];
    }
    os << '\n';
  }
  return os.str();
}

inline std::vector<std::vector<std::string>> report_cells(
    const ClassificationReport& report, const TagSet& tags) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Named Entity (NE)", "Tag", "Tag label", "Precision", "Recall",
                  "F1 - score", "Support"});
  for (const TagEntry& e : tags.entries()) {
    const ClassMetrics& m = report.per_class.at(static_cast<std::size_t>(e.label));
    rows.push_back({e.entity, e.mnemonic, std::to_string(e.label),
                    fixed2(m.precision), fixed2(m.recall), fixed2(m.f1),
                    std::to_string(m.support)});
  }
  rows.push_back({"Average / Total", "", "", fixed2(report.weighted_precision),
                  fixed2(report.weighted_recall), fixed2(report.weighted_f1),
                  std::to_string(report.total_support)});
  return rows;
}

inline std::vector<std::vector<std::string>> fold_cells(const CrossValidation& cv) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"FOLDS", "Precision", "Recall", "F1 - score", "Support"});
  for (const FoldResult& f : cv.folds) {
    rows.push_back({std::to_string(f.fold_index), fixed2(f.report.weighted_precision),
                    fixed2(f.report.weighted_recall), fixed2(f.report.weighted_f1),
                    std::to_string(f.support)});
  }
  rows.push_back({"Average / Total", fixed2(cv.aggregate.weighted_precision),
                  fixed2(cv.aggregate.weighted_recall),
                  fixed2(cv.aggregate.weighted_f1),
                  std::to_string(cv.aggregate.total_support)});
  return rows;
}

}  // namespace detail

/// Fixed-width report: one row per tag in table order, two-decimal metrics,
/// and a final Average / Total row with the support-weighted averages.
inline std::string render_report(const ClassificationReport& report,
                                 const TagSet& tags) {
  return detail::layout_table(detail::report_cells(report, tags), 2);
}

/// Same rows, tab-separated.
inline std::string render_report_tsv(const ClassificationReport& report,
                                     const TagSet& tags) {
  return detail::join_tsv(detail::report_cells(report, tags));
}

/// Per-fold cross-validation table plus the pooled Average / Total row.
inline std::string render_fold_table(const CrossValidation& cv) {
  return detail::layout_table(detail::fold_cells(cv), 1);
}

inline std::string render_fold_table_tsv(const CrossValidation& cv) {
  return detail::join_tsv(detail::fold_cells(cv));
}

}  // namespace nerc

#endif  // NERC_EVALUATION_HPP
