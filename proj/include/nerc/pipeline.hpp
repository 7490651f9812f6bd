#ifndef NERC_PIPELINE_HPP
#define NERC_PIPELINE_HPP

// End-to-end wiring used by the command-line tool: train a model from a
// tagged corpus, tag plain text, evaluate against gold tags, and print the
// corpus-size/run-time block.

#include <chrono>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nerc/corpus.hpp"
#include "nerc/errors.hpp"
#include "nerc/evaluation.hpp"
#include "nerc/model_io.hpp"

namespace nerc {

/// Corpus sizes and wall-clock seconds of the fit/transform brackets.
struct RunTiming {
  std::size_t train_tokens = 0;
  std::size_t n_features = 0;
  std::size_t test_tokens = 0;
  double fit_seconds = 0.0;
  double transform_seconds = 0.0;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// 95170 -> "95,170"
inline std::string group_digits(std::size_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  const std::size_t lead = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i != 0 && (i + 3 - lead) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

inline std::string seconds3(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

inline std::string timing_line(std::string_view label, std::string_view value) {
  constexpr std::size_t kLabelWidth = 53;
  std::string out{label};
  if (out.size() < kLabelWidth) out += std::string(kLabelWidth - out.size(), ' ');
  out += " : ";
  out += value;
  out += '\n';
  return out;
}

}  // namespace detail

/// Fits the vectorizer and classifier on a tagged corpus. The fit bracket
/// times feature extraction plus classifier training, matching what the
/// training-time report line covers.
inline std::pair<TrainedModel, RunTiming> train_model(const Corpus& corpus,
                                                      double alpha,
                                                      const TagSet& tags) {
  const std::vector<std::string> words = surfaces_of(corpus);
  const std::vector<int> labels = labels_of(corpus);

  const detail::Stopwatch watch;
  FittedVectorizer vectorizer = FittedVectorizer::fit(words);
  const TfIdfMatrix features = vectorizer.transform(words);
  NbModel classifier = NbModel::fit(features, labels, alpha, tags.size());
  const double fit_seconds = watch.seconds();

  RunTiming timing;
  timing.train_tokens = corpus.size();
  timing.n_features = vectorizer.n_features();
  timing.fit_seconds = fit_seconds;
  return {TrainedModel{tags, std::move(vectorizer), std::move(classifier)},
          std::move(timing)};
}

/// Tags whitespace-separated tokens, emitting "surface/TAG" joined by single
/// spaces with the input's line structure preserved. Punctuation-only tokens
/// go through the classifier like any other token. Out-of-vocabulary tokens
/// become zero rows and decode from the class priors alone.
inline std::string tag_text(const TrainedModel& model, std::string_view input) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= input.size(); ++i) {
    if (i == input.size() || input[i] == '\n') {
      lines.push_back(input.substr(start, i - start));
      start = i + 1;
    }
  }
  // a trailing '\n' terminates the last line rather than opening a new one
  if (!lines.empty() && lines.back().empty()) lines.pop_back();

  std::string out;
  for (const std::string_view line : lines) {
    std::vector<std::string> tokens = split_whitespace(line);
    for (auto& t : tokens) t = nfc(t);
    const std::vector<Prediction> predictions =
        predict_batch(model.classifier, model.vectorizer.transform(tokens));
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (i != 0) out += ' ';
      out += tokens[i];
      out += '/';
      out += model.tagset.mnemonic_of(predictions[i].label);
    }
    out += '\n';
  }
  return out;
}

/// Predicts every test token and scores against the gold labels. The
/// transform bracket times feature extraction plus prediction of the test
/// set, matching the test-time report line.
inline std::pair<ClassificationReport, RunTiming> evaluate_model(
    const TrainedModel& model, const Corpus& test) {
  const detail::Stopwatch watch;
  const std::vector<Prediction> predictions =
      predict_batch(model.classifier, model.vectorizer.transform(surfaces_of(test)));
  const double transform_seconds = watch.seconds();

  std::vector<int> predicted;
  predicted.reserve(predictions.size());
  for (const auto& p : predictions) predicted.push_back(p.label);
  const ClassCounts counts =
      count_labels(predicted, labels_of(test), model.tagset.size());

  RunTiming timing;
  timing.test_tokens = test.size();
  timing.n_features = model.vectorizer.n_features();
  timing.transform_seconds = transform_seconds;
  return {make_report(counts), std::move(timing)};
}

/// Corpus-size and run-time block for a training run.
inline std::string render_train_timing(const RunTiming& t) {
  std::string out;
  out += detail::timing_line("The training set size for the Model",
                             detail::group_digits(t.train_tokens) + " words");
  out += detail::timing_line("Total number of samples treated by the classifier",
                             detail::group_digits(t.train_tokens) + " words");
  out += detail::timing_line("Total number of features extracted by the classifier",
                             detail::group_digits(t.n_features) +
                                 " (vocabulary words)");
  out += detail::timing_line("Feature extraction Time (Training of MNB model)",
                             detail::seconds3(t.fit_seconds) + " sec");
  return out;
}

/// Corpus-size and run-time block for a test/evaluation run.
inline std::string render_test_timing(const RunTiming& t) {
  std::string out;
  out += detail::timing_line("The test set size for the Model",
                             detail::group_digits(t.test_tokens) + " words");
  out += detail::timing_line("Feature extraction Time for test data",
                             detail::seconds3(t.transform_seconds) + " sec");
  return out;
}

/// Whole-file read; parse errors get the file name prefixed.
inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading file: " + path);
  return buf.str();
}

inline Corpus parse_corpus_file(const std::string& path, const TagSet& tags) {
  try {
    return parse_tagged_text(read_text_file(path), tags);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.token_index());
  }
}

}  // namespace nerc

#endif  // NERC_PIPELINE_HPP
