#ifndef NERC_MODEL_IO_HPP
#define NERC_MODEL_IO_HPP

// Versioned JSON model file. Doubles are written in shortest round-trip
// form, so load(save(m)) restores every numeric field bit-for-bit. Classes
// with no training data carry a -inf log prior, which JSON cannot hold as a
// number; those entries are stored as null.

#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "nerc/classifier.hpp"
#include "nerc/errors.hpp"
#include "nerc/tagset.hpp"
#include "nerc/vectorizer.hpp"

namespace nerc {

inline constexpr int kModelFormatVersion = 1;

/// Everything a tagging run needs: the tag table, the frozen vectorizer and
/// the fitted classifier.
struct TrainedModel {
  TagSet tagset;
  FittedVectorizer vectorizer;
  NbModel classifier;
};

namespace detail {

inline nlohmann::json prior_to_json(const std::vector<double>& log_prior) {
  nlohmann::json arr = nlohmann::json::array();
  for (double v : log_prior) {
    if (std::isinf(v))
      arr.push_back(nullptr);
    else
      arr.push_back(v);
  }
  return arr;
}

inline std::vector<double> prior_from_json(const nlohmann::json& arr) {
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_null())
      out.push_back(-std::numeric_limits<double>::infinity());
    else
      out.push_back(v.get<double>());
  }
  return out;
}

/// Stores one likelihood row as its most frequent value plus exceptions.
/// Smoothing makes every feature a class never saw share one bit-identical
/// value, so this is small without being lossy.
inline nlohmann::json likelihood_row_to_json(const std::vector<double>& row) {
  std::unordered_map<double, std::size_t> freq;
  for (double v : row) ++freq[v];
  std::size_t best_count = 0;
  double modal = row.empty() ? 0.0 : row.front();
  for (double v : row) {  // column order, so ties resolve deterministically
    const std::size_t c = freq[v];
    if (c > best_count) {
      best_count = c;
      modal = v;
    }
  }
  nlohmann::json columns = nlohmann::json::array();
  nlohmann::json values = nlohmann::json::array();
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != modal) {
      columns.push_back(i);
      values.push_back(row[i]);
    }
  }
  return nlohmann::json{{"default", modal},
                        {"columns", std::move(columns)},
                        {"values", std::move(values)}};
}

inline std::vector<double> likelihood_row_from_json(const nlohmann::json& j,
                                                    std::size_t n_features) {
  std::vector<double> row(n_features, j.at("default").get<double>());
  const auto& columns = j.at("columns");
  const auto& values = j.at("values");
  if (columns.size() != values.size())
    throw LoadError("model file: likelihood columns/values length mismatch");
  for (std::size_t i = 0; i < columns.size(); ++i) {
    const auto col = columns[i].get<std::size_t>();
    if (col >= n_features) throw LoadError("model file: likelihood column out of range");
    row[col] = values[i].get<double>();
  }
  return row;
}

}  // namespace detail

inline std::string serialize_model(const TrainedModel& model) {
  nlohmann::json tagset = nlohmann::json::array();
  for (const TagEntry& e : model.tagset.entries()) {
    tagset.push_back(nlohmann::json{{"entity", e.entity},
                                    {"tag", e.mnemonic},
                                    {"label", e.label},
                                    {"description", e.description}});
  }
  nlohmann::json likelihood = nlohmann::json::array();
  for (const auto& row : model.classifier.log_likelihood())
    likelihood.push_back(detail::likelihood_row_to_json(row));

  const nlohmann::json j{
      {"format_version", kModelFormatVersion},
      {"alpha", model.classifier.alpha()},
      {"n_docs", model.vectorizer.n_docs()},
      {"tagset", std::move(tagset)},
      {"vocabulary", model.vectorizer.vocab().terms()},
      {"idf", model.vectorizer.idf()},
      {"log_prior", detail::prior_to_json(model.classifier.log_prior())},
      {"log_likelihood", std::move(likelihood)},
  };
  return j.dump(1);
}

inline TrainedModel deserialize_model(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion)
      throw LoadError("model format version " + std::to_string(version) +
                      " is not supported (expected " +
                      std::to_string(kModelFormatVersion) + ")");

    std::vector<TagEntry> entries;
    for (const auto& e : j.at("tagset")) {
      entries.push_back(TagEntry{e.at("entity").get<std::string>(),
                                 e.at("tag").get<std::string>(),
                                 e.at("label").get<int>(),
                                 e.at("description").get<std::string>()});
    }
    TagSet tagset{std::move(entries)};

    Vocabulary vocab = Vocabulary::from_sorted_terms(
        j.at("vocabulary").get<std::vector<std::string>>());
    const std::size_t n_features = vocab.size();
    FittedVectorizer vectorizer = FittedVectorizer::from_parts(
        std::move(vocab), j.at("idf").get<std::vector<double>>(),
        j.at("n_docs").get<std::size_t>());

    std::vector<double> log_prior = detail::prior_from_json(j.at("log_prior"));
    std::vector<std::vector<double>> log_likelihood;
    for (const auto& row : j.at("log_likelihood"))
      log_likelihood.push_back(detail::likelihood_row_from_json(row, n_features));
    NbModel classifier =
        NbModel::from_parts(std::move(log_prior), std::move(log_likelihood),
                            n_features, j.at("alpha").get<double>());

    if (classifier.n_classes() != tagset.size())
      throw LoadError("model file: class count does not match tag set size");

    return TrainedModel{std::move(tagset), std::move(vectorizer),
                        std::move(classifier)};
  } catch (const nlohmann::json::exception& e) {
    throw LoadError(std::string("model file is malformed: ") + e.what());
  } catch (const ArgumentError& e) {
    throw LoadError(std::string("model file is inconsistent: ") + e.what());
  }
}

inline void save_model(const TrainedModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open model file for writing: " + path);
  out << serialize_model(model) << '\n';
  if (!out) throw IoError("failed writing model file: " + path);
}

inline TrainedModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return deserialize_model(buf.str());
}

}  // namespace nerc

#endif  // NERC_MODEL_IO_HPP
