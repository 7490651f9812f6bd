#ifndef NERC_VECTORIZER_HPP
#define NERC_VECTORIZER_HPP

// tf-idf feature extraction with a strict fit/transform separation.
//
// The document model is one document = one token: training feeds the list of
// separated words to the vectorizer, so |D| is the number of training tokens
// and df(t) is the corpus frequency of t. Per-document term frequency is
// therefore an exact-match indicator, and every in-vocabulary row L2-
// normalizes to a one-hot unit row.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nerc/errors.hpp"
#include "nerc/sparse.hpp"

namespace nerc {

/// Sorted distinct terms plus a term -> column index.
class Vocabulary {
 public:
  Vocabulary() = default;

  /// Distinct terms of `docs`, sorted by code point (UTF-8 byte order).
  static Vocabulary from_docs(const std::vector<std::string>& docs) {
    Vocabulary v;
    v.terms_ = docs;
    std::sort(v.terms_.begin(), v.terms_.end());
    v.terms_.erase(std::unique(v.terms_.begin(), v.terms_.end()), v.terms_.end());
    v.index_.reserve(v.terms_.size());
    for (std::size_t i = 0; i < v.terms_.size(); ++i) v.index_.emplace(v.terms_[i], i);
    return v;
  }

  /// Restores a vocabulary from already-sorted distinct terms (model load).
  static Vocabulary from_sorted_terms(std::vector<std::string> terms) {
    for (std::size_t i = 1; i < terms.size(); ++i)
      if (!(terms[i - 1] < terms[i]))
        throw ArgumentError("vocabulary terms must be sorted and distinct");
    Vocabulary v;
    v.terms_ = std::move(terms);
    v.index_.reserve(v.terms_.size());
    for (std::size_t i = 0; i < v.terms_.size(); ++i) v.index_.emplace(v.terms_[i], i);
    return v;
  }

  const std::vector<std::string>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Column of `term`, or npos when out of vocabulary.
  std::size_t column_of(std::string_view term) const {
    auto it = index_.find(std::string(term));
    return it == index_.end() ? npos : it->second;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Raw count of each vocabulary term in the document. With one-token
/// documents this is a one-hot count vector, or the zero vector when the
/// token is out of vocabulary (not an error).
inline SparseVector term_frequency(std::string_view doc, const Vocabulary& vocab) {
  SparseVector v;
  v.dimension = vocab.size();
  const std::size_t col = vocab.column_of(doc);
  if (col != Vocabulary::npos) v.entries.push_back({col, 1.0});
  return v;
}

/// Smoothed inverse document frequency per vocabulary term:
///   idf(t) = ln((|D| + 1) / (1 + df(t))) + 1
/// where df(t) is the number of documents containing t.
inline std::vector<double> compute_idf(const std::vector<std::string>& docs,
                                       const Vocabulary& vocab) {
  std::vector<double> df(vocab.size(), 0.0);
  for (const std::string& doc : docs) {
    const std::size_t col = vocab.column_of(doc);
    if (col != Vocabulary::npos) df[col] += 1.0;
  }
  const double n_docs = static_cast<double>(docs.size());
  std::vector<double> idf(vocab.size());
  for (std::size_t i = 0; i < idf.size(); ++i)
    idf[i] = std::log((n_docs + 1.0) / (1.0 + df[i])) + 1.0;
  return idf;
}

/// Frozen vocabulary + idf weights. Immutable after fit; safe to share
/// across threads.
class FittedVectorizer {
 public:
  /// Builds the vocabulary and idf weights from training documents.
  static FittedVectorizer fit(const std::vector<std::string>& docs) {
    if (docs.empty()) throw FitError("cannot fit a vectorizer on zero documents");
    FittedVectorizer fv;
    fv.vocab_ = Vocabulary::from_docs(docs);
    fv.idf_ = compute_idf(docs, fv.vocab_);
    fv.n_docs_ = docs.size();
    return fv;
  }

  /// Restores a fitted state verbatim (model load).
  static FittedVectorizer from_parts(Vocabulary vocab, std::vector<double> idf,
                                     std::size_t n_docs) {
    if (vocab.size() != idf.size())
      throw ArgumentError("idf weight count does not match vocabulary size");
    FittedVectorizer fv;
    fv.vocab_ = std::move(vocab);
    fv.idf_ = std::move(idf);
    fv.n_docs_ = n_docs;
    return fv;
  }

  const Vocabulary& vocab() const noexcept { return vocab_; }
  const std::vector<double>& idf() const noexcept { return idf_; }
  std::size_t n_docs() const noexcept { return n_docs_; }
  std::size_t n_features() const noexcept { return vocab_.size(); }

  /// Row i = l2_normalize(term_frequency(docs[i]) * idf). Out-of-vocabulary
  /// documents become zero rows. Never mutates the fitted state.
  TfIdfMatrix transform(const std::vector<std::string>& docs) const {
    TfIdfMatrix m;
    m.dimension = vocab_.size();
    m.rows.reserve(docs.size());
    for (const std::string& doc : docs) {
      SparseVector row = term_frequency(doc, vocab_);
      for (auto& e : row.entries) e.weight *= idf_[e.column];
      m.rows.push_back(l2_normalize(std::move(row)));
    }
    return m;
  }

 private:
  FittedVectorizer() = default;

  Vocabulary vocab_;
  std::vector<double> idf_;
  std::size_t n_docs_ = 0;
};

}  // namespace nerc

#endif  // NERC_VECTORIZER_HPP
