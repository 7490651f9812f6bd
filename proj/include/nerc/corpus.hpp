#ifndef NERC_CORPUS_HPP
#define NERC_CORPUS_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nerc/errors.hpp"
#include "nerc/tagset.hpp"
#include "nerc/unicode.hpp"

namespace nerc {

/// A surface token paired with its tag label.
struct TaggedToken {
  std::string surface;  // NFC-normalized, nonempty, no whitespace
  int label = 0;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

/// Token sequence in file order. Never deduplicated.
struct Corpus {
  std::vector<TaggedToken> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }

  friend bool operator==(const Corpus&, const Corpus&) = default;
};

/// Parses word/TAG text: tokens are split on Unicode whitespace, each token
/// at its last '/' (tags never contain '/', surfaces might). Surfaces are
/// NFC-normalized. Errors carry the index of the offending token.
inline Corpus parse_tagged_text(std::string_view text, const TagSet& tags) {
  Corpus corpus;
  const std::vector<std::string> raw = split_whitespace(text);
  corpus.tokens.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& tok = raw[i];
    const std::size_t slash = tok.rfind('/');
    if (slash == std::string::npos)
      throw ParseError("token " + std::to_string(i) + " has no '/': \"" + tok + "\"", i);
    std::string surface = tok.substr(0, slash);
    const std::string mnemonic = tok.substr(slash + 1);
    if (surface.empty())
      throw ParseError("token " + std::to_string(i) + " has an empty surface: \"" + tok + "\"", i);
    int label;
    try {
      label = tags.label_of(mnemonic);
    } catch (const LookupError&) {
      throw ParseError("token " + std::to_string(i) + ": unknown tag mnemonic \"" +
                           mnemonic + "\"", i);
    }
    corpus.tokens.push_back(TaggedToken{nfc(surface), label});
  }
  return corpus;
}

/// Renders a corpus back to word/TAG form, single spaces between tokens.
/// Inverse of parse_tagged_text up to whitespace layout.
inline std::string emit_tagged_text(const Corpus& corpus, const TagSet& tags) {
  std::string out;
  for (std::size_t i = 0; i < corpus.tokens.size(); ++i) {
    if (i != 0) out += ' ';
    out += corpus.tokens[i].surface;
    out += '/';
    out += tags.mnemonic_of(corpus.tokens[i].label);
  }
  return out;
}

/// Separates the corpus into its word list (training documents).
inline std::vector<std::string> surfaces_of(const Corpus& corpus) {
  std::vector<std::string> out;
  out.reserve(corpus.size());
  for (const auto& t : corpus.tokens) out.push_back(t.surface);
  return out;
}

/// Separates the corpus into its label list.
inline std::vector<int> labels_of(const Corpus& corpus) {
  std::vector<int> out;
  out.reserve(corpus.size());
  for (const auto& t : corpus.tokens) out.push_back(t.label);
  return out;
}

/// Contiguous development/test split: the last floor(n * test_fraction)
/// tokens become the test set.
inline std::pair<Corpus, Corpus> split_dev_test(const Corpus& corpus,
                                                double test_fraction) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw ArgumentError("test fraction must lie in (0,1), got " +
                        std::to_string(test_fraction));
  if (corpus.empty()) throw ArgumentError("cannot split an empty corpus");
  const std::size_t n = corpus.size();
  const auto n_test = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * test_fraction));
  Corpus dev, test;
  dev.tokens.assign(corpus.tokens.begin(),
                    corpus.tokens.begin() + static_cast<std::ptrdiff_t>(n - n_test));
  test.tokens.assign(corpus.tokens.begin() + static_cast<std::ptrdiff_t>(n - n_test),
                     corpus.tokens.end());
  return {std::move(dev), std::move(test)};
}

/// One cross-validation entry: held-out fold plus the rest in original order.
struct Fold {
  Corpus train;
  Corpus devtest;
};

/// k contiguous folds; fold sizes are floor(n/k) with the first n mod k
/// folds one token larger. Entry i holds fold i out as devtest.
inline std::vector<Fold> k_folds(const Corpus& dev, int k) {
  const std::size_t n = dev.size();
  if (k < 2) throw ArgumentError("fold count must be at least 2, got " + std::to_string(k));
  if (static_cast<std::size_t>(k) > n)
    throw ArgumentError("fold count " + std::to_string(k) +
                        " exceeds corpus size " + std::to_string(n));

  const std::size_t base = n / static_cast<std::size_t>(k);
  const std::size_t remainder = n % static_cast<std::size_t>(k);

  std::vector<std::pair<std::size_t, std::size_t>> bounds;  // [begin, end)
  bounds.reserve(static_cast<std::size_t>(k));
  std::size_t begin = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    const std::size_t len = base + (i < remainder ? 1 : 0);
    bounds.emplace_back(begin, begin + len);
    begin += len;
  }

  std::vector<Fold> folds;
  folds.reserve(static_cast<std::size_t>(k));
  for (const auto& [lo, hi] : bounds) {
    Fold fold;
    fold.devtest.tokens.assign(dev.tokens.begin() + static_cast<std::ptrdiff_t>(lo),
                               dev.tokens.begin() + static_cast<std::ptrdiff_t>(hi));
    fold.train.tokens.reserve(n - (hi - lo));
    fold.train.tokens.insert(fold.train.tokens.end(), dev.tokens.begin(),
                             dev.tokens.begin() + static_cast<std::ptrdiff_t>(lo));
    fold.train.tokens.insert(fold.train.tokens.end(),
                             dev.tokens.begin() + static_cast<std::ptrdiff_t>(hi),
                             dev.tokens.end());
    folds.push_back(std::move(fold));
  }
  return folds;
}

}  // namespace nerc

#endif  // NERC_CORPUS_HPP
