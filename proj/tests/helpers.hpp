#ifndef NERC_TESTS_HELPERS_HPP
#define NERC_TESTS_HELPERS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "nerc/corpus.hpp"
#include "nerc/sparse.hpp"
#include "nerc/tagset.hpp"

namespace nerc_test {

/// Synthetic corpus whose token -> tag mapping is a deterministic bijection:
/// type i always carries label i mod 23, and types cycle so every type (and
/// hence every class) lands in every contiguous training split.
inline nerc::Corpus bijective_corpus(std::size_t n_tokens, std::size_t n_types) {
  const int n_classes = nerc::TagSet::default_set().size();
  nerc::Corpus corpus;
  corpus.tokens.reserve(n_tokens);
  for (std::size_t i = 0; i < n_tokens; ++i) {
    const std::size_t type = i % n_types;
    char buf[16];
    std::snprintf(buf, sizeof buf, "w%06zu", type);
    corpus.tokens.push_back(
        {std::string(buf), static_cast<int>(type % static_cast<std::size_t>(n_classes))});
  }
  return corpus;
}

/// Random sparse vector with nonnegative weights; weights stay small so that
/// plain-arithmetic probability products cannot underflow in oracle checks.
inline nerc::SparseVector random_sparse(std::mt19937& rng, std::size_t dimension,
                                        int max_entries) {
  std::uniform_int_distribution<int> n_entries(0, max_entries);
  std::uniform_real_distribution<double> weight(0.1, 3.0);
  std::vector<std::size_t> cols(dimension);
  for (std::size_t i = 0; i < dimension; ++i) cols[i] = i;
  std::shuffle(cols.begin(), cols.end(), rng);
  int want = n_entries(rng);
  if (want > static_cast<int>(dimension)) want = static_cast<int>(dimension);
  cols.resize(static_cast<std::size_t>(want));
  std::sort(cols.begin(), cols.end());
  nerc::SparseVector v;
  v.dimension = dimension;
  for (const std::size_t c : cols) v.entries.push_back({c, weight(rng)});
  return v;
}

}  // namespace nerc_test

#endif  // NERC_TESTS_HELPERS_HPP
