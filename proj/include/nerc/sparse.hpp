#ifndef NERC_SPARSE_HPP
#define NERC_SPARSE_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "nerc/errors.hpp"

namespace nerc {

/// Sparse row vector: (column, weight) pairs with strictly increasing
/// columns and no explicit zeros.
struct SparseVector {
  struct Entry {
    std::size_t column;
    double weight;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  std::vector<Entry> entries;
  std::size_t dimension = 0;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

/// Row-major sparse matrix; all rows share one dimension.
struct TfIdfMatrix {
  std::vector<SparseVector> rows;
  std::size_t dimension = 0;

  std::size_t n_rows() const noexcept { return rows.size(); }
};

inline double l2_norm(const SparseVector& v) {
  double sum = 0.0;
  for (const auto& e : v.entries) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

/// Divides by the L2 norm. The zero vector is the one singular point and is
/// returned unchanged so out-of-vocabulary rows can flow through prediction.
inline SparseVector l2_normalize(SparseVector v) {
  const double norm = l2_norm(v);
  if (norm > 0.0) {
    for (auto& e : v.entries) e.weight /= norm;
  }
  return v;
}

}  // namespace nerc

#endif  // NERC_SPARSE_HPP
