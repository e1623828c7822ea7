#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qgen/words.hpp"

namespace qgen {

/// A multi-index (i_1, ..., i_k) with 0-based values in [0, N).
using MultiIndex = std::vector<int>;

/// An exact-integer vector in (C^N)^{(x)k}, stored sparsely.
///
/// Entries are keyed by the base-N linear index of the multi-index with
/// position 0 most significant, so ascending keys are lexicographic order on
/// multi-indices. Zero coefficients are never stored.
class SparseTensor {
 public:
  using Entry = std::pair<std::uint64_t, mpz_class>;

  /// The zero tensor. Throws CapExceeded if N^k does not fit in 64 bits.
  SparseTensor(ColoredWord word, Dimension n);

  /// Sums duplicate keys and drops zeros. Throws PreconditionError on keys
  /// outside [0, N^k).
  static SparseTensor from_entries(ColoredWord word, Dimension n, std::vector<Entry> entries);

  /// A single basis tensor e_{i_1} (x) ... (x) e_{i_k} with coefficient 1.
  static SparseTensor basis(ColoredWord word, Dimension n, std::span<const int> index);

  const ColoredWord& word() const noexcept { return word_; }
  Dimension dimension() const noexcept { return n_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// N^k.
  std::uint64_t ambient_size() const noexcept { return ambient_; }
  std::uint64_t linear_index(std::span<const int> index) const;
  MultiIndex multi_index(std::uint64_t key) const;
  mpz_class coefficient(std::span<const int> index) const;

  /// [[[i_1,...,i_k],c], ...] with 1-based index values, ascending order.
  std::string to_string() const;

  bool operator==(const SparseTensor& other) const;

 private:
  ColoredWord word_;
  Dimension n_;
  std::uint64_t ambient_;
  std::vector<Entry> entries_;
};

/// Standard real inner product. Throws MismatchError across words or N.
mpz_class inner_product(const SparseTensor& a, const SparseTensor& b);

/// Throws MismatchError unless both tensors share word and dimension.
void require_same_ambient(const SparseTensor& a, const SparseTensor& b);

}  // namespace qgen
