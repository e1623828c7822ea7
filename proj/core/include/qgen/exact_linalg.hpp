#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qgen/sparse_tensor.hpp"
#include "qgen/words.hpp"

namespace qgen {

/// Dense matrix of exact rationals, row-major.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static ExactMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const ExactMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

/// Exact rank. Rows are scaled to integers, then reduced by Bareiss
/// fraction-free elimination with first-nonzero pivoting.
std::size_t rank(const ExactMatrix& m);

/// A sparse integer row; columns strictly ascending, no zero values.
using SparseRow = std::vector<std::pair<std::uint64_t, mpz_class>>;

/// Incremental row echelon form over the integers.
///
/// Each stored row has content 1 and a positive leading entry, and no two
/// rows share a leading column. Reduction only ever touches the leading
/// entry, so the work is proportional to the support actually present.
class EchelonForm {
 public:
  /// Reduces `row` against the stored rows and keeps the remainder if it is
  /// non-zero. Returns whether the rank grew.
  bool insert(SparseRow row);
  bool reduces_to_zero(SparseRow row) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

  /// Integer basis of {x in Q^num_cols : r.x = 0 for every stored row r},
  /// one vector per non-pivot column, in ascending order of that column.
  std::vector<SparseRow> nullspace(std::uint64_t num_cols) const;

 private:
  SparseRow reduce(SparseRow row) const;
  std::map<std::uint64_t, SparseRow> pivots_;
};

/// A spanning set (not necessarily independent) of a subspace of V^w.
class SubspaceBasis {
 public:
  SubspaceBasis(ColoredWord word, Dimension n) : word_(std::move(word)), n_(n) {}

  const ColoredWord& word() const noexcept { return word_; }
  Dimension dimension() const noexcept { return n_; }
  const std::vector<SparseTensor>& vectors() const noexcept { return vectors_; }
  std::size_t size() const noexcept { return vectors_.size(); }

  /// Throws MismatchError if v lives on another word or N.
  void add(SparseTensor v);

  /// Every vector is a single basis tensor.
  bool is_coordinate() const noexcept;

 private:
  ColoredWord word_;
  Dimension n_;
  std::vector<SparseTensor> vectors_;
};

std::size_t dim_span(const SubspaceBasis& b);

/// dim(span A ∩ span B). A coordinate subspace on either side is handled by
/// projecting the other side off its support; otherwise by
/// dim A + dim B - rank(A stacked on B).
std::size_t dim_intersection(const SubspaceBasis& a, const SubspaceBasis& b);

/// v ∈ span A.
bool contains(const SubspaceBasis& a, const SparseTensor& v);

/// The vectors of `b` that raise the rank when taken in order.
SubspaceBasis independent_subset(const SubspaceBasis& b);

/// An independent basis of span A ∩ span B, obtained from the kernel of the
/// stacked system sum a_i x_i - sum b_j y_j = 0.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b);

}  // namespace qgen
