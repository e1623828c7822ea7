#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qgen/diagrams.hpp"
#include "qgen/sparse_tensor.hpp"
#include "qgen/words.hpp"

namespace qgen {

/// The invariant tensor of a partition: coefficient 1 on every multi-index
/// that is constant on each block, 0 elsewhere. It has N^#blocks entries;
/// throws CapExceeded when that exceeds limits.max_entries.
SparseTensor realize_diagram(const Diagram& d, Dimension n, const Limits& limits = {});

/// Splits the positions of a word into the slots that receive e / e* and the
/// remaining positions, which carry a tensor on the subword.
class SlotAssignment {
 public:
  /// Throws PreconditionError unless `slots` and `remainder_positions` are
  /// disjoint, duplicate-free and together cover every position of `word`.
  SlotAssignment(ColoredWord word, std::vector<int> slots, std::vector<int> remainder_positions);

  /// The assignment whose remainder is everything outside `slots`.
  static SlotAssignment with_slots(ColoredWord word, std::vector<int> slots);

  const ColoredWord& word() const noexcept { return word_; }
  /// Sorted, 0-based.
  const std::vector<int>& slots() const noexcept { return slots_; }
  const std::vector<int>& remainder_positions() const noexcept { return remainder_; }
  /// The colored subword on the remainder positions.
  ColoredWord remainder() const;

 private:
  ColoredWord word_;
  std::vector<int> slots_;
  std::vector<int> remainder_;
};

/// Embeds a tensor over the remainder subword at dimension N-1 into the full
/// word at dimension N, writing the last basis vector e_N (resp. e_N*) into
/// every slot. Coefficients are unchanged and the map is injective.
///
/// Throws MismatchError if v is not on assignment.remainder() at dimension
/// N-1, and PreconditionError if N < 2.
SparseTensor insertion_psi(const SparseTensor& v, const SlotAssignment& assignment, Dimension n);

/// Which diagonal torus: the dual of the free group F_N, of the free product
/// of N copies of Z_2, or of the abelian Z^N.
enum class TorusKind { FreeGroup, FreeZ2, AbelianZ };

std::string_view torus_name(TorusKind kind);

/// Whether g_{i_1}^{±1} ... g_{i_k}^{±1} is the identity, with Plain letters
/// contributing g_i and Star letters g_i^{-1}. For FreeZ2 colors are ignored.
bool reduces_to_identity(TorusKind kind, const ColoredWord& w, std::span<const int> index);

/// All multi-indices whose group word reduces to the identity, ascending.
/// The corresponding basis tensors span the torus fixed space. Throws
/// CapExceeded when N^k exceeds limits.max_entries.
std::vector<MultiIndex> torus_fixed_basis(TorusKind kind, const ColoredWord& w, Dimension n,
                                          const Limits& limits = {});

}  // namespace qgen
