#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/exact_linalg.hpp"
#include "qgen/words.hpp"

namespace qgen {

/// A set partition of the positions of a colored word.
///
/// Positions are 0-based in memory and 1-based in text. Blocks are kept
/// canonical (each block sorted, blocks ordered by their minimum) so two
/// diagrams are equal exactly when they are syntactically equal.
class Diagram {
 public:
  using Block = std::vector<int>;

  /// Throws PreconditionError unless `blocks` partition {0..k-1} into
  /// non-empty disjoint subsets.
  Diagram(ColoredWord word, std::vector<Block> blocks);

  const ColoredWord& word() const noexcept { return word_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t size() const noexcept { return word_.size(); }
  bool is_pairing() const noexcept;

  /// "[[1,2],[3,4]]"
  std::string to_string() const;

  bool operator==(const Diagram&) const = default;
  /// Lexicographic on the block representation; diagrams on different
  /// words compare by word first.
  std::strong_ordering operator<=>(const Diagram& other) const;

 private:
  ColoredWord word_;
  std::vector<Block> blocks_;
};

/// Reads the 1-based block-list text produced by Diagram::to_string.
Diagram parse_diagram(const ColoredWord& word, std::string_view text);

enum class DiagramFamily {
  AllPairings,
  NCPairings,
  MatchedPairings,
  NCMatchedPairings,
  AllPartitions,
  NCPartitions,
};

std::string_view family_name(DiagramFamily family);
/// Inverse of family_name; throws PreconditionError on unknown names.
DiagramFamily parse_family(std::string_view name);
std::vector<DiagramFamily> all_families();

bool is_noncrossing(const Diagram& d);

/// Every block joins a Plain position to a Star position. Throws
/// PreconditionError if some block does not have exactly two elements.
bool is_matched(const Diagram& d);

/// All diagrams of `family` on w, canonically sorted and duplicate-free.
/// Colors are ignored by the unmatched pairing families and by partitions.
std::vector<Diagram> enumerate(DiagramFamily family, const ColoredWord& w,
                               const Limits& limits = {});

/// Connected components of the graph joining positions that share a block of
/// p or of q.
std::size_t loop_count(const Diagram& p, const Diagram& q);

/// Entry (i, j) is N^loop_count(d_i, d_j).
ExactMatrix gram_matrix(const std::vector<Diagram>& diagrams, Dimension n);

}  // namespace qgen
