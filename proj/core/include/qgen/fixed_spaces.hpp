#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qgen/exact_linalg.hpp"
#include "qgen/words.hpp"

namespace qgen {

enum class GroupFamily {
  ClassicalU,
  ClassicalO,
  ClassicalS,
  FreeU,
  FreeO,
  FreeS,
  TorusAbelian,
  TorusFreeGroup,
  TorusFreeZ2,
  EmbeddedFreeULower,
};

/// Stable kebab-case identifier, e.g. "free-u" or "embedded-free-u-lower".
std::string_view group_name(GroupFamily family);
/// Throws PreconditionError on unknown names.
GroupFamily parse_group(std::string_view name);
std::vector<GroupFamily> all_groups();

/// Families whose fundamental representation is treated as self-dual, so
/// word colors do not affect their fixed spaces.
bool is_self_dual(GroupFamily family);

struct GroupSpec {
  GroupFamily family;
  Dimension n;

  /// Throws PreconditionError if the combination is unsupported
  /// (the lower-rank embedding needs N >= 3).
  void validate() const;
  std::string to_string() const;
  bool operator==(const GroupSpec&) const = default;
};

/// A spanning set of the fixed vectors of G on V^w.
///
///   free-u       non-crossing matched pairings
///   free-o       non-crossing pairings
///   free-s       non-crossing partitions
///   classical-u  matched pairings
///   classical-o  pairings
///   classical-s  partitions
///   torus-*      coordinate tensors whose group word is trivial
///   embedded-free-u-lower
///                psi_S(T_pi) over every slot set S and every non-crossing
///                matched pairing pi of the remaining subword at rank N-1,
///                for U+_{N-1} sitting in the top-left corner of U+_N.
SubspaceBasis fixed_space(const GroupSpec& g, const ColoredWord& w, const Limits& limits = {});

/// Independent fixed space for classical-u, classical-o and torus-abelian,
/// computed as the joint kernel of the Lie algebra acting on V^w (Star
/// factors by negative transpose). For classical-o the reflection
/// diag(-1, 1, ..., 1) is added unless `include_reflection` is false, in
/// which case the result is the SO_N fixed space.
SubspaceBasis lie_kernel_oracle(const GroupSpec& g, const ColoredWord& w, const Limits& limits = {},
                                bool include_reflection = true);

}  // namespace qgen
