#include "qgen/fixed_spaces.hpp"

#include <array>
#include <map>

#include "qgen/diagrams.hpp"
#include "qgen/errors.hpp"
#include "qgen/realize.hpp"

namespace qgen {
namespace {

constexpr std::array<std::pair<GroupFamily, std::string_view>, 10> kGroupNames{{
    {GroupFamily::ClassicalU, "classical-u"},
    {GroupFamily::ClassicalO, "classical-o"},
    {GroupFamily::ClassicalS, "classical-s"},
    {GroupFamily::FreeU, "free-u"},
    {GroupFamily::FreeO, "free-o"},
    {GroupFamily::FreeS, "free-s"},
    {GroupFamily::TorusAbelian, "torus-abelian"},
    {GroupFamily::TorusFreeGroup, "torus-free-group"},
    {GroupFamily::TorusFreeZ2, "torus-z2"},
    {GroupFamily::EmbeddedFreeULower, "embedded-free-u-lower"},
}};

SubspaceBasis from_diagrams(DiagramFamily family, const ColoredWord& w, Dimension n, const Limits& limits) {
  SubspaceBasis out(w, n);
  for (const auto& d : enumerate(family, w, limits)) out.add(realize_diagram(d, n, limits));
  return out;
}

SubspaceBasis from_torus(TorusKind kind, const ColoredWord& w, Dimension n, const Limits& limits) {
  SubspaceBasis out(w, n);
  for (const auto& index : torus_fixed_basis(kind, w, n, limits)) out.add(SparseTensor::basis(w, n, index));
  return out;
}

SubspaceBasis embedded_lower(const ColoredWord& w, Dimension n, const Limits& limits) {
  const Dimension lower(n.value() - 1);
  const std::size_t k = w.size();
  SubspaceBasis out(w, n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> slots;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) slots.push_back(static_cast<int>(i));
    }
    const auto assignment = SlotAssignment::with_slots(w, std::move(slots));
    for (const auto& d : enumerate(DiagramFamily::NCMatchedPairings, assignment.remainder(), limits)) {
      out.add(insertion_psi(realize_diagram(d, lower, limits), assignment, n));
    }
  }
  return out;
}

// A generator of the Lie algebra as a sparse N x N matrix.
using Generator = std::vector<std::tuple<int, int, int>>;  // (row, col, value)

std::vector<Generator> lie_generators(GroupFamily family, int n) {
  std::vector<Generator> gens;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      switch (family) {
        case GroupFamily::ClassicalU:
          gens.push_back({{a, b, 1}});
          break;
        case GroupFamily::ClassicalO:
          if (a < b) gens.push_back({{a, b, 1}, {b, a, -1}});
          break;
        case GroupFamily::TorusAbelian:
          if (a == b) gens.push_back({{a, a, 1}});
          break;
        default:
          break;
      }
    }
  }
  return gens;
}

}  // namespace

std::string_view group_name(GroupFamily family) {
  for (const auto& [f, name] : kGroupNames) {
    if (f == family) return name;
  }
  return "unknown";
}

GroupFamily parse_group(std::string_view name) {
  for (const auto& [f, n] : kGroupNames) {
    if (n == name) return f;
  }
  throw PreconditionError("unknown group family '" + std::string(name) + "'");
}

std::vector<GroupFamily> all_groups() {
  std::vector<GroupFamily> out;
  for (const auto& entry : kGroupNames) out.push_back(entry.first);
  return out;
}

bool is_self_dual(GroupFamily family) {
  switch (family) {
    case GroupFamily::ClassicalO:
    case GroupFamily::ClassicalS:
    case GroupFamily::FreeO:
    case GroupFamily::FreeS:
    case GroupFamily::TorusFreeZ2:
      return true;
    default:
      return false;
  }
}

void GroupSpec::validate() const {
  if (family == GroupFamily::EmbeddedFreeULower && n.value() < 3) {
    throw PreconditionError("embedded-free-u-lower needs N >= 3 (got N=" + std::to_string(n.value()) + ")");
  }
}

std::string GroupSpec::to_string() const {
  return std::string(group_name(family)) + "(N=" + std::to_string(n.value()) + ")";
}

SubspaceBasis fixed_space(const GroupSpec& g, const ColoredWord& w, const Limits& limits) {
  g.validate();
  check_word_length(w, limits);
  switch (g.family) {
    case GroupFamily::FreeU: return from_diagrams(DiagramFamily::NCMatchedPairings, w, g.n, limits);
    case GroupFamily::FreeO: return from_diagrams(DiagramFamily::NCPairings, w, g.n, limits);
    case GroupFamily::FreeS: return from_diagrams(DiagramFamily::NCPartitions, w, g.n, limits);
    case GroupFamily::ClassicalU: return from_diagrams(DiagramFamily::MatchedPairings, w, g.n, limits);
    case GroupFamily::ClassicalO: return from_diagrams(DiagramFamily::AllPairings, w, g.n, limits);
    case GroupFamily::ClassicalS: return from_diagrams(DiagramFamily::AllPartitions, w, g.n, limits);
    case GroupFamily::TorusAbelian: return from_torus(TorusKind::AbelianZ, w, g.n, limits);
    case GroupFamily::TorusFreeGroup: return from_torus(TorusKind::FreeGroup, w, g.n, limits);
    case GroupFamily::TorusFreeZ2: return from_torus(TorusKind::FreeZ2, w, g.n, limits);
    case GroupFamily::EmbeddedFreeULower: return embedded_lower(w, g.n, limits);
  }
  throw PreconditionError("unhandled group family");
}

SubspaceBasis lie_kernel_oracle(const GroupSpec& g, const ColoredWord& w, const Limits& limits,
                                bool include_reflection) {
  if (g.family != GroupFamily::ClassicalU && g.family != GroupFamily::ClassicalO &&
      g.family != GroupFamily::TorusAbelian) {
    throw PreconditionError("lie_kernel_oracle supports classical-u, classical-o and torus-abelian, not " +
                            std::string(group_name(g.family)));
  }
  check_word_length(w, limits);
  const SparseTensor shape(w, g.n);
  const std::uint64_t ambient = shape.ambient_size();
  if (ambient > limits.max_entries) {
    throw CapExceeded("lie_kernel_oracle: ambient dimension " + std::to_string(ambient) + " above cap " +
                      std::to_string(limits.max_entries));
  }

  EchelonForm constraints;
  for (const auto& gen : lie_generators(g.family, g.n.value())) {
    // Row J of the operator: coefficient of e_J in X.e_I, collected over I.
    std::map<std::uint64_t, SparseRow> rows;
    for (std::uint64_t key = 0; key < ambient; ++key) {
      const MultiIndex index = shape.multi_index(key);
      for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (const auto& [r, c, value] : gen) {
          // Plain: e_c -> X[r][c] e_r.  Star: e_r -> -X[r][c] e_c.
          const bool plain = w[pos] == Color::Plain;
          const int from = plain ? c : r;
          const int to = plain ? r : c;
          if (index[pos] != from) continue;
          MultiIndex image = index;
          image[pos] = to;
          rows[shape.linear_index(image)].emplace_back(key, plain ? value : -value);
        }
      }
    }
    for (auto& [target, row] : rows) {
      // Merge repeated columns produced by different positions.
      SparseRow merged;
      for (auto& [col, v] : row) {
        if (!merged.empty() && merged.back().first == col) {
          merged.back().second += v;
        } else {
          merged.emplace_back(col, v);
        }
      }
      std::erase_if(merged, [](const auto& e) { return e.second == 0; });
      if (!merged.empty()) constraints.insert(std::move(merged));
    }
  }
  if (g.family == GroupFamily::ClassicalO && include_reflection) {
    // diag(-1, 1, ..., 1) scales e_I by (-1)^{#positions equal to the first index}.
    for (std::uint64_t key = 0; key < ambient; ++key) {
      const MultiIndex index = shape.multi_index(key);
      if (std::ranges::count(index, 0) % 2 != 0) constraints.insert({{key, 1}});
    }
  }

  SubspaceBasis out(w, g.n);
  for (auto& kernel : constraints.nullspace(ambient)) {
    out.add(SparseTensor::from_entries(w, g.n, std::vector<SparseTensor::Entry>(kernel.begin(), kernel.end())));
  }
  return out;
}

}  // namespace qgen
