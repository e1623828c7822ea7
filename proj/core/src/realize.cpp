#include "qgen/realize.hpp"

#include <algorithm>
#include <numeric>

#include "qgen/errors.hpp"

namespace qgen {
namespace {

std::uint64_t power_or_cap(int base, std::size_t exponent, std::uint64_t cap, const std::string& what) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    result *= static_cast<std::uint64_t>(base);
    if (result > cap) {
      throw CapExceeded(what + " needs more than " + std::to_string(cap) + " entries (" +
                        std::to_string(base) + "^" + std::to_string(exponent) + ")");
    }
  }
  return result;
}

// Advances a base-n odometer; returns false after the last state.
bool advance(std::vector<int>& digits, int n) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < n) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

SparseTensor realize_diagram(const Diagram& d, Dimension n, const Limits& limits) {
  const auto& blocks = d.blocks();
  power_or_cap(n.value(), blocks.size(), limits.max_entries,
               "realizing " + d.to_string() + " at N=" + std::to_string(n.value()));

  const std::size_t k = d.size();
  const auto base = static_cast<std::uint64_t>(n.value());
  std::vector<std::uint64_t> place(k, 1);
  for (std::size_t i = k; i-- > 1;) place[i - 1] = place[i] * base;
  // weight[b] = sum of place values of the positions in block b.
  std::vector<std::uint64_t> weight(blocks.size(), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) weight[b] += place[x];
  }

  std::vector<SparseTensor::Entry> entries;
  std::vector<int> values(blocks.size(), 0);
  do {
    std::uint64_t key = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) key += weight[b] * static_cast<std::uint64_t>(values[b]);
    entries.emplace_back(key, 1);
  } while (advance(values, n.value()));
  return SparseTensor::from_entries(d.word(), n, std::move(entries));
}

SlotAssignment::SlotAssignment(ColoredWord word, std::vector<int> slots, std::vector<int> remainder_positions)
    : word_(std::move(word)), slots_(std::move(slots)), remainder_(std::move(remainder_positions)) {
  std::ranges::sort(slots_);
  std::ranges::sort(remainder_);
  std::vector<int> seen(word_.size(), 0);
  for (const auto* list : {&slots_, &remainder_}) {
    for (int x : *list) {
      if (x < 0 || static_cast<std::size_t>(x) >= word_.size()) {
        throw PreconditionError("slot position " + std::to_string(x + 1) + " outside word '" +
                                word_.to_string() + "'");
      }
      if (seen[x]++) {
        throw PreconditionError("position " + std::to_string(x + 1) +
                                " appears twice across slots and remainder");
      }
    }
  }
  if (std::ranges::count(seen, 0) != 0) {
    throw PreconditionError("slots and remainder do not cover word '" + word_.to_string() + "'");
  }
}

SlotAssignment SlotAssignment::with_slots(ColoredWord word, std::vector<int> slots) {
  std::vector<bool> in_slots(word.size(), false);
  for (int x : slots) {
    if (x >= 0 && static_cast<std::size_t>(x) < word.size()) in_slots[x] = true;
  }
  std::vector<int> remainder;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!in_slots[i]) remainder.push_back(static_cast<int>(i));
  }
  return SlotAssignment(std::move(word), std::move(slots), std::move(remainder));
}

ColoredWord SlotAssignment::remainder() const {
  std::vector<Color> letters;
  letters.reserve(remainder_.size());
  for (int x : remainder_) letters.push_back(word_[x]);
  return ColoredWord(std::move(letters));
}

SparseTensor insertion_psi(const SparseTensor& v, const SlotAssignment& assignment, Dimension n) {
  if (n.value() < 2) throw PreconditionError("insertion_psi needs N >= 2");
  if (v.dimension().value() != n.value() - 1) {
    throw MismatchError("insertion_psi: tensor has dimension " + std::to_string(v.dimension().value()) +
                        ", expected N-1 = " + std::to_string(n.value() - 1));
  }
  if (v.word() != assignment.remainder()) {
    throw MismatchError("insertion_psi: tensor lives on '" + v.word().to_string() +
                        "' but the remainder is '" + assignment.remainder().to_string() + "'");
  }
  const int last = n.value() - 1;
  MultiIndex full(assignment.word().size(), last);
  SparseTensor shape(assignment.word(), n);
  std::vector<SparseTensor::Entry> entries;
  entries.reserve(v.nnz());
  for (const auto& [key, value] : v.entries()) {
    const auto sub = v.multi_index(key);
    for (std::size_t j = 0; j < sub.size(); ++j) full[assignment.remainder_positions()[j]] = sub[j];
    entries.emplace_back(shape.linear_index(full), value);
  }
  return SparseTensor::from_entries(assignment.word(), n, std::move(entries));
}

std::string_view torus_name(TorusKind kind) {
  switch (kind) {
    case TorusKind::FreeGroup: return "free-group";
    case TorusKind::FreeZ2: return "free-z2";
    case TorusKind::AbelianZ: return "abelian";
  }
  return "unknown";
}

bool reduces_to_identity(TorusKind kind, const ColoredWord& w, std::span<const int> index) {
  if (index.size() != w.size()) throw MismatchError("multi-index length differs from word length");
  switch (kind) {
    case TorusKind::AbelianZ: {
      const int n = index.empty() ? 0 : *std::ranges::max_element(index) + 1;
      std::vector<int> exponent(n, 0);
      for (std::size_t i = 0; i < index.size(); ++i) exponent[index[i]] += w[i] == Color::Plain ? 1 : -1;
      return std::ranges::all_of(exponent, [](int e) { return e == 0; });
    }
    case TorusKind::FreeGroup: {
      // Stack of (generator, sign); a letter cancels an inverse on top.
      std::vector<std::pair<int, int>> stack;
      for (std::size_t i = 0; i < index.size(); ++i) {
        const int sign = w[i] == Color::Plain ? 1 : -1;
        if (!stack.empty() && stack.back().first == index[i] && stack.back().second == -sign) {
          stack.pop_back();
        } else {
          stack.emplace_back(index[i], sign);
        }
      }
      return stack.empty();
    }
    case TorusKind::FreeZ2: {
      std::vector<int> stack;
      for (int g : index) {
        if (!stack.empty() && stack.back() == g) {
          stack.pop_back();
        } else {
          stack.push_back(g);
        }
      }
      return stack.empty();
    }
  }
  return false;
}

std::vector<MultiIndex> torus_fixed_basis(TorusKind kind, const ColoredWord& w, Dimension n,
                                          const Limits& limits) {
  power_or_cap(n.value(), w.size(), limits.max_entries, "torus basis of '" + w.to_string() + "'");
  std::vector<MultiIndex> out;
  MultiIndex index(w.size(), 0);
  do {
    if (reduces_to_identity(kind, w, index)) out.push_back(index);
  } while (advance(index, n.value()));
  return out;
}

}  // namespace qgen
