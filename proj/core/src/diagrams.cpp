#include "qgen/diagrams.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "qgen/errors.hpp"

namespace qgen {
namespace {

using Block = Diagram::Block;
using Blocks = std::vector<Block>;

void canonicalize(Blocks& blocks) {
  for (auto& b : blocks) std::ranges::sort(b);
  std::ranges::sort(blocks, [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

void require_same_word(const Diagram& p, const Diagram& q) {
  if (p.word() != q.word()) {
    throw MismatchError("diagrams live on different words '" + p.word().to_string() +
                        "' and '" + q.word().to_string() + "'");
  }
}

// Appends every combination a ++ b for a in left, b in right.
std::vector<Blocks> product(const std::vector<Blocks>& left, const std::vector<Blocks>& right) {
  std::vector<Blocks> out;
  out.reserve(left.size() * right.size());
  for (const auto& a : left) {
    for (const auto& b : right) {
      Blocks c = a;
      c.insert(c.end(), b.begin(), b.end());
      out.push_back(std::move(c));
    }
  }
  return out;
}

bool colors_match(const ColoredWord& w, int a, int b) { return w[a] != w[b]; }

// Pairings of a position list: the first position pairs with any later one.
void all_pairings(const ColoredWord& w, bool matched, std::vector<int>& free_pos, Blocks& current,
                  std::vector<Blocks>& out) {
  if (free_pos.empty()) {
    out.push_back(current);
    return;
  }
  const int first = free_pos.front();
  for (std::size_t i = 1; i < free_pos.size(); ++i) {
    const int partner = free_pos[i];
    if (matched && !colors_match(w, first, partner)) continue;
    std::vector<int> rest;
    rest.reserve(free_pos.size() - 2);
    for (std::size_t j = 1; j < free_pos.size(); ++j) {
      if (j != i) rest.push_back(free_pos[j]);
    }
    current.push_back({first, partner});
    all_pairings(w, matched, rest, current, out);
    current.pop_back();
  }
}

// Non-crossing pairings of the interval [lo, hi): lo pairs with some j, which
// splits the rest into the independent arcs (lo, j) and (j, hi).
std::vector<Blocks> nc_pairings(const ColoredWord& w, bool matched, int lo, int hi) {
  if (lo == hi) return {Blocks{}};
  std::vector<Blocks> out;
  for (int j = lo + 1; j < hi; j += 2) {
    if (matched && !colors_match(w, lo, j)) continue;
    auto inside = nc_pairings(w, matched, lo + 1, j);
    if (inside.empty()) continue;
    auto outside = nc_pairings(w, matched, j + 1, hi);
    if (outside.empty()) continue;
    for (auto& blocks : product(inside, outside)) {
      blocks.insert(blocks.begin(), Block{lo, j});
      out.push_back(std::move(blocks));
    }
  }
  return out;
}

std::vector<Blocks> nc_partitions(int lo, int hi);

// Extends the block containing `lo` whose largest element so far is `last`.
void grow_block(Block& block, int last, int hi, std::vector<Blocks>& out) {
  for (auto& rest : nc_partitions(last + 1, hi)) {
    rest.insert(rest.begin(), block);
    out.push_back(std::move(rest));
  }
  for (int j = last + 1; j < hi; ++j) {
    const auto gap = nc_partitions(last + 1, j);
    block.push_back(j);
    std::vector<Blocks> tails;
    grow_block(block, j, hi, tails);
    block.pop_back();
    for (auto& combined : product(tails, gap)) out.push_back(std::move(combined));
  }
}

std::vector<Blocks> nc_partitions(int lo, int hi) {
  if (lo == hi) return {Blocks{}};
  std::vector<Blocks> out;
  Block block{lo};
  grow_block(block, lo, hi, out);
  return out;
}

// Set partitions via restricted growth strings.
std::vector<Blocks> all_partitions(int k) {
  std::vector<Blocks> out;
  if (k == 0) return {Blocks{}};
  std::vector<int> rgs(k, 0), maxima(k, 0);
  while (true) {
    const int nblocks = *std::ranges::max_element(rgs) + 1;
    Blocks blocks(nblocks);
    for (int i = 0; i < k; ++i) blocks[rgs[i]].push_back(i);
    out.push_back(std::move(blocks));
    int i = k - 1;
    while (i > 0 && rgs[i] == maxima[i - 1] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    maxima[i] = std::max(maxima[i - 1], rgs[i]);
    for (int j = i + 1; j < k; ++j) {
      rgs[j] = 0;
      maxima[j] = maxima[i];
    }
  }
  return out;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

constexpr std::array<std::pair<DiagramFamily, std::string_view>, 6> kFamilyNames{{
    {DiagramFamily::AllPairings, "all-pairings"},
    {DiagramFamily::NCPairings, "nc-pairings"},
    {DiagramFamily::MatchedPairings, "matched-pairings"},
    {DiagramFamily::NCMatchedPairings, "nc-matched"},
    {DiagramFamily::AllPartitions, "all-partitions"},
    {DiagramFamily::NCPartitions, "nc-partitions"},
}};

}  // namespace

Diagram::Diagram(ColoredWord word, std::vector<Block> blocks)
    : word_(std::move(word)), blocks_(std::move(blocks)) {
  std::vector<bool> seen(word_.size(), false);
  for (const auto& b : blocks_) {
    if (b.empty()) throw PreconditionError("diagram has an empty block");
    for (int x : b) {
      if (x < 0 || static_cast<std::size_t>(x) >= word_.size()) {
        throw PreconditionError("block element " + std::to_string(x + 1) + " outside word of length " +
                                std::to_string(word_.size()));
      }
      if (seen[x]) throw PreconditionError("position " + std::to_string(x + 1) + " in two blocks");
      seen[x] = true;
    }
  }
  if (std::ranges::find(seen, false) != seen.end()) {
    throw PreconditionError("blocks do not cover every position");
  }
  canonicalize(blocks_);
}

bool Diagram::is_pairing() const noexcept {
  return std::ranges::all_of(blocks_, [](const Block& b) { return b.size() == 2; });
}

std::string Diagram::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(blocks_[i][j] + 1);
    }
    s += ']';
  }
  return s + "]";
}

std::strong_ordering Diagram::operator<=>(const Diagram& other) const {
  if (auto cmp = word_ <=> other.word_; cmp != 0) return cmp;
  return blocks_ <=> other.blocks_;
}

Diagram parse_diagram(const ColoredWord& word, std::string_view text) {
  std::vector<Block> blocks;
  Block* current = nullptr;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == ',') continue;
    if (c == '[') {
      if (++depth == 2) current = &blocks.emplace_back();
      if (depth > 2) throw ParseError(i + 1, "diagram text nested too deeply");
    } else if (c == ']') {
      if (--depth < 0) throw ParseError(i + 1, "unbalanced ']' in diagram text");
      current = nullptr;
    } else if (c >= '0' && c <= '9') {
      if (!current) throw ParseError(i + 1, "number outside a block in diagram text");
      int value = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') value = value * 10 + (text[i++] - '0');
      --i;
      current->push_back(value - 1);
    } else {
      throw ParseError(i + 1, "unexpected character in diagram text");
    }
  }
  if (depth != 0) throw ParseError(text.size(), "unterminated diagram text");
  return Diagram(word, std::move(blocks));
}

std::string_view family_name(DiagramFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

DiagramFamily parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw PreconditionError("unknown diagram family '" + std::string(name) + "'");
}

std::vector<DiagramFamily> all_families() {
  std::vector<DiagramFamily> out;
  for (const auto& entry : kFamilyNames) out.push_back(entry.first);
  return out;
}

bool is_noncrossing(const Diagram& d) {
  const auto& blocks = d.blocks();
  std::vector<int> label(d.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) label[x] = static_cast<int>(b);
  }
  // Two blocks cross iff, restricted to their union, the labels alternate
  // at least four times (A B A B).
  for (std::size_t a = 0; a < blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      int runs = 0;
      int prev = -1;
      for (std::size_t x = 0; x < d.size(); ++x) {
        const int l = label[x];
        if (l != static_cast<int>(a) && l != static_cast<int>(b)) continue;
        if (l != prev) {
          ++runs;
          prev = l;
        }
      }
      if (runs >= 4) return false;
    }
  }
  return true;
}

bool is_matched(const Diagram& d) {
  bool matched = true;
  for (const auto& b : d.blocks()) {
    if (b.size() != 2) {
      throw PreconditionError("is_matched needs a pairing; block of size " + std::to_string(b.size()) +
                              " in " + d.to_string());
    }
    if (d.word()[b[0]] == d.word()[b[1]]) matched = false;
  }
  return matched;
}

std::vector<Diagram> enumerate(DiagramFamily family, const ColoredWord& w, const Limits& limits) {
  check_word_length(w, limits);
  const int k = static_cast<int>(w.size());
  const bool pairing = family != DiagramFamily::AllPartitions && family != DiagramFamily::NCPartitions;
  const bool matched =
      family == DiagramFamily::MatchedPairings || family == DiagramFamily::NCMatchedPairings;
  if (pairing && k % 2 != 0) return {};
  if (matched && w.balance() != 0) return {};

  std::vector<Blocks> raw;
  switch (family) {
    case DiagramFamily::AllPairings:
    case DiagramFamily::MatchedPairings: {
      std::vector<int> positions(k);
      std::iota(positions.begin(), positions.end(), 0);
      Blocks current;
      all_pairings(w, matched, positions, current, raw);
      break;
    }
    case DiagramFamily::NCPairings:
    case DiagramFamily::NCMatchedPairings:
      raw = nc_pairings(w, matched, 0, k);
      break;
    case DiagramFamily::AllPartitions:
      raw = all_partitions(k);
      break;
    case DiagramFamily::NCPartitions:
      raw = nc_partitions(0, k);
      break;
  }

  std::vector<Diagram> out;
  out.reserve(raw.size());
  for (auto& blocks : raw) out.emplace_back(w, std::move(blocks));
  std::ranges::sort(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t loop_count(const Diagram& p, const Diagram& q) {
  require_same_word(p, q);
  DisjointSets sets(p.size());
  std::size_t components = p.size();
  for (const Diagram* d : {&p, &q}) {
    for (const auto& b : d->blocks()) {
      for (std::size_t i = 1; i < b.size(); ++i) {
        if (sets.unite(b[0], b[i])) --components;
      }
    }
  }
  return components;
}

ExactMatrix gram_matrix(const std::vector<Diagram>& diagrams, Dimension n) {
  const std::size_t m = diagrams.size();
  ExactMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      mpz_class entry;
      mpz_ui_pow_ui(entry.get_mpz_t(), static_cast<unsigned long>(n.value()),
                    static_cast<unsigned long>(loop_count(diagrams[i], diagrams[j])));
      g(i, j) = entry;
      g(j, i) = entry;
    }
  }
  return g;
}

}  // namespace qgen
