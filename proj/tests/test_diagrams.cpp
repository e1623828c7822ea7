#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "qgen/diagrams.hpp"
#include "qgen/errors.hpp"

using namespace qgen;

namespace {

using Blocks = std::vector<std::vector<int>>;

// --- Independent oracles -------------------------------------------------

std::uint64_t catalan(int k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[0] = 1;
  for (int n = 1; n <= k; ++n) {
    for (int i = 0; i < n; ++i) c[n] += c[i] * c[n - 1 - i];
  }
  return c[k];
}

std::uint64_t double_factorial_odd(int k) {  // (2k-1)!!
  std::uint64_t r = 1;
  for (int i = 2 * k - 1; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t bell(int k) {  // Bell triangle
  std::vector<std::uint64_t> row{1};
  for (int n = 1; n <= k; ++n) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.front();
}

// Every set partition: element i joins an existing block or opens a new one.
void brute_partitions(int i, int k, Blocks& cur, std::vector<Blocks>& out) {
  if (i == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t b = 0; b < cur.size(); ++b) {
    cur[b].push_back(i);
    brute_partitions(i + 1, k, cur, out);
    cur[b].pop_back();
  }
  cur.push_back({i});
  brute_partitions(i + 1, k, cur, out);
  cur.pop_back();
}

bool brute_noncrossing(const Blocks& blocks, int k) {
  std::vector<int> label(k);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) label[x] = static_cast<int>(b);
  }
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      for (int c = b + 1; c < k; ++c)
        for (int d = c + 1; d < k; ++d)
          if (label[a] == label[c] && label[b] == label[d] && label[a] != label[b]) return false;
  return true;
}

std::vector<Diagram> brute_force(DiagramFamily family, const ColoredWord& w) {
  const int k = static_cast<int>(w.size());
  std::vector<Blocks> all;
  Blocks cur;
  brute_partitions(0, k, cur, all);
  std::vector<Diagram> out;
  for (const auto& blocks : all) {
    const bool pairing = std::ranges::all_of(blocks, [](const auto& b) { return b.size() == 2; });
    const bool matched = pairing && std::ranges::all_of(blocks, [&](const auto& b) { return w[b[0]] != w[b[1]]; });
    const bool nc = brute_noncrossing(blocks, k);
    bool keep = false;
    switch (family) {
      case DiagramFamily::AllPairings: keep = pairing; break;
      case DiagramFamily::NCPairings: keep = pairing && nc; break;
      case DiagramFamily::MatchedPairings: keep = matched; break;
      case DiagramFamily::NCMatchedPairings: keep = matched && nc; break;
      case DiagramFamily::AllPartitions: keep = true; break;
      case DiagramFamily::NCPartitions: keep = nc; break;
    }
    if (keep) out.emplace_back(w, blocks);
  }
  std::ranges::sort(out);
  return out;
}

// Components by BFS over an explicit adjacency list.
std::size_t brute_components(const Diagram& p, const Diagram& q) {
  const std::size_t k = p.size();
  std::vector<std::vector<int>> adj(k);
  for (const Diagram* d : {&p, &q}) {
    for (const auto& b : d->blocks()) {
      for (int x : b)
        for (int y : b)
          if (x != y) adj[x].push_back(y);
    }
  }
  std::vector<bool> seen(k, false);
  std::size_t components = 0;
  for (std::size_t s = 0; s < k; ++s) {
    if (seen[s]) continue;
    ++components;
    std::vector<int> stack{static_cast<int>(s)};
    seen[s] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return components;
}

Diagram dia(const std::string& word, const std::string& text) { return parse_diagram(parse_word(word), text); }

}  // namespace

TEST(Diagrams, NoncrossingExamples) {
  EXPECT_TRUE(is_noncrossing(dia("uuuu", "[[1,2],[3,4]]")));
  EXPECT_FALSE(is_noncrossing(dia("uuuu", "[[1,3],[2,4]]")));
  EXPECT_TRUE(is_noncrossing(dia("uuuu", "[[1,4],[2,3]]")));
  EXPECT_FALSE(is_noncrossing(dia("uuuuu", "[[1,3,5],[2,4]]")));
  EXPECT_TRUE(is_noncrossing(dia("uuuuu", "[[1,2,5],[3,4]]")));
}

TEST(Diagrams, MatchedExamples) {
  EXPECT_TRUE(is_matched(dia("uU", "[[1,2]]")));
  EXPECT_FALSE(is_matched(dia("uu", "[[1,2]]")));
  EXPECT_FALSE(is_matched(dia("uUuU", "[[1,3],[2,4]]")));
  EXPECT_THROW(is_matched(dia("uuu", "[[1,2,3]]")), PreconditionError);
}

TEST(Diagrams, RejectsMalformedBlocks) {
  const auto w = parse_word("uuuu");
  EXPECT_THROW(Diagram(w, {{0, 1}, {1, 2, 3}}), PreconditionError);
  EXPECT_THROW(Diagram(w, {{0, 1}, {2}}), PreconditionError);
  EXPECT_THROW(Diagram(w, {{0, 1}, {2, 7}, {3}}), PreconditionError);
  EXPECT_THROW(Diagram(w, {{0, 1, 2, 3}, {}}), PreconditionError);
}

TEST(Diagrams, EnumerateExamples) {
  EXPECT_EQ(enumerate(DiagramFamily::NCMatchedPairings, parse_word("uU")).size(), 1u);

  const auto nc = enumerate(DiagramFamily::NCMatchedPairings, parse_word("uUuU"));
  ASSERT_EQ(nc.size(), 2u);
  EXPECT_EQ(nc[0].to_string(), "[[1,2],[3,4]]");
  EXPECT_EQ(nc[1].to_string(), "[[1,4],[2,3]]");

  const auto matched = enumerate(DiagramFamily::MatchedPairings, parse_word("uuUU"));
  ASSERT_EQ(matched.size(), 2u);
  EXPECT_EQ(matched[0].to_string(), "[[1,3],[2,4]]");
  EXPECT_EQ(matched[1].to_string(), "[[1,4],[2,3]]");

  EXPECT_TRUE(enumerate(DiagramFamily::AllPairings, parse_word("uuu")).empty());
  EXPECT_TRUE(enumerate(DiagramFamily::MatchedPairings, parse_word("uuuU")).empty());
  EXPECT_EQ(enumerate(DiagramFamily::NCMatchedPairings, parse_word("")).size(), 1u);
}

TEST(Diagrams, EnumerateRespectsCap) {
  Limits limits;
  limits.max_word_length = 4;
  EXPECT_THROW(enumerate(DiagramFamily::AllPairings, ColoredWord::uncolored(6), limits), CapExceeded);
}

TEST(Diagrams, CountsMatchClosedForms) {
  Limits wide;
  wide.max_word_length = 16;
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(enumerate(DiagramFamily::NCPairings, ColoredWord::uncolored(2 * k), wide).size(), catalan(k)) << k;
    EXPECT_EQ(enumerate(DiagramFamily::NCPartitions, ColoredWord::uncolored(k), wide).size(), catalan(k)) << k;
    EXPECT_EQ(enumerate(DiagramFamily::AllPartitions, ColoredWord::uncolored(k), wide).size(), bell(k)) << k;
  }
  for (int k = 1; k <= 6; ++k) {
    EXPECT_EQ(enumerate(DiagramFamily::AllPairings, ColoredWord::uncolored(2 * k), wide).size(),
              double_factorial_odd(k))
        << k;
  }
}

TEST(Diagrams, EnumerationMatchesBruteForceFilter) {
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& w : words_of_length(len, WordFilter::AllColorings)) {
      for (auto family : all_families()) {
        EXPECT_EQ(enumerate(family, w), brute_force(family, w))
            << family_name(family) << " on '" << w.to_string() << "'";
      }
    }
  }
}

TEST(Diagrams, EnumerationIsCanonical) {
  std::mt19937 rng(7);
  for (auto family : all_families()) {
    const auto list = enumerate(family, parse_word("uUuUUu"));
    EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    EXPECT_EQ(std::adjacent_find(list.begin(), list.end()), list.end());
    for (const auto& d : list) {
      auto blocks = d.blocks();
      for (auto& b : blocks) std::ranges::shuffle(b, rng);
      std::ranges::shuffle(blocks, rng);
      EXPECT_EQ(Diagram(d.word(), blocks), d);
      EXPECT_EQ(parse_diagram(d.word(), d.to_string()), d);
    }
  }
}

TEST(Diagrams, FamilyInclusions) {
  for (std::size_t len = 0; len <= 6; ++len) {
    for (const auto& w : words_of_length(len, WordFilter::AllColorings)) {
      auto as_set = [&](DiagramFamily f) {
        const auto v = enumerate(f, w);
        return std::set<Diagram>(v.begin(), v.end());
      };
      const auto all_pairs = as_set(DiagramFamily::AllPairings);
      const auto nc_pairs = as_set(DiagramFamily::NCPairings);
      const auto matched = as_set(DiagramFamily::MatchedPairings);
      const auto nc_matched = as_set(DiagramFamily::NCMatchedPairings);
      const auto parts = as_set(DiagramFamily::AllPartitions);
      const auto nc_parts = as_set(DiagramFamily::NCPartitions);
      EXPECT_TRUE(std::ranges::includes(nc_pairs, nc_matched));
      EXPECT_TRUE(std::ranges::includes(all_pairs, nc_pairs));
      EXPECT_TRUE(std::ranges::includes(all_pairs, matched));
      EXPECT_TRUE(std::ranges::includes(parts, nc_parts));
    }
  }
}

TEST(Diagrams, LoopCountExamples) {
  const auto p = dia("uuuu", "[[1,2],[3,4]]");
  const auto q = dia("uuuu", "[[1,4],[2,3]]");
  EXPECT_EQ(loop_count(p, p), 2u);
  EXPECT_EQ(loop_count(p, q), 1u);
  for (const auto& d : enumerate(DiagramFamily::AllPairings, ColoredWord::uncolored(8))) {
    EXPECT_EQ(loop_count(d, d), 4u);
  }
  EXPECT_THROW(loop_count(p, dia("uuUU", "[[1,2],[3,4]]")), MismatchError);
}

TEST(Diagrams, LoopCountMatchesComponentSearch) {
  for (auto family : {DiagramFamily::AllPairings, DiagramFamily::AllPartitions}) {
    const auto list = enumerate(family, ColoredWord::uncolored(6));
    for (const auto& p : list) {
      for (const auto& q : list) ASSERT_EQ(loop_count(p, q), brute_components(p, q));
    }
  }
}

TEST(Diagrams, GramExamples) {
  const auto nc = enumerate(DiagramFamily::NCPairings, ColoredWord::uncolored(4));
  const auto g2 = gram_matrix(nc, Dimension(2));
  EXPECT_EQ(g2, ExactMatrix::from_rows({{4, 2}, {2, 4}}));
  EXPECT_EQ(rank(g2), 2u);

  const auto g1 = gram_matrix(nc, Dimension(1));
  EXPECT_EQ(g1, ExactMatrix::from_rows({{1, 1}, {1, 1}}));
  EXPECT_EQ(rank(g1), 1u);

  for (int k = 1; k <= 4; ++k) {
    const auto one = enumerate(DiagramFamily::NCPairings, ColoredWord::uncolored(2 * k)).front();
    mpq_class expected = 1;
    for (int i = 0; i < k; ++i) expected *= 3;
    EXPECT_EQ(gram_matrix({one}, Dimension(3)), ExactMatrix::from_rows({{expected}}));
  }
}

TEST(Diagrams, GramIsSymmetricWithPowerDiagonal) {
  const auto list = enumerate(DiagramFamily::AllPairings, ColoredWord::uncolored(6));
  const auto g = gram_matrix(list, Dimension(3));
  for (std::size_t i = 0; i < g.rows(); ++i) {
    EXPECT_EQ(g(i, i), 27);
    for (std::size_t j = 0; j < g.cols(); ++j) EXPECT_EQ(g(i, j), g(j, i));
  }
}

TEST(Diagrams, NoncrossingPairingsIndependentFromDimensionTwo) {
  for (int n : {2, 3}) {
    for (int len = 0; len <= 8; len += 2) {
      const auto list = enumerate(DiagramFamily::NCPairings, ColoredWord::uncolored(len));
      EXPECT_EQ(rank(gram_matrix(list, Dimension(n))), list.size()) << "N=" << n << " len=" << len;
    }
  }
}

TEST(Diagrams, FamilyNamesRoundTrip) {
  for (auto f : all_families()) EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_THROW(parse_family("crossing"), PreconditionError);
}
