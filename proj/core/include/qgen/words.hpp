#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgen {

/// A tensorand: the fundamental representation V (Plain) or its dual V* (Star).
enum class Color : std::uint8_t { Plain = 0, Star = 1 };

constexpr Color flip(Color c) noexcept {
  return c == Color::Plain ? Color::Star : Color::Plain;
}

/// A tensor word V^{e_1} (x) ... (x) V^{e_k}. The empty word is the trivial
/// representation.
///
/// Words order by length first and then lexicographically with Plain < Star,
/// which is the order reports are assembled in.
class ColoredWord {
 public:
  ColoredWord() = default;
  explicit ColoredWord(std::vector<Color> letters) : letters_(std::move(letters)) {}

  /// The all-Plain word of length k, used where colors are irrelevant.
  static ColoredWord uncolored(std::size_t k);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Color operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Color> letters() const noexcept { return letters_; }

  /// #Plain - #Star.
  int balance() const noexcept;

  /// Text form over {u, U}.
  std::string to_string() const;

  bool operator==(const ColoredWord&) const = default;
  std::strong_ordering operator<=>(const ColoredWord& other) const;

 private:
  std::vector<Color> letters_;
};

/// Reverse and flip every color. Involutive.
ColoredWord conjugate_word(const ColoredWord& w);

/// Parses text over {u, U}; throws ParseError naming the 1-based position of
/// the first offending character.
ColoredWord parse_word(std::string_view text);

/// Size N of the fundamental representation.
class Dimension {
 public:
  /// Throws PreconditionError when n < 1.
  explicit Dimension(int n);
  int value() const noexcept { return n_; }
  bool operator==(const Dimension&) const = default;

 private:
  int n_;
};

/// Guards shared by the enumeration, realization and checking modules.
struct Limits {
  std::size_t max_word_length = 10;
  std::uint64_t max_entries = 10'000'000;
};

/// Throws CapExceeded if w is longer than limits allow.
void check_word_length(const ColoredWord& w, const Limits& limits);

enum class WordFilter { AllColorings, UncoloredOnly };

/// Every word of length exactly `length` admitted by the filter, in word order.
std::vector<ColoredWord> words_of_length(std::size_t length, WordFilter filter);

}  // namespace qgen
