#include "qgen/words.hpp"

#include <algorithm>

#include "qgen/errors.hpp"

namespace qgen {

ColoredWord ColoredWord::uncolored(std::size_t k) {
  return ColoredWord(std::vector<Color>(k, Color::Plain));
}

int ColoredWord::balance() const noexcept {
  int b = 0;
  for (Color c : letters_) b += c == Color::Plain ? 1 : -1;
  return b;
}

std::string ColoredWord::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (Color c : letters_) s.push_back(c == Color::Plain ? 'u' : 'U');
  return s;
}

std::strong_ordering ColoredWord::operator<=>(const ColoredWord& other) const {
  if (auto cmp = letters_.size() <=> other.letters_.size(); cmp != 0) return cmp;
  return letters_ <=> other.letters_;
}

ColoredWord conjugate_word(const ColoredWord& w) {
  std::vector<Color> out(w.letters().rbegin(), w.letters().rend());
  std::ranges::transform(out, out.begin(), flip);
  return ColoredWord(std::move(out));
}

ColoredWord parse_word(std::string_view text) {
  std::vector<Color> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'u': letters.push_back(Color::Plain); break;
      case 'U': letters.push_back(Color::Star); break;
      default:
        throw ParseError(i + 1, "invalid character '" + std::string(1, text[i]) +
                                    "' at position " + std::to_string(i + 1) +
                                    " (expected 'u' or 'U')");
    }
  }
  return ColoredWord(std::move(letters));
}

Dimension::Dimension(int n) : n_(n) {
  if (n < 1) throw PreconditionError("dimension must be >= 1, got " + std::to_string(n));
}

void check_word_length(const ColoredWord& w, const Limits& limits) {
  if (w.size() > limits.max_word_length) {
    throw CapExceeded("word '" + w.to_string() + "' has length " + std::to_string(w.size()) +
                      " above the cap " + std::to_string(limits.max_word_length));
  }
}

std::vector<ColoredWord> words_of_length(std::size_t length, WordFilter filter) {
  if (filter == WordFilter::UncoloredOnly) return {ColoredWord::uncolored(length)};
  if (length >= 63) throw CapExceeded("too many colorings to enumerate");
  std::vector<ColoredWord> out;
  const std::uint64_t count = std::uint64_t{1} << length;
  out.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    std::vector<Color> letters(length);
    // Most significant bit is position 0, so counting order is word order.
    for (std::size_t i = 0; i < length; ++i) {
      letters[i] = (bits >> (length - 1 - i)) & 1U ? Color::Star : Color::Plain;
    }
    out.emplace_back(std::move(letters));
  }
  return out;
}

}  // namespace qgen
