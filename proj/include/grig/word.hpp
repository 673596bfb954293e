#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace grig {

/// Raised on malformed word, vertex or TWord literals. Carries the offending
/// literal and the position of the first bad character.
class ParseError : public std::invalid_argument {
public:
  ParseError(std::string literal, std::size_t position, const std::string &what)
      : std::invalid_argument(what), literal_(std::move(literal)), position_(position) {}

  const std::string &literal() const noexcept { return literal_; }
  std::size_t position() const noexcept { return position_; }

private:
  std::string literal_;
  std::size_t position_;
};

inline bool is_letter(char x) noexcept { return x >= 'a' && x <= 'd'; }
inline bool is_nonrooted(char x) noexcept { return x >= 'b' && x <= 'd'; }

/// Product of two distinct letters of {b, c, d} (Klein four-group table).
inline char klein_product(char u, char v) noexcept {
  // b, c, d are 1, 2, 3 under xor
  return static_cast<char>('a' + ((u - 'a') ^ (v - 'a')));
}

/// A word over {a,b,c,d} with no adjacent equal letters and no two adjacent
/// letters from {b,c,d}. Letters alternate between `a` and {b,c,d}.
///
/// This is a representative of a group element, not a normal form: two
/// different reduced words may denote the same element. Use
/// grig::are_equal to compare elements.
class Word {
public:
  Word() = default;

  /// Reduces an arbitrary letter sequence. Throws ParseError on a letter
  /// outside {a,b,c,d}.
  static Word reduce(std::string_view raw);

  /// Parses a literal: a string over {a,b,c,d}, with "1" (or "") denoting
  /// the identity. The result is reduced.
  static Word parse(std::string_view literal);

  /// Wraps a string already known to be reduced; checked in debug builds.
  static Word from_reduced(std::string letters);

  const std::string &letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const noexcept { return letters_[i]; }

  /// Parity of the number of `a` letters; 1 iff the element swaps the two
  /// halves of the tree.
  int root_activity() const noexcept;

  /// Text form: the letters, or "1" for the identity.
  std::string str() const { return letters_.empty() ? std::string("1") : letters_; }

  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &, const Word &) = default;

private:
  explicit Word(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// True iff `letters` satisfies the reduced-word shape invariants.
bool is_reduced(std::string_view letters) noexcept;

Word multiply(const Word &x, const Word &y);
Word invert(const Word &x);
/// x^g = g^-1 x g.
Word conjugate(const Word &x, const Word &g);
/// [x, g] = x^-1 g^-1 x g.
Word commutator(const Word &x, const Word &g);
/// x^e for e >= 0 by repeated squaring.
Word power(const Word &x, unsigned long long e);

inline Word operator*(const Word &x, const Word &y) { return multiply(x, y); }

} // namespace grig

template <> struct std::hash<grig::Word> {
  std::size_t operator()(const grig::Word &w) const noexcept {
    return std::hash<std::string>{}(w.letters());
  }
};
