#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "grig/word.hpp"

namespace grig {

/// Seeded generator with platform-independent draws (std distributions are
/// implementation-defined, which would break byte-identical output).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return below(2) == 1; }

private:
  std::mt19937_64 engine_;
};

/// Non-backtracking random walk: a reduced word of exactly `length` letters.
inline Word random_word(Rng &rng, std::size_t length) {
  std::string w;
  w.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (w.empty())
      w.push_back(static_cast<char>('a' + rng.below(4)));
    else if (w.back() == 'a')
      w.push_back(static_cast<char>('b' + rng.below(3)));
    else
      w.push_back('a');
  }
  return Word::from_reduced(std::move(w));
}

/// Uniformly random letters, not reduced.
inline std::string random_raw_word(Rng &rng, std::size_t length) {
  std::string w(length, 'a');
  for (auto &x : w)
    x = static_cast<char>('a' + rng.below(4));
  return w;
}

/// Random reduced word with an even number of `a` letters, i.e. an element
/// of the first-level stabilizer.
inline Word random_stabilizer_word(Rng &rng, std::size_t length) {
  Word w = random_word(rng, length);
  if (w.root_activity())
    w = w * Word::from_reduced("a");
  return w;
}

} // namespace grig
