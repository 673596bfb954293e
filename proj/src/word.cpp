#include "grig/word.hpp"

#include <algorithm>
#include <cassert>

namespace grig {

namespace {

// Pushes one letter onto a reduced stack, merging and cancelling as far as
// the rewriting rules allow.
void push_letter(std::string &stack, char x) {
  while (!stack.empty()) {
    char top = stack.back();
    if (top == x) {
      stack.pop_back();
      return;
    }
    if (is_nonrooted(top) && is_nonrooted(x)) {
      stack.pop_back();
      x = klein_product(top, x);
      continue;
    }
    break;
  }
  stack.push_back(x);
}

} // namespace

bool is_reduced(std::string_view letters) noexcept {
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!is_letter(letters[i]))
      return false;
    if (i > 0) {
      char p = letters[i - 1], q = letters[i];
      if (p == q || (is_nonrooted(p) && is_nonrooted(q)))
        return false;
    }
  }
  return true;
}

Word Word::reduce(std::string_view raw) {
  std::string stack;
  stack.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char x = raw[i];
    if (!is_letter(x))
      throw ParseError(std::string(raw), i,
                       "invalid letter '" + std::string(1, x) + "' at position " +
                           std::to_string(i) + " in word literal '" + std::string(raw) + "'");
    push_letter(stack, x);
  }
  return Word(std::move(stack));
}

Word Word::parse(std::string_view literal) {
  if (literal == "1")
    return Word();
  return reduce(literal);
}

Word Word::from_reduced(std::string letters) {
  assert(is_reduced(letters));
  return Word(std::move(letters));
}

int Word::root_activity() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'a') & 1);
}

Word multiply(const Word &x, const Word &y) {
  // Both factors are reduced, so rewriting only happens at the seam.
  std::string out = x.letters();
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  for (; i < y.size(); ++i) {
    std::size_t before = out.size();
    push_letter(out, y[i]);
    // a plain append means the rest of y is already reduced against it
    if (out.size() == before + 1) {
      ++i;
      break;
    }
  }
  out.append(y.letters(), i, std::string::npos);
  return Word::from_reduced(std::move(out));
}

Word invert(const Word &x) {
  std::string r(x.letters().rbegin(), x.letters().rend());
  return Word::from_reduced(std::move(r));
}

Word conjugate(const Word &x, const Word &g) { return invert(g) * x * g; }

Word commutator(const Word &x, const Word &g) { return invert(x) * conjugate(x, g); }

Word power(const Word &x, unsigned long long e) {
  Word result;
  Word base = x;
  while (e > 0) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return result;
}

} // namespace grig
