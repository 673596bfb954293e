#include "grig/tree.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <cassert>
#include <numeric>

#include "grig/decision.hpp"

namespace grig {

namespace {

// Sections (at vertex 0, at vertex 1) of the nonrooted generators; '\0' is
// the identity.
struct SectionPair {
  char left;
  char right;
};

SectionPair generator_sections(char x) {
  switch (x) {
  case 'b': return {'a', 'c'};
  case 'c': return {'a', 'd'};
  case 'd': return {'\0', 'b'};
  default: break;
  }
  assert(false && "not a nonrooted generator");
  return {'\0', '\0'};
}

// Runs one generator over path[pos..], editing it in place.
void act_letter(char x, std::string &path, std::size_t pos) {
  while (x != '\0' && pos < path.size()) {
    char bit = path[pos];
    if (x == 'a') {
      path[pos] = bit == '0' ? '1' : '0';
      return;
    }
    SectionPair s = generator_sections(x);
    x = bit == '0' ? s.left : s.right;
    ++pos;
  }
}

} // namespace

Vertex Vertex::parse(std::string_view literal) {
  for (std::size_t i = 0; i < literal.size(); ++i)
    if (literal[i] != '0' && literal[i] != '1')
      throw ParseError(std::string(literal), i,
                       "invalid symbol '" + std::string(1, literal[i]) + "' at position " +
                           std::to_string(i) + " in vertex literal '" + std::string(literal) +
                           "'");
  return Vertex(std::string(literal));
}

Vertex Vertex::from_index(std::uint64_t i, unsigned depth) {
  std::string p(depth, '0');
  for (unsigned k = 0; k < depth; ++k)
    if ((i >> (depth - 1 - k)) & 1u)
      p[k] = '1';
  return Vertex(std::move(p));
}

std::uint64_t Vertex::index() const {
  std::uint64_t i = 0;
  for (char c : path_)
    i = (i << 1) | static_cast<std::uint64_t>(c == '1');
  return i;
}

Decomposition decompose(const Word &g) {
  std::string left, right;
  int parity = 0;
  for (char x : g.letters()) {
    if (x == 'a') {
      parity ^= 1;
      continue;
    }
    SectionPair s = generator_sections(x);
    if (parity)
      std::swap(s.left, s.right);
    if (s.left)
      left.push_back(s.left);
    if (s.right)
      right.push_back(s.right);
  }
  return {parity, Word::reduce(left), Word::reduce(right)};
}

bool LevelPerm::is_identity() const {
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] != i)
      return false;
  return true;
}

std::uint64_t LevelPerm::order() const {
  std::vector<bool> seen(images.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

LevelSections sections_at(const Word &g, unsigned n) {
  LevelSections out;
  out.perm.level = n;
  out.perm.images.assign(std::size_t{1} << n, 0);
  out.sections.resize(std::size_t{1} << n);

  // Each frame is a subtree: its section and how the prefix above it maps.
  struct Frame {
    Word section;
    std::uint32_t source;
    std::uint32_t target;
    unsigned depth;
  };
  std::vector<Frame> stack{{g, 0, 0, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.depth == n) {
      out.perm.images[f.source] = f.target;
      out.sections[f.source] = std::move(f.section);
      continue;
    }
    Decomposition d = decompose(f.section);
    std::uint32_t s = f.source << 1, t = f.target << 1;
    stack.push_back({std::move(d.right), s | 1u, t | (1u ^ d.active), f.depth + 1});
    stack.push_back({std::move(d.left), s, t | static_cast<std::uint32_t>(d.active), f.depth + 1});
  }
  return out;
}

Vertex act(const Word &g, const Vertex &v) {
  std::string path = v.path();
  for (char x : g.letters())
    act_letter(x, path, 0);
  return Vertex::parse(path);
}

namespace {

using LetterTables = std::array<std::vector<std::uint32_t>, 4>;

const LetterTables &letter_tables(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, LetterTables> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  const std::size_t size = std::size_t{1} << n;
  LetterTables tables;
  for (int k = 0; k < 4; ++k) {
    tables[k].resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      std::string path = Vertex::from_index(i, n).path();
      act_letter(static_cast<char>('a' + k), path, 0);
      tables[k][i] = static_cast<std::uint32_t>(Vertex::parse(path).index());
    }
  }
  return cache.emplace(n, std::move(tables)).first->second;
}

} // namespace

LevelPerm level_perm(const Word &g, unsigned n) {
  const std::size_t size = std::size_t{1} << n;
  const LetterTables &tables = letter_tables(n);
  LevelPerm p{n, std::vector<std::uint32_t>(size)};
  std::iota(p.images.begin(), p.images.end(), 0u);
  for (char x : g.letters()) {
    const auto &t = tables[x - 'a'];
    for (auto &img : p.images)
      img = t[img];
  }
  return p;
}

bool in_level_stabilizer(const Word &g, unsigned n) {
  if (n == 0 || g.empty())
    return true;
  if (g.root_activity())
    return false;
  Decomposition d = decompose(g);
  return in_level_stabilizer(d.left, n - 1) && in_level_stabilizer(d.right, n - 1);
}

namespace {

struct ActiveSearch {
  std::optional<unsigned> level;
  bool hit_cap = false;
};

ActiveSearch search_active(const Word &g, unsigned depth, unsigned cap) {
  if (g.empty())
    return {};
  if (g.root_activity())
    return {depth, false};
  if (depth >= cap)
    return {std::nullopt, true};
  Decomposition d = decompose(g);
  ActiveSearch l = search_active(d.left, depth + 1, cap);
  ActiveSearch r = search_active(d.right, depth + 1, cap);
  ActiveSearch out;
  out.hit_cap = l.hit_cap || r.hit_cap;
  if (l.level && r.level)
    out.level = std::min(*l.level, *r.level);
  else
    out.level = l.level ? l.level : r.level;
  return out;
}

} // namespace

std::optional<unsigned> first_active_level(const Word &g, unsigned cap) {
  ActiveSearch s = search_active(g, 0, cap);
  if (s.level)
    return s.level;
  if (!s.hit_cap || is_trivial(g))
    return std::nullopt;
  throw CapExceeded("element " + g.str() + " fixes every level through " + std::to_string(cap) +
                    " but is nontrivial; raise the level cap");
}

} // namespace grig
