#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grig/word.hpp"

namespace grig {

/// A vertex of the binary rooted tree, spelled as a string over {0,1}. The
/// root is the empty string.
class Vertex {
public:
  Vertex() = default;
  static Vertex parse(std::string_view literal);
  /// Level-n vertex with index `i`, most significant bit first, so that
  /// numeric order is lexicographic order.
  static Vertex from_index(std::uint64_t i, unsigned depth);

  const std::string &path() const noexcept { return path_; }
  unsigned depth() const noexcept { return static_cast<unsigned>(path_.size()); }
  std::uint64_t index() const;

  friend bool operator==(const Vertex &, const Vertex &) = default;
  friend auto operator<=>(const Vertex &, const Vertex &) = default;

private:
  explicit Vertex(std::string path) : path_(std::move(path)) {}
  std::string path_;
};

/// First-level wreath recursion of an element g:
///
///   g maps the vertex i.w to (i xor active).(w^section_i)
///
/// so `left` and `right` are the sections at vertices 0 and 1. Equivalently
/// g = s * a^active with s in the first-level stabilizer and psi(s) = (left, right).
struct Decomposition {
  int active = 0;
  Word left;
  Word right;
};

Decomposition decompose(const Word &g);

/// A permutation of the 2^n vertices of level n, as an image table indexed
/// by Vertex::index().
struct LevelPerm {
  unsigned level = 0;
  std::vector<std::uint32_t> images;

  bool is_identity() const;
  /// Order of the permutation (lcm of cycle lengths).
  std::uint64_t order() const;
  friend bool operator==(const LevelPerm &, const LevelPerm &) = default;
};

struct LevelSections {
  LevelPerm perm;
  /// Section at each level-n vertex, indexed by the source vertex.
  std::vector<Word> sections;
};

/// Level permutation and all 2^n sections, computed by iterated decompose.
LevelSections sections_at(const Word &g, unsigned n);

/// Image of a vertex, computed letter by letter from the generator automaton
/// (independent of decompose).
Vertex act(const Word &g, const Vertex &v);

/// Level-n permutation computed from the generator automaton by composing
/// per-letter tables. Intended for n up to about 16.
LevelPerm level_perm(const Word &g, unsigned n);

/// True iff g fixes every vertex of depth n.
bool in_level_stabilizer(const Word &g, unsigned n);

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kDefaultActiveLevelCap = 64;

/// The unique n with g in St(n) minus St(n+1), or nullopt when g is the
/// identity. Throws CapExceeded if g is nontrivial but fixes every level up
/// to `cap`.
std::optional<unsigned> first_active_level(const Word &g, unsigned cap = kDefaultActiveLevelCap);

} // namespace grig
