#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "grig/tree.hpp"
#include "grig/word.hpp"

namespace grig {

inline constexpr std::size_t kDefaultCacheCapacity = std::size_t{1} << 20;
inline constexpr unsigned kDefaultOrderCap = 12;
inline constexpr unsigned kDefaultWitnessDepth = 12;

/// Word problem solver by recursion on sections. Results are memoized in a
/// bounded LRU cache keyed by the reduced word; the cache is safe to share
/// between threads.
class TrivialityDecider {
public:
  explicit TrivialityDecider(std::size_t capacity = kDefaultCacheCapacity) : capacity_(capacity) {}

  bool is_trivial(const Word &g);

  std::size_t cache_size() const;
  void clear();

  /// Process-wide instance used by the free functions below.
  static TrivialityDecider &shared();

private:
  std::optional<bool> lookup(const std::string &key);
  void store(const std::string &key, bool value);

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<std::pair<std::string, bool>> lru_;
  std::unordered_map<std::string, std::list<std::pair<std::string, bool>>::iterator> index_;
};

/// Decides g == 1 in the group.
bool is_trivial(const Word &g);
bool are_equal(const Word &g, const Word &h);

/// Lexicographically least vertex of least depth moved by g, searching
/// depths 1..max_depth; nullopt if g fixes all of them. Computed from level
/// permutations of the generator automaton, so it is independent of the
/// section recursion used by is_trivial.
std::optional<Vertex> witness_vertex(const Word &g, unsigned max_depth);

/// Some vertex moved by g, found by following nontrivial sections. Returns
/// nullopt iff g is trivial. Not necessarily of least depth.
std::optional<Vertex> moved_vertex(const Word &g);

/// Order of an element of the 2-group: either 2^exponent exactly, or known
/// to exceed 2^cap.
struct OrderResult {
  bool exact = false;
  unsigned exponent = 0; // log2 of the order when exact, else the cap

  static OrderResult Exact(unsigned e) { return {true, e}; }
  static OrderResult ExceededCap(unsigned cap) { return {false, cap}; }

  unsigned long long value() const { return 1ULL << exponent; }
  std::string str() const;
  friend bool operator==(const OrderResult &, const OrderResult &) = default;
};

OrderResult order(const Word &g, unsigned cap = kDefaultOrderCap);

} // namespace grig
