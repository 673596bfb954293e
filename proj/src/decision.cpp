#include "grig/decision.hpp"

#include <stdexcept>

namespace grig {

TrivialityDecider &TrivialityDecider::shared() {
  static TrivialityDecider instance;
  return instance;
}

std::optional<bool> TrivialityDecider::lookup(const std::string &key) {
  std::lock_guard lock(mutex_);
  auto it = index_.find(key);
  if (it == index_.end())
    return std::nullopt;
  lru_.splice(lru_.begin(), lru_, it->second);
  return it->second->second;
}

void TrivialityDecider::store(const std::string &key, bool value) {
  std::lock_guard lock(mutex_);
  if (capacity_ == 0 || index_.count(key))
    return;
  lru_.emplace_front(key, value);
  index_.emplace(key, lru_.begin());
  if (lru_.size() > capacity_) {
    index_.erase(lru_.back().first);
    lru_.pop_back();
  }
}

std::size_t TrivialityDecider::cache_size() const {
  std::lock_guard lock(mutex_);
  return lru_.size();
}

void TrivialityDecider::clear() {
  std::lock_guard lock(mutex_);
  lru_.clear();
  index_.clear();
}

bool TrivialityDecider::is_trivial(const Word &g) {
  if (g.root_activity())
    return false;
  if (g.size() <= 1)
    return g.empty();
  if (auto hit = lookup(g.letters()))
    return *hit;

  Decomposition d = decompose(g);
  // Contraction: each section is at most half as long (rounded up). The
  // recursion is well founded only if this holds.
  const std::size_t bound = (g.size() + 1) / 2;
  if (d.left.size() > bound || d.right.size() > bound)
    throw std::logic_error("contraction bound violated for " + g.str());

  bool result = is_trivial(d.left) && is_trivial(d.right);
  store(g.letters(), result);
  return result;
}

bool is_trivial(const Word &g) { return TrivialityDecider::shared().is_trivial(g); }

bool are_equal(const Word &g, const Word &h) { return is_trivial(g * invert(h)); }

std::optional<Vertex> witness_vertex(const Word &g, unsigned max_depth) {
  for (unsigned depth = 1; depth <= max_depth; ++depth) {
    LevelPerm p = level_perm(g, depth);
    for (std::size_t i = 0; i < p.images.size(); ++i)
      if (p.images[i] != i)
        return Vertex::from_index(i, depth);
  }
  return std::nullopt;
}

std::optional<Vertex> moved_vertex(const Word &g) {
  std::string path;
  Word current = g;
  while (!current.empty()) {
    if (current.root_activity())
      return Vertex::parse(path + '0');
    Decomposition d = decompose(current);
    if (!is_trivial(d.left)) {
      path.push_back('0');
      current = std::move(d.left);
    } else if (!is_trivial(d.right)) {
      path.push_back('1');
      current = std::move(d.right);
    } else {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string OrderResult::str() const {
  if (exact)
    return std::to_string(value());
  return ">2^" + std::to_string(exponent);
}

OrderResult order(const Word &g, unsigned cap) {
  Word p = g;
  for (unsigned k = 0; k <= cap; ++k) {
    if (is_trivial(p))
      return OrderResult::Exact(k);
    if (k < cap)
      p = p * p;
  }
  return OrderResult::ExceededCap(cap);
}

} // namespace grig
