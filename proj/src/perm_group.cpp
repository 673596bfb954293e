#include "grig/perm_group.hpp"

#include <cassert>
#include <numeric>

namespace grig {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  return Perm(std::move(inv));
}

std::optional<std::uint32_t> Perm::first_moved() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return static_cast<std::uint32_t>(i);
  return std::nullopt;
}

Perm operator*(const Perm &p, const Perm &q) {
  assert(p.degree() == q.degree());
  std::vector<std::uint32_t> r(p.degree());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = q.images_[p.images_[i]];
  return Perm(std::move(r));
}

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm> &generators)
    : degree_(degree) {
  for (const Perm &g : generators)
    add_generator(g);
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level &lv = levels_[l];
    std::uint32_t image = g[lv.point];
    if (!lv.coset[image])
      return {std::move(g), l};
    g = g * lv.coset[image]->inverse();
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level &lv = levels_[level];
  lv.orbit.assign(1, lv.point);
  lv.coset.assign(degree_, std::nullopt);
  lv.coset[lv.point] = Perm(degree_);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    std::uint32_t p = lv.orbit[k];
    for (std::size_t gi : lv.gens) {
      const Perm &s = strong_[gi];
      std::uint32_t q = s[p];
      if (!lv.coset[q]) {
        lv.coset[q] = *lv.coset[p] * s;
        lv.orbit.push_back(q);
      }
    }
  }
}

void StabilizerChain::insert_strong(const Perm &residue, std::size_t from, std::size_t depth) {
  if (depth == levels_.size()) {
    auto moved = residue.first_moved();
    assert(moved);
    base_.push_back(*moved);
    levels_.push_back(Level{*moved, {}, {}, {}});
  }
  strong_.push_back(residue);
  for (std::size_t l = from; l <= depth; ++l) {
    levels_[l].gens.push_back(strong_.size() - 1);
    rebuild_orbit(l);
  }
}

void StabilizerChain::complete(std::size_t start_level) {
  std::size_t i = start_level;
  while (true) {
    bool changed = false;
    Level &lv = levels_[i];
    for (std::size_t k = 0; !changed && k < lv.orbit.size(); ++k) {
      std::uint32_t beta = lv.orbit[k];
      for (std::size_t g = 0; !changed && g < lv.gens.size(); ++g) {
        const Perm &s = strong_[lv.gens[g]];
        Perm schreier = *lv.coset[beta] * s * lv.coset[s[beta]]->inverse();
        auto [residue, depth] = strip(std::move(schreier), i + 1);
        if (!residue.is_identity()) {
          insert_strong(residue, i + 1, depth);
          i = depth;
          changed = true;
        }
      }
    }
    if (changed)
      continue;
    if (i == 0)
      break;
    --i;
  }
}

void StabilizerChain::add_generator(const Perm &g) {
  assert(g.degree() == degree_);
  generators_.push_back(g);
  auto [residue, depth] = strip(g, 0);
  if (residue.is_identity())
    return;
  insert_strong(residue, 0, depth);
  complete(depth);
}

bool StabilizerChain::contains(const Perm &g) const {
  auto [residue, depth] = strip(g, 0);
  return depth == levels_.size() && residue.is_identity();
}

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const Level &lv : levels_)
    n *= static_cast<unsigned>(lv.orbit.size());
  return n;
}

} // namespace grig
