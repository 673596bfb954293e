#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace grig {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation of {0..n-1} acting on the right: point^(p*q) = (point^p)^q.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return images_[i]; }
  const std::vector<std::uint32_t> &images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;
  /// First point moved, if any.
  std::optional<std::uint32_t> first_moved() const noexcept;

  friend Perm operator*(const Perm &p, const Perm &q);
  friend bool operator==(const Perm &, const Perm &) = default;

private:
  std::vector<std::uint32_t> images_;
};

/// Base and strong generating set for a permutation group, built by the
/// deterministic Schreier-Sims algorithm. Base points are chosen as the
/// least point moved by the element that needs a new level, so identical
/// generator lists give identical chains.
class StabilizerChain {
public:
  StabilizerChain(std::size_t degree, const std::vector<Perm> &generators);

  /// Adds a generator and restores the chain invariants.
  void add_generator(const Perm &g);

  bool contains(const Perm &g) const;
  BigInt order() const;

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<std::uint32_t> &base() const noexcept { return base_; }
  const std::vector<Perm> &generators() const noexcept { return generators_; }
  std::size_t strong_generator_count() const noexcept { return strong_.size(); }

private:
  struct Level {
    std::uint32_t point = 0;
    std::vector<std::size_t> gens;          // indices into strong_
    std::vector<std::uint32_t> orbit;       // in discovery order
    std::vector<std::optional<Perm>> coset; // coset[p] maps point to p
  };

  /// Sifts g through levels [from, end). Returns the residue and the level
  /// at which sifting stopped (levels_.size() if it went all the way).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  void rebuild_orbit(std::size_t level);
  /// Adds a residue fixing the first `depth` base points to levels
  /// [from, depth], appending a new base point if needed.
  void insert_strong(const Perm &residue, std::size_t from, std::size_t depth);
  void complete(std::size_t start_level);

  std::size_t degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> strong_;
  std::vector<std::uint32_t> base_;
  std::vector<Level> levels_;
};

} // namespace grig
