#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grig/decision.hpp"
#include "grig/perm_group.hpp"
#include "grig/word.hpp"

namespace grig {

/// t = (ab)^2, the element whose normal closure is the branching subgroup K.
Word k_generator_t();

struct KGenerators {
  Word t, u, v;
};

/// t = (ab)^2, u = (bada)^2, v = (abad)^2, with psi(u) = (t, 1) and
/// psi(v) = (1, t).
KGenerators k_generators();

/// A formal product of signed conjugates of t: the factor (w, s) denotes
/// (t^w)^s. Every TWord names an element of K by construction.
struct TFactor {
  Word conjugator;
  int sign = 1;
  friend bool operator==(const TFactor &, const TFactor &) = default;
};

class TWord {
public:
  TWord() = default;
  explicit TWord(std::vector<TFactor> factors) : factors_(std::move(factors)) {}

  /// t itself.
  static TWord t();
  /// Parses "w^+1;w^-1;..." (empty string for the empty product).
  static TWord parse(std::string_view literal);
  std::string str() const;

  const std::vector<TFactor> &factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }

  TWord inverse() const;
  /// Conjugate by g: right-multiplies every conjugator.
  TWord conjugate(const Word &g) const;
  friend TWord operator*(const TWord &x, const TWord &y);
  friend bool operator==(const TWord &, const TWord &) = default;

private:
  std::vector<TFactor> factors_;
};

/// [x, y] = x^-1 y^-1 x y in the formal algebra.
TWord commutator(const TWord &x, const TWord &y);

Word flatten(const TWord &k);

/// s in St(1) whose section at vertex 0 equals g.
Word lift_first(const Word &g);
/// s in St(1) whose section at vertex 1 equals g.
Word lift_second(const Word &g);

/// y in K with psi(y) = (flatten(k1), flatten(k2)).
Word emb_pair(const TWord &k1, const TWord &k2);

class ResourceCap : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMaxQuotientLevel = 8;

/// The image G_n of the group acting on level-n vertices, and the image H_n
/// of K (normal closure of the image of t).
class LevelQuotient {
public:
  /// Builds G_n and H_n; 1 <= n <= kMaxQuotientLevel.
  static LevelQuotient build(unsigned n);

  unsigned level() const noexcept { return level_; }
  const BigInt &group_order() const noexcept { return group_order_; }
  const BigInt &k_image_order() const noexcept { return k_image_order_; }
  /// [G_n : H_n].
  std::uint64_t k_image_index() const noexcept { return k_image_index_; }

  /// Image of a word on this level.
  Perm image(const Word &g) const;
  bool in_group_image(const Perm &p) const { return group_->contains(p); }
  bool in_k_image(const Perm &p) const { return k_->contains(p); }
  const StabilizerChain &group_chain() const { return *group_; }
  const StabilizerChain &k_chain() const { return *k_; }

private:
  unsigned level_ = 0;
  BigInt group_order_;
  BigInt k_image_order_;
  std::uint64_t k_image_index_ = 0;
  std::shared_ptr<const StabilizerChain> group_;
  std::shared_ptr<const StabilizerChain> k_;
};

/// Shared, lazily built quotient for level n.
const LevelQuotient &level_quotient(unsigned n);

/// Index plateau: the first three consecutive levels (deepest at most
/// kMaxQuotientLevel) with equal k_image_index.
struct IndexPlateau {
  unsigned first_level = 0;
  unsigned membership_level = 0; // deepest level of the plateau
  std::uint64_t index = 0;
  std::vector<std::uint64_t> indices; // k_image_index for levels 1..membership_level
};

std::optional<IndexPlateau> certify_index_plateau();

enum class KVerdict { Inside, Outside, Unknown };

struct KMembershipResult {
  KVerdict verdict = KVerdict::Unknown;
  unsigned level = 0; // 0 when decided by root activity
  std::string reason;
};

std::string to_string(KVerdict v);

KMembershipResult membership_in_K(const Word &g);

inline constexpr unsigned kDefaultConjugatorLength = 12;

/// Random search for an element of K of order at least `target_order` (a
/// power of two). Candidates are products of one to three signed conjugates
/// of t; conjugator length starts at 12 and doubles each quarter of the
/// budget. With `exact`, only an order equal to the target is accepted.
/// Deterministic in `seed`.
std::optional<TWord> search_high_order(std::uint64_t target_order, std::uint64_t budget,
                                       std::uint64_t seed, bool exact = false);

} // namespace grig
