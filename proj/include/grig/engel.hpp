#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "grig/branch.hpp"
#include "grig/decision.hpp"
#include "grig/random.hpp"
#include "grig/tree.hpp"
#include "grig/word.hpp"

namespace grig {

class PreconditionViolated : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A tower grew past the configured length cap.
class TowerBlowup : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SearchExhausted : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultTowerLengthCap = std::size_t{1} << 16;
inline constexpr std::size_t kDefaultWalkLength = 24;

/// Left-normed commutators [x, g], [x, g, g], ..., [x,_n g]; element i is
/// [x,_{i+1} g]. Throws TowerBlowup if a representative exceeds `cap`.
std::vector<Word> commutator_tower(const Word &x, const Word &g, unsigned n,
                                   std::size_t cap = kDefaultTowerLengthCap);

/// [x,_n g] = [[x,_{n-1} g], g], n >= 1.
Word iterated_commutator(const Word &x, const Word &g, unsigned n,
                         std::size_t cap = kDefaultTowerLengthCap);

/// A vertex moved by a nontrivial g: the least one through `max_depth` if
/// there is one, otherwise one found by following nontrivial sections.
Vertex nontriviality_witness(const Word &g, unsigned max_depth = kDefaultWitnessDepth);

struct EngelSink {
  Word g, x;
  unsigned n = 0;                 // least n >= 1 with [x,_n g] = 1
  std::vector<std::size_t> lengths; // representative lengths of [x,_1 g] .. [x,_n g]
};

struct NoSinkUpTo {
  Word g, x;
  unsigned bound = 0;
  std::vector<std::size_t> lengths;
  Vertex witness; // moved by [x,_bound g]
};

using ProbeResult = std::variant<EngelSink, NoSinkUpTo>;

ProbeResult left_engel_probe(const Word &g, const Word &x, unsigned bound,
                             std::size_t cap = kDefaultTowerLengthCap);

/// Searches random x (walk length up to `walk_length`) with [x,_n g] != 1
/// for all n <= bound.
std::optional<NoSinkUpTo> search_left_witness(const Word &g, unsigned bound, std::uint64_t budget,
                                              std::uint64_t seed,
                                              std::size_t walk_length = kDefaultWalkLength,
                                              std::size_t cap = kDefaultTowerLengthCap);

// Commutator tower identities for x = a*g.

struct CoordinateCheck {
  bool holds = false;
  Decomposition lhs;    // psi of the tower
  Word rhs_left, rhs_right;
};

/// With x = a*g an involution, g in St(1), psi(g) = (g1, g2) and
/// y = emb_pair(k, 1):
///
///   psi([y,_m x]) = (k^((-1)^m 2^(m-1)), (k^g2)^((-1)^(m-1) 2^(m-1)))
///
/// Both sides are computed independently and compared with are_equal.
CoordinateCheck lemma1_evaluate(const TWord &k, const Word &g, unsigned m);
bool lemma1_check(const TWord &k, const Word &g, unsigned m);

/// With x = a*g (odd root activity), y in St(1), psi(g) = (g1, g2),
/// psi(y) = (y1, y2):
///
///   psi([x,_{m+1} y]) = ([(y2^-1)^g1,_m y1]^y1, [(y1^-1)^g2,_m y2]^y2)
CoordinateCheck lemma2_evaluate(const Word &x, const Word &y, unsigned m);
bool lemma2_check(const Word &x, const Word &y, unsigned m);

/// Reduction of a nontrivial element to a section with odd root activity:
/// the element lies in St(level) and its section at `vertex` (of depth
/// `level`) is `section`, which is not in St(1).
struct ActiveReduction {
  unsigned level = 0;
  Vertex vertex;
  Word section;
};

ActiveReduction reduce_to_active(const Word &x);

struct BoundedLeftRefutation {
  Word x;
  ActiveReduction reduction;
  TWord k;
  unsigned k_order_exponent = 0; // order(flatten(k)) = 2^k_order_exponent
  unsigned bound = 0;
  Word y;                          // emb_pair(k, 1)
  std::vector<std::size_t> lengths; // of [y,_m x_active], m = 1..bound
  Vertex witness;                  // moved by [y,_bound x_active]
};

/// Refutes "x is a left bound-Engel element" for an involution x != 1.
BoundedLeftRefutation replay_bounded_left(const Word &x, unsigned bound, std::uint64_t budget,
                                          std::uint64_t seed = 1);

struct NonEngelPair {
  TWord h, y1;
};

/// A pair in K with [h,_n y1] != 1 for every n <= bound.
std::optional<NonEngelPair> search_nonengel_pair(unsigned bound, std::uint64_t budget,
                                                 std::uint64_t seed,
                                                 std::size_t cap = kDefaultTowerLengthCap);

struct RightStep {
  unsigned m = 0;
  std::size_t length = 0; // of [x_active,_{m+1} y]
  Vertex witness;        // moved by [x_active,_{m+1} y]
  bool lemma2_first_coordinate = false; // first section =_G [h,_{m+1} y1]^y1
};

struct RightRefutation {
  Word x;
  ActiveReduction reduction;
  Word g1; // left section of a * x_active
  TWord h, y1, y2;
  Word y; // emb_pair(y1, y2)
  unsigned bound = 0;
  std::vector<RightStep> steps;
};

/// Refutes "x is a right Engel element with sink at most bound + 1".
RightRefutation replay_right(const Word &x, unsigned bound, std::uint64_t budget,
                             std::uint64_t seed);

/// A seeded random involution, by rejection sampling on random walks of
/// length 1..walk_length.
std::optional<Word> random_involution(Rng &rng, std::uint64_t attempts,
                                      std::size_t walk_length = kDefaultWalkLength);

struct SurveyEntry {
  Word g, x;
  std::optional<unsigned> sink; // nullopt: no sink up to the bound
  bool overflow = false;        // tower hit the length cap
};

struct SurveyReport {
  std::uint64_t samples = 0;
  unsigned bound = 0;
  std::uint64_t sinks = 0;
  std::uint64_t no_sink = 0;
  std::uint64_t overflow = 0;
  std::uint64_t excluded = 0;        // requested g was not an involution
  std::vector<std::uint64_t> depth_histogram; // index = sink depth
  std::vector<SurveyEntry> flagged;  // every no-sink or overflow outcome
};

/// Samples `samples` involutions g (or uses `fixed_g` when given, which must
/// be an involution or the run is reported as excluded) and probes each
/// against `opponents` random x.
SurveyReport involution_survey(std::uint64_t samples, unsigned bound, std::uint64_t seed,
                               unsigned opponents = 1, std::optional<Word> fixed_g = std::nullopt,
                               std::size_t cap = kDefaultTowerLengthCap);

} // namespace grig
