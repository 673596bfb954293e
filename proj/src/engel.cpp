#include "grig/engel.hpp"

namespace grig {

namespace {

const Word kA = Word::from_reduced("a");

bool is_involution(const Word &g) { return !is_trivial(g) && is_trivial(g * g); }

Word square_times(Word w, unsigned times) {
  for (unsigned i = 0; i < times; ++i)
    w = w * w;
  return w;
}

} // namespace

std::vector<Word> commutator_tower(const Word &x, const Word &g, unsigned n, std::size_t cap) {
  std::vector<Word> tower;
  tower.reserve(n);
  Word current = x;
  for (unsigned i = 1; i <= n; ++i) {
    current = commutator(current, g);
    if (current.size() > cap)
      throw TowerBlowup("commutator tower reached " + std::to_string(current.size()) +
                        " letters at step " + std::to_string(i) + " (cap " + std::to_string(cap) +
                        ")");
    tower.push_back(current);
  }
  return tower;
}

Word iterated_commutator(const Word &x, const Word &g, unsigned n, std::size_t cap) {
  if (n == 0)
    throw PreconditionViolated("iterated commutator needs n >= 1");
  return commutator_tower(x, g, n, cap).back();
}

Vertex nontriviality_witness(const Word &g, unsigned max_depth) {
  if (auto v = witness_vertex(g, max_depth))
    return *v;
  if (auto v = moved_vertex(g))
    return *v;
  throw std::logic_error("nontriviality witness requested for the identity");
}

ProbeResult left_engel_probe(const Word &g, const Word &x, unsigned bound, std::size_t cap) {
  if (bound == 0)
    throw PreconditionViolated("probe bound must be at least 1");
  std::vector<std::size_t> lengths;
  Word current = x;
  for (unsigned n = 1; n <= bound; ++n) {
    current = commutator(current, g);
    lengths.push_back(current.size());
    if (is_trivial(current))
      return EngelSink{g, x, n, std::move(lengths)};
    if (current.size() > cap)
      throw TowerBlowup("tower [x,_n g] reached " + std::to_string(current.size()) +
                        " letters at n = " + std::to_string(n) + " (cap " + std::to_string(cap) + ")");
  }
  return NoSinkUpTo{g, x, bound, std::move(lengths), nontriviality_witness(current)};
}

std::optional<NoSinkUpTo> search_left_witness(const Word &g, unsigned bound, std::uint64_t budget,
                                              std::uint64_t seed, std::size_t walk_length,
                                              std::size_t cap) {
  Rng rng(seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    Word x = random_word(rng, 1 + rng.below(walk_length));
    try {
      ProbeResult r = left_engel_probe(g, x, bound, cap);
      if (auto *w = std::get_if<NoSinkUpTo>(&r))
        return *w;
    } catch (const TowerBlowup &) {
      continue;
    }
  }
  return std::nullopt;
}

CoordinateCheck lemma1_evaluate(const TWord &k, const Word &g, unsigned m) {
  if (m == 0)
    throw PreconditionViolated("lemma1 needs m >= 1");
  if (g.root_activity())
    throw PreconditionViolated("g = " + g.str() + " is not in the first-level stabilizer");
  const Word x = kA * g;
  if (!is_trivial(x * x))
    throw PreconditionViolated("x = a*g = " + x.str() + " is not an involution");

  CoordinateCheck out;
  const Word y = emb_pair(k, TWord());
  out.lhs = decompose(iterated_commutator(y, x, m));

  const Word kk = flatten(k);
  const Word g2 = decompose(g).right;
  const Word kg2 = conjugate(kk, g2);
  out.rhs_left = square_times(m % 2 == 0 ? kk : invert(kk), m - 1);
  out.rhs_right = square_times(m % 2 == 1 ? kg2 : invert(kg2), m - 1);
  out.holds = out.lhs.active == 0 && are_equal(out.lhs.left, out.rhs_left) &&
              are_equal(out.lhs.right, out.rhs_right);
  return out;
}

bool lemma1_check(const TWord &k, const Word &g, unsigned m) { return lemma1_evaluate(k, g, m).holds; }

CoordinateCheck lemma2_evaluate(const Word &x, const Word &y, unsigned m) {
  if (m == 0)
    throw PreconditionViolated("lemma2 needs m >= 1");
  if (!x.root_activity())
    throw PreconditionViolated("x = " + x.str() + " has even root activity");
  if (y.root_activity())
    throw PreconditionViolated("y = " + y.str() + " is not in the first-level stabilizer");

  const Decomposition g = decompose(kA * x);
  const Decomposition yd = decompose(y);

  CoordinateCheck out;
  out.lhs = decompose(iterated_commutator(x, y, m + 1));
  out.rhs_left = conjugate(iterated_commutator(conjugate(invert(yd.right), g.left), yd.left, m), yd.left);
  out.rhs_right =
      conjugate(iterated_commutator(conjugate(invert(yd.left), g.right), yd.right, m), yd.right);
  out.holds = out.lhs.active == 0 && are_equal(out.lhs.left, out.rhs_left) &&
              are_equal(out.lhs.right, out.rhs_right);
  return out;
}

bool lemma2_check(const Word &x, const Word &y, unsigned m) { return lemma2_evaluate(x, y, m).holds; }

ActiveReduction reduce_to_active(const Word &x) {
  auto level = first_active_level(x);
  if (!level)
    throw PreconditionViolated("element " + x.str() + " is trivial");
  LevelSections s = sections_at(x, *level);
  for (std::size_t i = 0; i < s.sections.size(); ++i)
    if (s.sections[i].root_activity())
      return {*level, Vertex::from_index(i, *level), s.sections[i]};
  throw std::logic_error("no active section at first active level of " + x.str());
}

BoundedLeftRefutation replay_bounded_left(const Word &x, unsigned bound, std::uint64_t budget,
                                          std::uint64_t seed) {
  if (bound == 0)
    throw PreconditionViolated("bound must be at least 1");
  if (!is_involution(x))
    throw PreconditionViolated("x = " + x.str() + " is not an involution");

  BoundedLeftRefutation r;
  r.x = x;
  r.bound = bound;
  r.reduction = reduce_to_active(x);
  auto k = search_high_order(1ULL << bound, budget, seed);
  if (!k)
    throw SearchExhausted("no element of K of order >= 2^" + std::to_string(bound) + " within " +
                          std::to_string(budget) + " candidates");
  r.k = *k;
  OrderResult ord = order(flatten(r.k), std::max(kDefaultOrderCap, bound + 4));
  if (!ord.exact)
    throw SearchExhausted("order of the found element exceeds the order cap");
  r.k_order_exponent = ord.exponent;
  r.y = emb_pair(r.k, TWord());

  std::vector<Word> tower = commutator_tower(r.y, r.reduction.section, bound);
  for (const Word &w : tower)
    r.lengths.push_back(w.size());
  if (is_trivial(tower.back()))
    throw std::logic_error("tower vanished although order(k) > 2^(N-1)");
  r.witness = nontriviality_witness(tower.back());
  return r;
}

std::optional<NonEngelPair> search_nonengel_pair(unsigned bound, std::uint64_t budget,
                                                 std::uint64_t seed, std::size_t cap) {
  if (bound == 0)
    throw PreconditionViolated("bound must be at least 1");
  Rng rng(seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    NonEngelPair p;
    if (i == 0) {
      p = {TWord::t(), TWord({TFactor{Word::reduce("b"), 1}})};
    } else {
      auto random_tword = [&] {
        std::vector<TFactor> f(1 + rng.below(2));
        for (auto &x : f) {
          x.conjugator = random_word(rng, rng.below(kDefaultConjugatorLength + 1));
          x.sign = rng.coin() ? 1 : -1;
        }
        return TWord(std::move(f));
      };
      p.h = random_tword();
      p.y1 = random_tword();
    }
    try {
      // towers stay trivial once they vanish, so the last step decides
      if (!is_trivial(iterated_commutator(flatten(p.h), flatten(p.y1), bound, cap)))
        return p;
    } catch (const TowerBlowup &) {
      continue;
    }
  }
  return std::nullopt;
}

RightRefutation replay_right(const Word &x, unsigned bound, std::uint64_t budget, std::uint64_t seed) {
  if (bound == 0)
    throw PreconditionViolated("bound must be at least 1");
  if (is_trivial(x))
    throw PreconditionViolated("x is trivial");

  RightRefutation r;
  r.x = x;
  r.bound = bound;
  r.reduction = reduce_to_active(x);
  const Word &xa = r.reduction.section;
  r.g1 = decompose(kA * xa).left;

  auto pair = search_nonengel_pair(bound + 1, budget, seed);
  if (!pair)
    throw SearchExhausted("no pair in K with a tower surviving " + std::to_string(bound + 1) +
                          " steps within " + std::to_string(budget) + " candidates");
  r.h = pair->h;
  r.y1 = pair->y1;
  r.y2 = commutator(r.y1, r.h).conjugate(invert(r.g1));
  r.y = emb_pair(r.y1, r.y2);

  const Word h = flatten(r.h), y1 = flatten(r.y1);
  std::vector<Word> inner = commutator_tower(h, y1, bound + 1);
  std::vector<Word> tower = commutator_tower(xa, r.y, bound + 1);
  for (unsigned m = 1; m <= bound; ++m) {
    const Word &t = tower[m];
    if (is_trivial(t))
      throw std::logic_error("tower [x,_(m+1) y] vanished at m = " + std::to_string(m));
    RightStep step;
    step.m = m;
    step.length = t.size();
    step.witness = nontriviality_witness(t);
    Decomposition d = decompose(t);
    step.lemma2_first_coordinate = d.active == 0 && are_equal(d.left, conjugate(inner[m], y1));
    r.steps.push_back(std::move(step));
  }
  return r;
}

std::optional<Word> random_involution(Rng &rng, std::uint64_t attempts, std::size_t walk_length) {
  for (std::uint64_t i = 0; i < attempts; ++i) {
    Word w = random_word(rng, 1 + rng.below(walk_length));
    if (is_involution(w))
      return w;
  }
  return std::nullopt;
}

SurveyReport involution_survey(std::uint64_t samples, unsigned bound, std::uint64_t seed,
                               unsigned opponents, std::optional<Word> fixed_g, std::size_t cap) {
  SurveyReport report;
  report.samples = samples;
  report.bound = bound;
  report.depth_histogram.assign(bound + 1, 0);
  if (samples == 0)
    return report;
  if (fixed_g && !is_involution(*fixed_g)) {
    report.excluded = samples;
    return report;
  }

  Rng rng(seed);
  for (std::uint64_t s = 0; s < samples; ++s) {
    Word g;
    if (fixed_g) {
      g = *fixed_g;
    } else {
      auto inv = random_involution(rng, 1000000);
      if (!inv) {
        ++report.excluded;
        continue;
      }
      g = *inv;
    }
    for (unsigned o = 0; o < opponents; ++o) {
      Word x = random_word(rng, kDefaultWalkLength);
      SurveyEntry e{g, x, std::nullopt, false};
      try {
        ProbeResult r = left_engel_probe(g, x, bound, cap);
        if (auto *sink = std::get_if<EngelSink>(&r)) {
          e.sink = sink->n;
          ++report.sinks;
          ++report.depth_histogram[sink->n];
          continue;
        }
        ++report.no_sink;
      } catch (const TowerBlowup &) {
        e.overflow = true;
        ++report.overflow;
      }
      report.flagged.push_back(std::move(e));
    }
  }
  return report;
}

} // namespace grig
