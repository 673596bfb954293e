#include "grig/branch.hpp"

#include <map>
#include <mutex>

#include "grig/random.hpp"
#include "grig/tree.hpp"

namespace grig {

Word k_generator_t() { return Word::reduce("abab"); }

KGenerators k_generators() {
  return {Word::reduce("abab"), Word::reduce("badabada"), Word::reduce("abadabad")};
}

TWord TWord::t() { return TWord({TFactor{Word(), 1}}); }

TWord TWord::parse(std::string_view literal) {
  std::vector<TFactor> factors;
  if (literal.empty())
    return TWord();
  std::size_t start = 0;
  while (start <= literal.size()) {
    std::size_t end = literal.find(';', start);
    if (end == std::string_view::npos)
      end = literal.size();
    std::string_view item = literal.substr(start, end - start);
    std::size_t caret = item.rfind('^');
    if (caret == std::string_view::npos)
      throw ParseError(std::string(literal), start,
                       "missing '^+1' or '^-1' in factor at position " + std::to_string(start) +
                           " of TWord literal '" + std::string(literal) + "'");
    std::string_view exponent = item.substr(caret + 1);
    int sign;
    if (exponent == "+1" || exponent == "1")
      sign = 1;
    else if (exponent == "-1")
      sign = -1;
    else
      throw ParseError(std::string(literal), start + caret + 1,
                       "exponent must be +1 or -1 at position " +
                           std::to_string(start + caret + 1) + " of TWord literal '" +
                           std::string(literal) + "'");
    Word w;
    try {
      w = Word::parse(item.substr(0, caret));
    } catch (const ParseError &e) {
      std::size_t pos = start + e.position();
      throw ParseError(std::string(literal), pos,
                       "invalid letter at position " + std::to_string(pos) +
                           " of TWord literal '" + std::string(literal) + "'");
    }
    factors.push_back({std::move(w), sign});
    if (end == literal.size())
      break;
    start = end + 1;
  }
  return TWord(std::move(factors));
}

std::string TWord::str() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i)
      out += ';';
    out += factors_[i].conjugator.str();
    out += factors_[i].sign > 0 ? "^+1" : "^-1";
  }
  return out;
}

TWord TWord::inverse() const {
  std::vector<TFactor> r(factors_.rbegin(), factors_.rend());
  for (auto &f : r)
    f.sign = -f.sign;
  return TWord(std::move(r));
}

TWord TWord::conjugate(const Word &g) const {
  std::vector<TFactor> r = factors_;
  for (auto &f : r)
    f.conjugator = f.conjugator * g;
  return TWord(std::move(r));
}

TWord operator*(const TWord &x, const TWord &y) {
  std::vector<TFactor> r = x.factors_;
  r.insert(r.end(), y.factors_.begin(), y.factors_.end());
  return TWord(std::move(r));
}

TWord commutator(const TWord &x, const TWord &y) { return x.inverse() * y.inverse() * x * y; }

Word flatten(const TWord &k) {
  const Word t = k_generator_t();
  const Word t_inv = invert(t);
  Word out;
  for (const TFactor &f : k.factors())
    out = out * conjugate(f.sign > 0 ? t : t_inv, f.conjugator);
  return out;
}

namespace {

Word lift_with(const Word &g, const char *const images[4]) {
  std::string raw;
  for (char x : g.letters())
    raw += images[x - 'a'];
  return Word::reduce(raw);
}

} // namespace

Word lift_first(const Word &g) {
  static const char *const images[4] = {"b", "ada", "aba", "aca"};
  return lift_with(g, images);
}

Word lift_second(const Word &g) {
  static const char *const images[4] = {"aba", "d", "b", "c"};
  return lift_with(g, images);
}

Word emb_pair(const TWord &k1, const TWord &k2) {
  const KGenerators gens = k_generators();
  Word out;
  auto append = [&](const Word &base, const TFactor &f, Word (*lift)(const Word &)) {
    Word c = conjugate(base, lift(f.conjugator));
    out = out * (f.sign > 0 ? c : invert(c));
  };
  for (const TFactor &f : k1.factors())
    append(gens.u, f, lift_first);
  for (const TFactor &f : k2.factors())
    append(gens.v, f, lift_second);
  return out;
}

Perm LevelQuotient::image(const Word &g) const { return Perm(level_perm(g, level_).images); }

LevelQuotient LevelQuotient::build(unsigned n) {
  if (n < 1 || n > kMaxQuotientLevel)
    throw ResourceCap("level quotient requested for level " + std::to_string(n) +
                      "; supported levels are 1.." + std::to_string(kMaxQuotientLevel));
  LevelQuotient q;
  q.level_ = n;
  const std::size_t degree = std::size_t{1} << n;

  std::vector<Perm> gens;
  for (const char *x : {"a", "b", "c", "d"})
    gens.push_back(q.image(Word::reduce(x)));
  auto group = std::make_shared<StabilizerChain>(degree, gens);

  // Normal closure of the image of t: close the generating set under
  // conjugation by the group generators (all involutions).
  std::vector<Perm> k_gens{q.image(k_generator_t())};
  auto k = std::make_shared<StabilizerChain>(degree, k_gens);
  for (std::size_t i = 0; i < k_gens.size(); ++i) {
    for (const Perm &s : gens) {
      Perm c = s * k_gens[i] * s;
      if (!k->contains(c)) {
        k->add_generator(c);
        k_gens.push_back(std::move(c));
      }
    }
  }

  q.group_order_ = group->order();
  q.k_image_order_ = k->order();
  q.k_image_index_ = static_cast<std::uint64_t>(q.group_order_ / q.k_image_order_);
  q.group_ = std::move(group);
  q.k_ = std::move(k);
  return q;
}

const LevelQuotient &level_quotient(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<LevelQuotient>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
      return *it->second;
  }
  auto built = std::make_unique<LevelQuotient>(LevelQuotient::build(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(built));
  return *it->second;
}

std::optional<IndexPlateau> certify_index_plateau() {
  static const std::optional<IndexPlateau> result = [] () -> std::optional<IndexPlateau> {
    IndexPlateau p;
    for (unsigned n = 1; n <= kMaxQuotientLevel; ++n) {
      p.indices.push_back(level_quotient(n).k_image_index());
      const std::size_t m = p.indices.size();
      if (m >= 3 && p.indices[m - 1] == p.indices[m - 2] && p.indices[m - 2] == p.indices[m - 3]) {
        p.first_level = n - 2;
        p.membership_level = n;
        p.index = p.indices.back();
        return p;
      }
    }
    return std::nullopt;
  }();
  return result;
}

std::string to_string(KVerdict v) {
  switch (v) {
  case KVerdict::Inside: return "Inside";
  case KVerdict::Outside: return "Outside";
  case KVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

KMembershipResult membership_in_K(const Word &g) {
  if (g.root_activity())
    return {KVerdict::Outside, 0, "odd root activity; K lies in the first-level stabilizer"};
  auto plateau = certify_index_plateau();
  if (!plateau)
    return {KVerdict::Unknown, 0, "no index plateau through level " + std::to_string(kMaxQuotientLevel)};
  const LevelQuotient &q = level_quotient(plateau->membership_level);
  bool inside = q.in_k_image(q.image(g));
  return {inside ? KVerdict::Inside : KVerdict::Outside, plateau->membership_level,
          "image test at plateau level " + std::to_string(plateau->membership_level)};
}

std::optional<TWord> search_high_order(std::uint64_t target_order, std::uint64_t budget,
                                       std::uint64_t seed, bool exact) {
  if (target_order == 0 || (target_order & (target_order - 1)) != 0)
    throw std::invalid_argument("target order must be a power of two");
  unsigned target_exp = 0;
  while ((1ULL << target_exp) < target_order)
    ++target_exp;

  auto accept = [&](const TWord &k) {
    Word g = flatten(k);
    if (target_exp == 0)
      return !is_trivial(g);
    Word half = g;
    for (unsigned i = 1; i < target_exp; ++i)
      half = half * half;
    if (is_trivial(half))
      return false;
    return !exact || is_trivial(half * half);
  };

  Rng rng(seed);
  const std::uint64_t round = std::max<std::uint64_t>(1, budget / 4);
  for (std::uint64_t i = 0; i < budget; ++i) {
    TWord candidate;
    if (i == 0) {
      candidate = TWord::t();
    } else {
      const std::size_t max_len = kDefaultConjugatorLength << std::min<std::uint64_t>(i / round, 3);
      std::vector<TFactor> factors(1 + rng.below(3));
      for (auto &f : factors) {
        f.conjugator = random_word(rng, rng.below(max_len + 1));
        f.sign = rng.coin() ? 1 : -1;
      }
      candidate = TWord(std::move(factors));
    }
    if (accept(candidate))
      return candidate;
  }
  return std::nullopt;
}

} // namespace grig
