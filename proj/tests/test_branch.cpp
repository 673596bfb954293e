#include <doctest.h>

#include "grig/branch.hpp"
#include "grig/random.hpp"

using namespace grig;

namespace {

Word w(const char *s) { return Word::reduce(s); }

TWord random_tword(Rng &rng, std::size_t max_factors, std::size_t max_len) {
  std::vector<TFactor> f(rng.below(max_factors + 1));
  for (auto &x : f) {
    x.conjugator = random_word(rng, rng.below(max_len + 1));
    x.sign = rng.coin() ? 1 : -1;
  }
  return TWord(std::move(f));
}

} // namespace

TEST_CASE("permutation group basics") {
  // S_4 from a transposition and a 4-cycle
  Perm s(std::vector<std::uint32_t>{1, 0, 2, 3});
  Perm c(std::vector<std::uint32_t>{1, 2, 3, 0});
  StabilizerChain sym(4, {s, c});
  CHECK(sym.order() == 24);
  CHECK(sym.contains(s * c * s));
  // Klein four-group inside S_4
  Perm v1(std::vector<std::uint32_t>{1, 0, 3, 2});
  Perm v2(std::vector<std::uint32_t>{2, 3, 0, 1});
  StabilizerChain klein(4, {v1, v2});
  CHECK(klein.order() == 4);
  CHECK_FALSE(klein.contains(s));
  CHECK(klein.contains(v1 * v2));
  CHECK((c * c.inverse()).is_identity());
}

TEST_CASE("stabilizer chain order matches brute-force closure") {
  Rng rng(3);
  for (unsigned n = 2; n <= 4; ++n) {
    const LevelQuotient &q = level_quotient(n);
    std::vector<Perm> gens;
    for (const char *x : {"a", "b", "c", "d"})
      gens.push_back(q.image(w(x)));
    std::vector<Perm> elements{Perm(std::size_t{1} << n)};
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (const Perm &g : gens) {
        Perm p = elements[i] * g;
        if (std::find(elements.begin(), elements.end(), p) == elements.end())
          elements.push_back(p);
      }
    CHECK(q.group_order() == elements.size());
  }
}

TEST_CASE("k_generators decompose as claimed") {
  KGenerators k = k_generators();
  CHECK(k.t.str() == "abab");
  Decomposition du = decompose(k.u), dv = decompose(k.v);
  CHECK(du.active == 0);
  CHECK(are_equal(du.left, k.t));
  CHECK(is_trivial(du.right));
  CHECK(dv.active == 0);
  CHECK(is_trivial(dv.left));
  CHECK(are_equal(dv.right, k.t));
  CHECK(order(k.t) == OrderResult::Exact(3));
}

TEST_CASE("TWord literals and flatten") {
  CHECK(flatten(TWord()).empty());
  CHECK(flatten(TWord::t()) == k_generator_t());
  CHECK(flatten(TWord::parse("1^+1;1^-1")).empty());
  CHECK(TWord::parse("1^+1") == TWord::t());
  TWord k = TWord::parse("ab^-1");
  CHECK(k.factors().size() == 1);
  CHECK(k.factors()[0].sign == -1);
  CHECK(are_equal(flatten(k), invert(conjugate(k_generator_t(), w("ab")))));
  CHECK(TWord::parse("ab^-1;1^+1").str() == "ab^-1;1^+1");
  CHECK(TWord::parse("").empty());
  CHECK_THROWS_AS(TWord::parse("ab"), ParseError);
  CHECK_THROWS_AS(TWord::parse("ab^2"), ParseError);
  try {
    (void)TWord::parse("1^+1;axb^+1");
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("TWord algebra: flatten is a homomorphism") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    TWord k1 = random_tword(rng, 3, 8), k2 = random_tword(rng, 3, 8);
    CHECK(are_equal(flatten(k1 * k2), flatten(k1) * flatten(k2)));
    CHECK(are_equal(flatten(k1.inverse()), invert(flatten(k1))));
    Word g = random_word(rng, rng.below(8));
    CHECK(are_equal(flatten(k1.conjugate(g)), conjugate(flatten(k1), g)));
    CHECK(are_equal(flatten(commutator(k1, k2)), commutator(flatten(k1), flatten(k2))));
  }
}

TEST_CASE("lifts") {
  CHECK(lift_first(w("a")).str() == "b");
  CHECK(lift_first(w("b")).str() == "ada");
  CHECK(lift_first(Word()).empty());
  CHECK(lift_second(w("b")).str() == "d");
  CHECK(lift_second(w("c")).str() == "b");
  CHECK(lift_second(Word()).empty());

  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Word g = random_word(rng, rng.below(25));
    Word s1 = lift_first(g), s2 = lift_second(g);
    CHECK(s1.root_activity() == 0);
    CHECK(s2.root_activity() == 0);
    CHECK(are_equal(decompose(s1).left, g));
    CHECK(are_equal(decompose(s2).right, g));
  }
}

TEST_CASE("emb_pair examples") {
  KGenerators k = k_generators();
  CHECK(emb_pair(TWord::t(), TWord()) == k.u);
  CHECK(emb_pair(TWord(), TWord::t()) == k.v);
  CHECK(emb_pair(TWord(), TWord()).empty());
}

TEST_CASE("emb_pair realizes pairs and lands in K") {
  Rng rng(14);
  for (int i = 0; i < 30; ++i) {
    TWord k1 = random_tword(rng, 2, 6), k2 = random_tword(rng, 2, 6);
    Word y = emb_pair(k1, k2);
    Decomposition d = decompose(y);
    CHECK(d.active == 0);
    CHECK(are_equal(d.left, flatten(k1)));
    CHECK(are_equal(d.right, flatten(k2)));
    CHECK(membership_in_K(y).verdict == KVerdict::Inside);
  }
}

TEST_CASE("level quotients") {
  CHECK(level_quotient(1).group_order() == 2);
  CHECK(level_quotient(3).group_order() == 128);
  CHECK_THROWS_AS(LevelQuotient::build(0), ResourceCap);
  CHECK_THROWS_AS(LevelQuotient::build(9), ResourceCap);
  std::uint64_t previous = 0;
  for (unsigned n = 1; n <= 6; ++n) {
    const LevelQuotient &q = level_quotient(n);
    CHECK(q.group_order() % q.k_image_index() == 0);
    CHECK(q.k_image_index() >= previous);
    previous = q.k_image_index();
  }
}

TEST_CASE("index plateau certifies 16") {
  auto p = certify_index_plateau();
  REQUIRE(p.has_value());
  CHECK(p->index == 16);
  CHECK(p->first_level == 3);
  CHECK(p->membership_level == 5);
  CHECK(p->indices == std::vector<std::uint64_t>{2, 4, 16, 16, 16});
}

TEST_CASE("membership_in_K examples") {
  CHECK(membership_in_K(w("a")).verdict == KVerdict::Outside);
  CHECK(membership_in_K(w("a")).level == 0);
  CHECK(membership_in_K(k_generator_t()).verdict == KVerdict::Inside);
  CHECK(membership_in_K(w("b")).verdict == KVerdict::Outside);
  CHECK(membership_in_K(w("b")).level == 5);
  CHECK(membership_in_K(Word()).verdict == KVerdict::Inside);
  KGenerators k = k_generators();
  CHECK(membership_in_K(k.u).verdict == KVerdict::Inside);
  CHECK(membership_in_K(k.v).verdict == KVerdict::Inside);
}

TEST_CASE("search_high_order") {
  auto t8 = search_high_order(8, 100, 1);
  REQUIRE(t8.has_value());
  CHECK(*t8 == TWord::t());
  auto any = search_high_order(1, 100, 1);
  REQUIRE(any.has_value());
  CHECK_FALSE(is_trivial(flatten(*any)));
  auto k32 = search_high_order(32, 10000, 1);
  REQUIRE(k32.has_value());
  OrderResult r = order(flatten(*k32));
  REQUIRE(r.exact);
  CHECK(r.exponent >= 5);
  CHECK(search_high_order(32, 10000, 1) == k32);
  CHECK_THROWS_AS(search_high_order(12, 10, 1), std::invalid_argument);
}
