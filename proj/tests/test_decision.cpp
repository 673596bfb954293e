#include <doctest.h>

#include <thread>

#include "grig/decision.hpp"
#include "grig/random.hpp"

using namespace grig;

namespace {

Word w(const char *s) { return Word::reduce(s); }

// Order of the level-n image, independent of the word problem solver.
std::uint64_t level_order(const Word &g, unsigned n) { return level_perm(g, n).order(); }

} // namespace

TEST_CASE("is_trivial examples") {
  CHECK(is_trivial(Word()));
  CHECK_FALSE(is_trivial(w("ad")));
  Word ad4 = w("adadadad");
  CHECK(ad4.size() == 8);
  CHECK(is_trivial(ad4));
  CHECK_FALSE(witness_vertex(ad4, 20).has_value());
}

TEST_CASE("witness_vertex examples") {
  CHECK(witness_vertex(w("a"), 5) == Vertex::parse("0"));
  CHECK_FALSE(witness_vertex(Word(), 5).has_value());
  // d is quiet through level 2; the first vertex it moves is 100
  CHECK(witness_vertex(w("d"), 5) == Vertex::parse("100"));
  CHECK_FALSE(witness_vertex(w("d"), 2).has_value());
}

TEST_CASE("moved_vertex is a sound witness") {
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    Word g = random_word(rng, rng.below(40));
    auto v = moved_vertex(g);
    CHECK(v.has_value() == !is_trivial(g));
    if (v)
      CHECK_FALSE(act(g, *v) == *v);
  }
}

TEST_CASE("are_equal examples") {
  CHECK(are_equal(w("bc"), w("d")));
  Word g = w("abacabad");
  CHECK(are_equal(g, g));
  CHECK_FALSE(are_equal(w("a"), w("b")));
}

TEST_CASE("orders of short words") {
  CHECK(order(w("a")) == OrderResult::Exact(1));
  CHECK(order(Word()) == OrderResult::Exact(0));
  CHECK(order(w("ab")) == OrderResult::Exact(4));
  CHECK(order(w("ac")) == OrderResult::Exact(3));
  CHECK(order(w("ad")) == OrderResult::Exact(2));
  CHECK(order(w("ab")).value() == 16);
  CHECK(order(w("ab"), 3) == OrderResult::ExceededCap(3));
  CHECK(order(w("ab"), 3).str() == ">2^3");
}

TEST_CASE("orders agree with level permutations") {
  // the level-6 image already has the full order for these words
  for (const char *s : {"a", "b", "c", "d", "ab", "ac", "ad", "abab"}) {
    OrderResult r = order(w(s));
    REQUIRE(r.exact);
    CHECK(level_order(w(s), 6) == r.value());
    CHECK(level_order(w(s), 5) == r.value());
    CHECK(is_trivial(power(w(s), r.value())));
  }
  CHECK(level_order(w("ab"), 4) == 8);
}

TEST_CASE("oracle agreement on random raw words") {
  Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    Word g = Word::reduce(random_raw_word(rng, rng.below(41)));
    REQUIRE(is_trivial(g) == !witness_vertex(g, 12).has_value());
  }
}

TEST_CASE("order divides and is conjugation invariant") {
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    Word g = random_word(rng, 1 + rng.below(16));
    Word h = random_word(rng, rng.below(16));
    OrderResult r = order(g);
    if (!r.exact)
      continue;
    CHECK(is_trivial(power(g, r.value())));
    if (r.exponent >= 1)
      CHECK_FALSE(is_trivial(power(g, r.value() / 2)));
    CHECK(order(conjugate(g, h)) == r);
  }
}

TEST_CASE("the memo cache is bounded and shareable") {
  TrivialityDecider small(4);
  Rng rng(13);
  for (int i = 0; i < 50; ++i)
    (void)small.is_trivial(random_word(rng, 20));
  CHECK(small.cache_size() <= 4);

  TrivialityDecider shared;
  std::vector<Word> words;
  for (int i = 0; i < 200; ++i)
    words.push_back(random_word(rng, 1 + rng.below(40)));
  std::vector<bool> expected;
  for (const Word &g : words)
    expected.push_back(TrivialityDecider(0).is_trivial(g));
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < words.size(); ++i)
        if (shared.is_trivial(words[i]) != expected[i])
          ++mismatches[t];
    });
  for (auto &th : threads)
    th.join();
  for (int m : mismatches)
    CHECK(m == 0);
}
