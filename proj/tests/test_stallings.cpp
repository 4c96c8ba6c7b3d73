#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bforge/stallings.hpp"

using namespace bforge;

namespace {
std::mt19937_64 rng(0xacce5506);
}

TEST_CASE("folding basics") {
  CoreGraph loop = fold_words({FreeWord::gen(1)}, 2);
  CHECK(loop.vertex_count() == 1);
  CHECK(loop.rank() == 1);
  // exponent gcd: powers two and three generate the full cyclic group
  CoreGraph g = fold_words({FreeWord::gen(1, 2), FreeWord::gen(1, 3)}, 1);
  CHECK(g.rank() == 1);
  CHECK(g.membership(FreeWord::gen(1)));
  CoreGraph wedge = fold_words({FreeWord::gen(1), FreeWord::gen(2)}, 2);
  CHECK(wedge.rank() == 2);
  CHECK(wedge.membership(FreeWord::gen(1) * FreeWord::gen(2)));
  CHECK_THROWS_AS((void)fold_words({FreeWord::gen(3)}, 2), Error);
}

TEST_CASE("basis letters fold to the expected rank") {
  for (int k = 1; k <= 5; ++k) {
    std::vector<FreeWord> gens;
    for (int j = 1; j <= k; ++j) gens.push_back(FreeWord::gen(j));
    CHECK(fold_words(gens, 5).rank() == k);
  }
}

TEST_CASE("folding is confluent") {
  std::vector<FreeWord> base;
  for (int j = 1; j <= 9; ++j) base.push_back(a_word_in_l(j));
  std::string expect = fold_words(base, 9).canonical_hash();
  for (int k = 0; k < 20; ++k) {
    std::vector<FreeWord> shuffled = base;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(fold_words(shuffled, 9).canonical_hash() == expect);
  }
}

TEST_CASE("rank nine") {
  CHECK(rank_of_a_words() == 9);
  CHECK(rank_of_derived_a_words() == 9);
  std::vector<FreeWord> gens;
  for (int j = 1; j <= 9; ++j) gens.push_back(a_word_in_l(j));
  CoreGraph g = fold_words(gens, 9);
  CHECK(g.membership(a_word_in_l(1) * a_word_in_l(2)));
  // informative: the first basis letter does not read in the subgroup
  CHECK(!g.membership(FreeWord::gen(1)));
}

TEST_CASE("weights") {
  CHECK(f_quotient_value({{NamedGen::G1, 1}}) == 1);
  CHECK(f_quotient_value({{NamedGen::D1, 1}, {NamedGen::G1, 2}}) == 0);
  for (int j = 1; j <= 9; ++j) CHECK(f_quotient_a(j) == 0);
  // every kernel-basis word has weight zero
  for (int j = 1; j <= 9; ++j) CHECK(f_quotient_value(l_word_dg(j)) == 0);
}

TEST_CASE("kernel-basis expressions") {
  // as printed, three of the nine displayed expressions reproduce their
  // generators; the re-derived expressions reproduce all nine (see the
  // scorecard's stallings checks for the same split)
  CHECK(verify_l_consistency(3));
  CHECK(verify_l_consistency(4));
  CHECK(verify_l_consistency(9));
  CHECK(!verify_l_consistency(1));
  CHECK(!verify_l_consistency(7));
  for (int j = 1; j <= 9; ++j) CHECK(verify_l_derived(j));
  // empty word maps to the identity
  const Field* F = Field::gaussian();
  CHECK(expand_l_word(FreeWord()).empty());
  (void)F;
}
