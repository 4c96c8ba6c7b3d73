#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bforge/braid.hpp"

using namespace bforge;

namespace {
std::mt19937_64 rng(0xacce5502);

BraidWord rand_braid(int strands, int len) {
  std::vector<BraidLetter> ls;
  for (int j = 0; j < len; ++j)
    ls.push_back({1 + static_cast<int>(rng() % (strands - 1)), rng() % 2 ? 1 : -1});
  return BraidWord(strands, ls);
}
}  // namespace

TEST_CASE("braid parsing") {
  BraidWord b1 = parse_braid("s1 s3^-1", 4);
  CHECK(b1.letters() == std::vector<BraidLetter>{{1, 1}, {3, -1}});
  BraidWord b2 = parse_braid("b2", 4);
  CHECK(b2.letters() ==
        std::vector<BraidLetter>{{1, 1}, {2, 1}, {3, 1}, {1, -1}, {2, -1}, {1, -1}});
  CHECK(parse_braid("s1^0", 4).letters().empty());
  CHECK(parse_braid("s2^-3", 4).writhe() == -3);
  CHECK_THROWS_AS((void)parse_braid("s4", 4), Error);
  CHECK_THROWS_AS((void)parse_braid("x1", 4), Error);
}

TEST_CASE("the free-group action") {
  ArtinAuto id = artin_images(BraidWord(3));
  for (int j = 1; j <= 3; ++j) CHECK(id.image(j) == FreeWord::gen(j));
  ArtinAuto s1 = artin_images(parse_braid("s1", 2));
  CHECK(s1.image(1) == FreeWord::gen(1) * FreeWord::gen(2) * FreeWord::gen(1, -1));
  CHECK(s1.image(2) == FreeWord::gen(1));
  // the composite with the inverse braid fixes every letter
  BraidWord w = rand_braid(4, 12);
  ArtinAuto round = artin_images(w * w.inverse());
  for (int j = 1; j <= 4; ++j) CHECK(round.image(j) == FreeWord::gen(j));
}

TEST_CASE("braid relation and far commutation") {
  CHECK(braid_equal(parse_braid("s1 s2 s1", 3), parse_braid("s2 s1 s2", 3)));
  CHECK(braid_equal(parse_braid("s1 s3", 4), parse_braid("s3 s1", 4)));
  CHECK(!braid_equal(parse_braid("s1", 3), parse_braid("s2", 3)));
  CHECK_THROWS_AS((void)braid_equal(BraidWord(3), BraidWord(4)), Error);
}

TEST_CASE("action is a homomorphism") {
  for (int k = 0; k < 40; ++k) {
    BraidWord a = rand_braid(4, 6), b = rand_braid(4, 6);
    CHECK(artin_images(a * b) == artin_images(a).after(artin_images(b)));
  }
}

TEST_CASE("equality is a congruence") {
  for (int k = 0; k < 25; ++k) {
    BraidWord a = rand_braid(4, 5), c = rand_braid(4, 5);
    // braid-relation rewrite of a gives an equal word
    BraidWord b = parse_braid("s1 s2 s1", 4).inverse() * parse_braid("s2 s1 s2", 4) * a;
    REQUIRE(braid_equal(a, b));
    CHECK(braid_equal(a * c, b * c));
    CHECK(braid_equal(c * a, c * b));
    CHECK(braid_equal(a.inverse(), b.inverse()));
  }
}

TEST_CASE("semidirect identities") {
  BraidWord b1 = braid_b1(), b2 = braid_b2();
  BraidWord s2 = parse_braid("s2", 4), s3 = parse_braid("s3", 4);
  BraidWord q2 = parse_braid("s3 s2 s3", 4).pow(2);
  CHECK(braid_equal(s2 * b1 * s2.inverse(), b2.inverse() * b1));
  CHECK(braid_equal(s3 * b1 * s3.inverse(), b1));
  CHECK(braid_equal(s2 * b2 * s2.inverse(), b2));
  CHECK(braid_equal(s3 * b2 * s3.inverse(), b2 * b1));
  CHECK(braid_equal(q2.inverse() * b1 * q2, b2 * b1.inverse() * b2.inverse()));
  CHECK(braid_equal(q2 * b1 * q2.inverse(),
                    b1.inverse() * b2 * b1.inverse() * b2.inverse() * b1));
  CHECK(braid_equal(q2 * b1 * q2.inverse(),
                    b1.inverse() * (q2.inverse() * b1 * q2) * b1));
}

TEST_CASE("centralizer generating sets") {
  auto s3 = parse_braid("s3", 4);
  auto gens3 = centralizer_data(CentralizedGen::Sigma3);
  CHECK(gens3.size() == 3);
  for (const auto& g : gens3) CHECK(braid_equal(g * s3, s3 * g));
  auto s2 = parse_braid("s2", 4);
  auto gens2 = centralizer_data(CentralizedGen::Sigma2);
  CHECK(gens2.size() == 4);
  for (const auto& g : gens2) CHECK(braid_equal(g * s2, s2 * g));
  // the cyclic shift by the dual Garside element
  BraidWord h = parse_braid("s1 s2 s3", 4);
  CHECK(braid_equal(h * parse_braid("s1", 4) * h.inverse(), s2));
}

TEST_CASE("free word text form") {
  FreeWord w = FreeWord::gen(1) * FreeWord::gen(2, -1) * FreeWord::gen(3);
  CHECK(w.str() == "x1 X2 x3");
  CHECK(FreeWord::parse("x1 X2 x3") == w);
  CHECK(FreeWord::parse("l1 L1 l2", 'l') == FreeWord::gen(2));
  ArtinAuto a = artin_images(parse_braid("s1", 3));
  CHECK(a.str() == "x1 -> x1 x2 X1; x2 -> x1; x3 -> x3");
}
