#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bforge/burau.hpp"

using namespace bforge;

namespace {
std::mt19937_64 rng(0xacce5503);
const Field* Q = Field::rational();

BraidWord rand_braid(int strands, int len) {
  std::vector<BraidLetter> ls;
  for (int j = 0; j < len; ++j)
    ls.push_back({1 + static_cast<int>(rng() % (strands - 1)), rng() % 2 ? 1 : -1});
  return BraidWord(strands, ls);
}

LaurentPoly P(const char* s) { return LaurentPoly::parse(s, Q); }

LMat rand_gl3(int factors) {
  LMat a = LMat::identity(3, LaurentPoly::one(Q));
  std::uniform_int_distribution<long> expo(-2, 2), coeff(-3, 3);
  for (int j = 0; j < factors; ++j) {
    LMat e = LMat::identity(3, LaurentPoly::one(Q));
    std::size_t r = rng() % 3, c = rng() % 3;
    if (r == c)
      e.at(r, r) = LaurentPoly::monomial(rng() % 2 ? Q->one() : -Q->one(), expo(rng));
    else
      e.at(r, c) = LaurentPoly::monomial(Q->from_long(coeff(rng)), expo(rng));
    a = a * e;
  }
  return a;
}

}  // namespace

TEST_CASE("generator displays") {
  LMat s1r = burau_gen(4, 1, 1, BurauKind::Reduced, Q);
  LMat expect(3, 3, LaurentPoly(Q));
  expect.at(0, 0) = P("-t");
  expect.at(0, 1) = P("1");
  expect.at(1, 1) = P("1");
  expect.at(2, 2) = P("1");
  CHECK(s1r == expect);
  CHECK(s1r.det() == P("-t"));
  // generator inverses close exactly
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i < n; ++i)
      for (BurauKind k : {BurauKind::Unreduced, BurauKind::Reduced})
        CHECK((burau_gen(n, i, 1, k, Q) * burau_gen(n, i, -1, k, Q)).is_identity());
  // evaluation at 1 of an unreduced generator is a transposition
  FMat at1 = mat_eval(burau_gen(4, 1, 1, BurauKind::Unreduced, Q), Q->one());
  CHECK(is_permutation_matrix(at1));
  CHECK(at1.at(0, 1).is_one());
}

TEST_CASE("representation property and unitarity") {
  for (int k = 0; k < 30; ++k) {
    BraidWord a = rand_braid(4, 5), b = rand_braid(4, 5);
    CHECK(burau_matrix(a * b, BurauKind::Reduced, Q) ==
          burau_matrix(a, BurauKind::Reduced, Q) * burau_matrix(b, BurauKind::Reduced, Q));
  }
  for (int n : {3, 4, 5, 6}) {
    BraidWord w = rand_braid(n, 10);
    LMat a = burau_matrix(w, BurauKind::Unreduced, Q);
    CHECK(unitary_defect(a, squier_form(n, Q)).is_zero());
  }
  // determinant tracks the writhe
  for (int k = 0; k < 20; ++k) {
    BraidWord w = rand_braid(4, 8);
    LaurentPoly expect = LaurentPoly::monomial(
        w.writhe() % 2 == 0 ? Q->one() : -Q->one(), w.writhe());
    CHECK(burau_matrix(w, BurauKind::Reduced, Q).det() == expect);
  }
}

TEST_CASE("small explicit unitarity instance") {
  LMat a = burau_gen(3, 1, 1, BurauKind::Unreduced, Q);
  CHECK(unitary_defect(a, squier_form(3, Q)).is_zero());
}

TEST_CASE("form pattern") {
  for (int n : {3, 4, 6}) {
    LMat j = squier_form(n, Q);
    CHECK(mat_bar(j).transpose() == j);
    CHECK(j.at(0, 0).is_one());
    CHECK(j.at(1, 0) == P("-t"));
    CHECK(j.at(0, 1) == P("-t^-1"));
  }
}

TEST_CASE("membership reports") {
  CHECK(gamma_membership(burau_matrix(parse_braid("s1 s2 s3", 4), BurauKind::Unreduced, Q))
            .pass());
  CHECK(gamma_membership(LMat::identity(4, LaurentPoly::one(Q))).pass());
  LMat bad = LMat::identity(4, LaurentPoly::one(Q));
  bad.at(0, 0) = P("t");
  GammaReport r = gamma_membership(bad);
  CHECK(!r.row_fixed);
  CHECK(!r.pass());
  // closure under product and inverse
  for (int k = 0; k < 20; ++k) {
    LMat a = burau_matrix(rand_braid(4, 6), BurauKind::Unreduced, Q);
    LMat b = burau_matrix(rand_braid(4, 6), BurauKind::Unreduced, Q);
    CHECK(gamma_membership(a * b).pass());
    CHECK(gamma_membership(laurent_inverse(a)).pass());
  }
}

TEST_CASE("restricted membership for the reduced picture") {
  CHECK(gamma_prime_membership(burau_matrix(parse_braid("s2", 4), BurauKind::Reduced, Q))
            .pass());
  LMat bad = LMat::identity(3, LaurentPoly::one(Q));
  bad.at(2, 2) = P("t");
  GammaPrimeReport r = gamma_prime_membership(bad);
  CHECK(!r.unitary_j4p);
  CHECK(reduced_images_at_one(Q).size() == 24);
}

TEST_CASE("diagonalizing conjugation") {
  const DiagData& dd = diag_data(Q);
  RMat s3f = conj_M(burau_gen(4, 3, 1, BurauKind::Reduced, Q), ConjDir::Forward, dd);
  CHECK(is_laurent_matrix(s3f));
  CHECK(to_laurent(s3f) == dd.s3);
  RMat s2f = conj_M(burau_gen(4, 2, 1, BurauKind::Reduced, Q), ConjDir::Forward, dd);
  CHECK(!is_laurent_matrix(s2f));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(s2f.at(i, j).denominator_smooth_1pt());
  // the diagonal unitarity for a random image
  BraidWord w = rand_braid(4, 8);
  RMat c = conj_M(burau_matrix(w, BurauKind::Reduced, Q), ConjDir::Forward, dd);
  RMat D = to_ratfunc(dd.D);
  CHECK(mat_bar(c) * D * c.transpose() == D);
}

TEST_CASE("eigen predicates coincide with the conjugation routes") {
  auto p = lemma39_predicates(burau_matrix(parse_braid("s1", 4), BurauKind::Reduced, Q));
  CHECK(p.p1);
  auto p2 = lemma39_predicates(burau_matrix(parse_braid("s2", 4), BurauKind::Reduced, Q));
  CHECK(!p2.p1);
  auto p3 = lemma39_predicates(
      burau_matrix(parse_braid("s2 s1 s2^-1", 4), BurauKind::Reduced, Q));
  CHECK(!p3.p2);
  const DiagData& dd = diag_data(Q);
  auto cross = [&](const LMat& a) {
    Lemma39 l = lemma39_predicates(a);
    RMat fwd = conj_M(a, ConjDir::Forward, dd);
    RMat bwd = conj_M(a, ConjDir::Backward, dd);
    // the stability conjugation: s2-conjugate of the diagonalized image
    RMat mid = dd.s2 * fwd * dd.s2.inverse();
    CHECK(l.p1 == is_laurent_matrix(fwd));
    CHECK(l.p2 == is_laurent_matrix(mid));
    CHECK(l.p3 == is_laurent_matrix(bwd));
  };
  for (int k = 0; k < 200; ++k)
    cross(burau_matrix(rand_braid(4, 6), BurauKind::Reduced, Q));
  for (int k = 0; k < 200; ++k) cross(rand_gl3(5));
}

TEST_CASE("trivial first row and column embedding") {
  LMat i3 = LMat::identity(3, LaurentPoly::one(Q));
  CHECK(embed_trivial(i3, BurauKind::Unreduced) == LMat::identity(4, LaurentPoly::one(Q)));
  LMat b3s1 = burau_matrix(parse_braid("s1", 3), BurauKind::Unreduced, Q);
  CHECK(embed_trivial(b3s1, BurauKind::Unreduced) ==
        burau_matrix(parse_braid("s2", 4), BurauKind::Unreduced, Q));
  for (int k = 0; k < 10; ++k) {
    LMat a = burau_matrix(rand_braid(3, 6), BurauKind::Unreduced, Q);
    CHECK(gamma_membership(embed_trivial(a, BurauKind::Unreduced)).pass());
  }
  LMat off = burau_matrix(parse_braid("s1", 4), BurauKind::Unreduced, Q);
  CHECK_THROWS_AS((void)embed_trivial(rand_gl3(4), BurauKind::Unreduced), Error);
  (void)off;
}

TEST_CASE("distinguished matrices") {
  LMat sp = mat_Sp(Q);
  LMat expect = LMat::identity(3, LaurentPoly::one(Q));
  expect.at(1, 1) = P("-t");
  expect.at(2, 2) = P("-t^-1");
  CHECK(sp == expect);
  // M S M^-1 diagonalizes the first free generator
  CHECK(mat_S(Q) == burau_matrix(braid_b1(), BurauKind::Reduced, Q));
}
