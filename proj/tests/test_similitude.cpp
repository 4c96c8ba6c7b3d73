#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bforge/similitude.hpp"

using namespace bforge;

namespace {
std::mt19937_64 rng(0xacce5504);
const Field* Q = Field::rational();
LaurentPoly P(const char* s, const Field* F = Field::rational()) {
  return LaurentPoly::parse(s, F);
}
}  // namespace

TEST_CASE("generator lifts match their displays") {
  LMat g0 = gen_lift(GenId::g(Q->zero()), Q);
  CHECK(g0.at(0, 0) == P("t"));
  CHECK(g0.at(1, 1) == P("t^-1"));
  CHECK(g0.at(0, 1).is_zero());
  LMat h0 = gen_lift(GenId::h0(), Q);
  CHECK(h0.at(1, 1) == P("-t"));
  const Field* F2 = Field::prime(2);
  LMat au = gen_lift(GenId::au(LaurentPoly::one(F2)), F2);
  CHECK(au.at(0, 0) == P("1 + t^-1 + t", F2));
  CHECK(au.at(0, 1) == P("t^-1 + 1", F2));
  CHECK(au.at(1, 0) == P("t^-1 + 1 + t + t^2", F2));  // (1+t)(t^-1+t)
  CHECK((au * au).is_identity());
  // domain errors
  const Field* F17 = Field::prime(17);
  CHECK_THROWS_AS((void)gen_lift(GenId::g(F17->from_long(2)), F17), Error);  // 2^4 = -1
  CHECK_THROWS_AS((void)gen_lift(GenId::au(LaurentPoly::one(Q)), Q), Error);
}

TEST_CASE("every elementary lift is projectively unitary for the form") {
  LMat d2 = form_d2(Q);
  for (const char* r : {"0", "1", "-2", "1/2", "3/5"}) {
    auto k = projective_unitary_scalar(gen_lift(GenId::g(Q->parse(r)), Q), d2);
    REQUIRE(k.has_value());
    CHECK(k->is_constant());
  }
  auto k1 = projective_unitary_scalar(gen_lift(GenId::g(Q->one()), Q), d2);
  CHECK(*k1 == P("2"));  // 1 + r^4 at r = 1
  for (GenId id : {GenId::h0(), GenId::hm1(), GenId::e2t(), GenId::e4()})
    CHECK(projective_unitary_scalar(gen_lift(id, Q), d2).has_value());
}

TEST_CASE("relations across fields") {
  CHECK(rel11(Q->from_long(3)));
  CHECK(rel12(Field::prime(5)->from_long(2)));
  CHECK(rel13(P("1", Field::prime(2))));
  CHECK(rel15(Q));
  CHECK(rel16(Q));
  CHECK(rel17(Field::prime(2)));
  CHECK(rel_key(Q));
  for (unsigned long p : {3ul, 5ul, 7ul, 17ul}) CHECK(rel_key(Field::prime(p)));
  CHECK_THROWS_AS((void)rel12(Q->zero()), Error);
  // h0 squares to the inverse zero generator projectively
  CHECK(gen_proj(GenId::h0(), Q).pow(2) == gen_proj(GenId::g(Q->zero()), Q).inv());
}

TEST_CASE("additive generators add") {
  const Field* F2 = Field::prime(2);
  for (int k = 0; k < 50; ++k) {
    LaurentPoly f(F2), g(F2);
    for (int j = 0; j < 3; ++j) {
      if (rng() % 2) f = f + LaurentPoly::t(F2, static_cast<long>(rng() % 4));
      if (rng() % 2) g = g + LaurentPoly::t(F2, static_cast<long>(rng() % 4));
    }
    CHECK(gen_lift(GenId::au(f), F2) * gen_lift(GenId::au(g), F2) ==
          gen_lift(GenId::au(f + g), F2));
    CHECK(gen_lift(GenId::al(f), F2) * gen_lift(GenId::al(g), F2) ==
          gen_lift(GenId::al(f + g), F2));
  }
}

TEST_CASE("c and d") {
  auto [c, d] = cd_matrices(Q);
  CHECK(c == gen_lift(GenId::h0(), Q));
  CHECK(d.at(0, 0) == P("t - t^2 + t^3"));
  CHECK(d.at(1, 0) == P("t^-1 - 1 + t - t^2"));
  CHECK(cd_consistent(Q));
  auto [c3, d3] = cd_matrices(Field::prime(3));
  CHECK(d3.at(0, 0) == P("t + 2*t^2 + t^3", Field::prime(3)));
  CHECK(cd_consistent(Field::prime(3)));
  (void)c3;
}

TEST_CASE("coset representatives are pairwise distinct") {
  std::vector<ProjMat> reps;
  for (const Field* F : {Q, (const Field*)Field::prime(5)}) {
    reps.clear();
    LMat id = LMat::identity(2, LaurentPoly::one(F));
    LMat m1 = id, mt = id, mmt = id;
    m1.at(1, 1) = -LaurentPoly::one(F);
    mt.at(1, 1) = LaurentPoly::t(F);
    mmt.at(1, 1) = -LaurentPoly::t(F);
    for (const LMat& m : {id, m1, mt, mmt}) reps.push_back(ProjMat(m));
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) CHECK(reps[a] != reps[b]);
  }
}

TEST_CASE("normal form round trips") {
  GenWord w;
  w.append(GenId::g(Q->one()), 2);
  NormalFormResult nf = q_normal_form(word_matrix(w, Q), Q, 6);
  REQUIRE(nf.found);
  CHECK(nf.word == w);
  NormalFormResult e = q_normal_form(ProjMat::identity(2, Q), Q, 4);
  REQUIRE(e.found);
  CHECK(e.word.empty());
  // a not-projectively-unitary input is rejected
  LMat bad = LMat::identity(2, LaurentPoly::one(Q));
  bad.at(0, 1) = P("1");
  CHECK_THROWS_AS((void)q_normal_form(ProjMat(bad), Q, 4), Error);
  // free-product reducedness of outputs on random words
  std::vector<FieldElem> pool{Q->parse("0"), Q->parse("1"), Q->parse("-1"),
                              Q->parse("2"), Q->parse("1/2")};
  for (int cse = 0; cse < 40; ++cse) {
    GenWord word;
    std::size_t last = pool.size();
    int len = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j < len; ++j) {
      std::size_t pick = rng() % pool.size();
      if (pick == last) pick = (pick + 1) % pool.size();
      last = pick;
      word.append(GenId::g(pool[pick]), rng() % 2 ? 1 : -1);
    }
    ProjMat m = word_matrix(word, Q);
    NormalFormResult r = q_normal_form(m, Q, 2 * len + 2);
    REQUIRE(r.found);
    CHECK(word_matrix(r.word, Q) == m);
    for (std::size_t j = 0; j + 1 < r.word.letters().size(); ++j)
      CHECK(!(r.word.letters()[j].first == r.word.letters()[j + 1].first));
  }
}

TEST_CASE("membership in a generated sub-basis") {
  const Field* F7 = Field::prime(7);
  std::vector<GenId> basis{GenId::h0(), GenId::g(F7->one())};
  GenWord w1;
  w1.append(GenId::g(F7->from_rational(mpq_class(-1, 2))), 1);
  CHECK(!subgroup_member_basis(w1, basis, F7));
  GenWord w2;
  w2.append(GenId::g(F7->one()), 1);
  CHECK(subgroup_member_basis(w2, basis, F7));
  // products inside the closure stay inside
  GenWord w3;
  w3.append(GenId::g(F7->one()), 2);
  w3.append(GenId::g(-F7->one()), -1);
  w3.append(GenId::h0(), 2);
  CHECK(subgroup_member_basis(w3, basis, F7));
  const Field* F17 = Field::prime(17);
  std::vector<GenId> basis17{GenId::h0(), GenId::g(F17->one())};
  GenWord w4;
  w4.append(GenId::g(F17->from_rational(mpq_class(-7, 13))), 1);
  CHECK(!subgroup_member_basis(w4, basis17, F17));
}

TEST_CASE("word text") {
  GenWord w;
  w.append(GenId::g(Q->parse("-1/2")), -1);
  w.append(GenId::g(Q->parse("6/5")), 1);
  CHECK(w.str() == "g[-1/2]^-1 g[6/5]");
}
