#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bforge/counterexample.hpp"
#include "bforge/matrix_io.hpp"

using namespace bforge;

namespace {
const Field* Q = Field::rational();
}

TEST_CASE("the seed lift") {
  LMat c = build_C(Q);
  CHECK(c == printed_C(Q));
  CHECK(c.at(0, 0) ==
        LaurentPoly::parse("1 - t + t^2", Q) *
            LaurentPoly::parse("-2 + 6*t - 9*t^2 + 8*t^3 - 6*t^4 + 2*t^5", Q) *
            LaurentPoly::t(Q, -4));
  CHECK(c.det().is_one());
  CHECK(unitary_defect(c, form_d2(Q)).is_zero());
}

TEST_CASE("pipeline checks") {
  CounterexampleReport rep = assemble_A0(Q);
  CHECK(final_eigencheck(rep));
  for (const auto& [name, pass] : rep.checks) {
    INFO(name);
    CHECK(pass);
  }
  FMat ev = mat_eval(rep.A0, -Q->one());
  CHECK(ev.at(0, 1) == Q->from_long(41616));
  CHECK(ev.at(2, 1) == Q->from_long(-17238));
  CHECK(ev.at(0, 0).is_one());
  // the commutator with the third generator image vanishes
  LMat s3 = burau_gen(4, 3, 1, BurauKind::Reduced, Q);
  CHECK(rep.A0 * s3 * laurent_inverse(rep.A0) * laurent_inverse(s3) ==
        LMat::identity(3, LaurentPoly::one(Q)));
}

TEST_CASE("backward conjugate is controlled by the eigencondition") {
  CounterexampleReport rep = assemble_A0(Q);
  LMat b = LMat::identity(3, LaurentPoly::one(Q));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = rep.Bprime.at(i, j);
  Lemma39 l = lemma39_predicates(b);
  const DiagData& dd = diag_data(Q);
  bool laurent = is_laurent_matrix(conj_M(b, ConjDir::Backward, dd));
  CHECK(l.p3);
  CHECK(laurent);
  CHECK(l.p3 == laurent);
  // a matrix violating the eigencondition conjugates outside the Laurent ring
  LMat bad = burau_matrix(parse_braid("s2", 4), BurauKind::Reduced, Q);
  Lemma39 lb = lemma39_predicates(bad);
  CHECK(lb.p3 == is_laurent_matrix(conj_M(bad, ConjDir::Backward, dd)));
}

TEST_CASE("pipeline determinism") {
  CounterexampleReport r1 = assemble_A0(Q);
  final_eigencheck(r1);
  CounterexampleReport r2 = assemble_A0(Q);
  final_eigencheck(r2);
  CHECK(matrix_to_json(r1.A0).dump() == matrix_to_json(r2.A0).dump());
  CHECK(r1.checks == r2.checks);
  CHECK(r1.A_at_minus1 == r2.A_at_minus1);
}

TEST_CASE("unipotent correction factors") {
  FMat e1 = mat_eval(burau_gen(4, 1, 1, BurauKind::Reduced, Q), -Q->one());
  FMat u = e1.pow(-58854);
  CHECK(u.at(0, 1) == Q->from_long(-58854));
  CHECK(u.at(0, 0).is_one());
  CHECK(u.at(1, 0).is_zero());
  // with trivial exponents the eigencondition fails
  CounterexampleReport rep = assemble_A0(Q);
  std::vector<FieldElem> v{Q->one(), -Q->one(), -Q->one()};
  CHECK(!is_eigenvector(mat_eval(rep.A0, -Q->one()).transpose(), v));
}

TEST_CASE("materialized small exponents") {
  CounterexampleReport rep = assemble_A0(Q);
  MaterializedCheck mc = materialize_exponents(rep, -4, 2);
  CHECK(mc.laurent);
  CHECK(mc.det_unit);
  CHECK(mc.eval_consistent);
}

TEST_CASE("hereditary embedding") {
  LMat i3 = LMat::identity(3, LaurentPoly::one(Q));
  EmbedReport r = hereditary_embed(i3, BurauKind::Unreduced);
  CHECK(r.embedded == LMat::identity(4, LaurentPoly::one(Q)));
  CHECK(r.gamma.pass());
  LMat img = burau_matrix(parse_braid("s1 s2", 3), BurauKind::Unreduced, Q);
  EmbedReport r2 = hereditary_embed(img, BurauKind::Unreduced);
  CHECK(r2.gamma.pass());
  // an input failing the membership precondition is rejected
  LMat bad = LMat::identity(3, LaurentPoly::one(Q));
  bad.at(0, 1) = LaurentPoly::one(Q);
  CHECK_THROWS_AS((void)hereditary_embed(bad, BurauKind::Unreduced), Error);
}
