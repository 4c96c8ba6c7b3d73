#include "bforge/scorecard.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bforge/counterexample.hpp"
#include "bforge/matrix_io.hpp"
#include "bforge/stallings.hpp"

namespace bforge {

namespace {

using Clock = std::chrono::steady_clock;

// ---- deterministic random inputs -------------------------------------------

BraidWord random_braid(std::mt19937_64& rng, int strands, int len) {
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<BraidLetter> ls;
  for (int j = 0; j < len; ++j) ls.push_back({idx(rng), sgn(rng) ? 1 : -1});
  return BraidWord(strands, ls);
}

FieldElem random_elem(std::mt19937_64& rng, const Field* F) {
  if (F->kind() == FieldKind::Prime) {
    std::uniform_int_distribution<long> d(0, static_cast<long>(F->characteristic()) - 1);
    return F->from_long(d(rng));
  }
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  auto q = [&]() {
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  FieldElem x = F->from_rational(q());
  if (F->has_i()) x = x + F->imaginary_unit() * F->from_rational(q());
  for (unsigned long p : F->radicands())
    if (rng() % 2) x = x + F->radical(p) * F->from_rational(q());
  return x;
}

LaurentPoly random_poly(std::mt19937_64& rng, const Field* F) {
  std::uniform_int_distribution<long> expo(-6, 6), nterms(1, 5);
  LaurentPoly f(F);
  long k = nterms(rng);
  for (long j = 0; j < k; ++j)
    f = f + LaurentPoly::monomial(random_elem(rng, F), expo(rng));
  return f;
}

// random element of GL(3, Z[t,1/t]): a product of elementary and unit
// diagonal matrices, not unitary in general
LMat random_gl3_laurent(std::mt19937_64& rng, const Field* F, int factors) {
  LMat a = LMat::identity(3, LaurentPoly::one(F));
  std::uniform_int_distribution<int> pick(0, 2), sgn(0, 1), expo(-2, 2), coeff(-3, 3);
  for (int j = 0; j < factors; ++j) {
    LMat e = LMat::identity(3, LaurentPoly::one(F));
    int r = pick(rng), c = pick(rng);
    if (r == c) {
      e.at(r, r) = LaurentPoly::monomial(sgn(rng) ? F->one() : -F->one(), expo(rng));
    } else {
      long cf = coeff(rng);
      if (cf == 0) cf = 1;
      e.at(r, c) = LaurentPoly::monomial(F->from_long(cf), expo(rng));
    }
    a = a * e;
  }
  return a;
}

std::string fmt_q(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str()
                          : q.get_num().get_str() + "/" + q.get_den().get_str();
}

// ---- registry ---------------------------------------------------------------

void add(std::vector<Check>& v, std::string id, std::string label,
         std::function<bool(std::string&)> fn) {
  v.push_back({std::move(id), std::move(label), std::move(fn)});
}

std::vector<Check> build_registry() {
  std::vector<Check> v;
  const Field* Q = Field::rational();

  // --- criterion 1: unitarity suites ---
  add(v, "eq1.unreduced-500", "unitarity of 500 random unreduced images", [](std::string& d) {
    std::mt19937_64 rng(0x5eed0001);
    for (int k = 0; k < 500; ++k) {
      int n = 3 + k % 4;
      BraidWord w = random_braid(rng, n, 8 + static_cast<int>(rng() % 7));
      LMat a = burau_matrix(w, BurauKind::Unreduced, Field::rational());
      if (!unitary_defect(a, squier_form(n, Field::rational())).is_zero()) {
        d = "defect nonzero for word " + w.str();
        return false;
      }
    }
    return true;
  });
  add(v, "eq8.conjugates-500", "diagonalized unitarity of 500 random conjugates",
      [](std::string& d) {
        std::mt19937_64 rng(0x5eed0002);
        const Field* Q = Field::rational();
        const DiagData& dd = diag_data(Q);
        RMat D = to_ratfunc(dd.D);
        for (int k = 0; k < 500; ++k) {
          BraidWord w = random_braid(rng, 4, 8 + static_cast<int>(rng() % 5));
          RMat a = conj_M(burau_matrix(w, BurauKind::Reduced, Q), ConjDir::Forward, dd);
          if (!(mat_bar(a) * D * a.transpose() == D)) {
            d = "scalar differs from 1 for word " + w.str();
            return false;
          }
        }
        return true;
      });

  // --- criterion 2: braid identities ---
  {
    auto beq = [](const char* a, const char* b) {
      return braid_equal(parse_braid(a, 4), parse_braid(b, 4));
    };
    add(v, "eq2.centralizer-sigma3", "generators commute with sigma_3", [](std::string&) {
      BraidWord s3 = parse_braid("s3", 4);
      for (const auto& g : centralizer_data(CentralizedGen::Sigma3))
        if (!braid_equal(g * s3, s3 * g)) return false;
      return true;
    });
    add(v, "eq3.i", "conjugation of b_1 by sigma_2", [beq](std::string&) {
      return beq("s2 b1 s2^-1", "b2^-1 b1");
    });
    add(v, "eq3.ii", "sigma_3 fixes b_1", [beq](std::string&) {
      return beq("s3 b1 s3^-1", "b1");
    });
    add(v, "eq4.i", "sigma_2 fixes b_2", [beq](std::string&) {
      return beq("s2 b2 s2^-1", "b2");
    });
    add(v, "eq4.ii", "conjugation of b_2 by sigma_3", [beq](std::string&) {
      return beq("s3 b2 s3^-1", "b2 b1");
    });
    add(v, "eq5", "negative half-twist conjugate of b_1", [](std::string&) {
      BraidWord q2 = parse_braid("s3 s2 s3", 4).pow(2);
      return braid_equal(q2.inverse() * braid_b1() * q2,
                         parse_braid("b2 b1^-1 b2^-1", 4));
    });
    add(v, "eq6", "positive half-twist conjugate of b_1", [](std::string&) {
      BraidWord q2 = parse_braid("s3 s2 s3", 4).pow(2);
      return braid_equal(q2 * braid_b1() * q2.inverse(),
                         parse_braid("b1^-1 b2 b1^-1 b2^-1 b1", 4));
    });
    add(v, "eq7", "recursion closing the kernel generating set", [](std::string&) {
      BraidWord q2 = parse_braid("s3 s2 s3", 4).pow(2);
      BraidWord b1 = braid_b1();
      BraidWord lhs = q2 * b1 * q2.inverse();
      BraidWord rhs = b1.inverse() * (q2.inverse() * b1 * q2) * b1;
      return braid_equal(lhs, rhs);
    });
    add(v, "remark38.conj-1", "the dual Garside element shifts sigma_1", [beq](std::string&) {
      return beq("s1 s2 s3 s1", "s2 s1 s2 s3");
    });
    add(v, "remark38.conj-2", "the dual Garside element shifts sigma_2", [beq](std::string&) {
      return beq("s1 s2 s3 s2", "s3 s1 s2 s3");
    });
    add(v, "remark38.conj-3", "the shift of sigma_3 lands on b_2 sigma_2",
        [beq](std::string&) { return beq("s1 s2 s3 s3", "b2 s2 s1 s2 s3"); });
    add(v, "remark38.centralizer-sigma2", "generators commute with sigma_2",
        [](std::string&) {
          BraidWord s2 = parse_braid("s2", 4);
          for (const auto& g : centralizer_data(CentralizedGen::Sigma2))
            if (!braid_equal(g * s2, s2 * g)) return false;
          return true;
        });
  }

  // --- criterion 3: printed-matrix fidelity ---
  add(v, "print.s1", "diagonalized image of sigma_1", [Q](std::string&) {
    LMat e = LMat::identity(3, LaurentPoly::one(Q));
    e.at(1, 1) = -LaurentPoly::t(Q);
    return diag_data(Q).s1 == e;
  });
  add(v, "print.s3", "diagonalized image of sigma_3", [Q](std::string&) {
    LMat e = LMat::identity(3, LaurentPoly::one(Q));
    e.at(2, 2) = -LaurentPoly::t(Q);
    return diag_data(Q).s3 == e;
  });
  add(v, "print.s2", "diagonalized image of sigma_2", [Q](std::string&) {
    auto p = [&](const char* n, const char* dd) {
      return RatFunc(LaurentPoly::parse(n, Q), LaurentPoly::parse(dd, Q));
    };
    RMat e(3, 3, RatFunc::zero(Q));
    e.at(0, 0) = p("t - t^2", "1 + t");
    e.at(0, 1) = p("t^2", "1 + t");
    e.at(0, 2) = p("t^2", "1 + t");
    e.at(1, 0) = p("1 + t^2", "t + t^2");
    e.at(1, 1) = p("1", "1 + t");
    e.at(1, 2) = p("-t", "1 + t");
    e.at(2, 0) = p("1 + t^2", "t + t^2");
    e.at(2, 1) = p("-t", "1 + t");
    e.at(2, 2) = p("1", "1 + t");
    return diag_data(Q).s2 == e;
  });
  add(v, "print.eq9", "diagonalized image of the squared half twist", [Q](std::string&) {
    const DiagData& dd = diag_data(Q);
    RMat got = conj_M(burau_matrix(parse_braid("s3 s2 s3", 4).pow(2), BurauKind::Reduced, Q),
                      ConjDir::Forward, dd);
    auto pl = [&](const char* s) { return RatFunc::from_laurent(LaurentPoly::parse(s, Q)); };
    RMat e(3, 3, RatFunc::zero(Q));
    e.at(0, 0) = pl("t - t^2 + t^3");
    e.at(0, 1) = pl("t^2 - t^3");
    e.at(1, 0) = pl("t^-1 - 1 + t - t^2");
    e.at(1, 1) = pl("1 - t + t^2");
    e.at(2, 2) = pl("t^3");
    return got == e;
  });
  add(v, "print.eq10-S", "diagonal form of the first free generator", [Q](std::string&) {
    LMat e = LMat::identity(3, LaurentPoly::one(Q));
    e.at(1, 1) = -LaurentPoly::t(Q);
    e.at(2, 2) = -LaurentPoly::t(Q, -1);
    return mat_Sp(Q) == e;
  });
  add(v, "print.eq10-T", "companion form of the second free generator", [Q](std::string&) {
    auto pl = [&](const char* s) { return LaurentPoly::parse(s, Q); };
    LMat e(3, 3, LaurentPoly(Q));
    e.at(0, 0) = pl("-t^-1 + 1 - t");
    e.at(0, 2) = pl("t - t^2");
    e.at(1, 0) = pl("t^-2 - t^-1 + 1 - t");
    e.at(1, 2) = pl("-1 + t - t^2");
    e.at(2, 1) = pl("-t^-1");
    return mat_Tp(Q) == e;
  });
  add(v, "print.claim1-d", "lifted expression of the d matrix", [Q](std::string&) {
    auto [c, d] = cd_matrices(Q);
    (void)c;
    LMat h0 = gen_lift(GenId::h0(), Q), hm1 = gen_lift(GenId::hm1(), Q);
    LMat g1 = gen_lift(GenId::g(Q->one()), Q);
    LMat e2t = gen_lift(GenId::e2t(), Q), e4 = gen_lift(GenId::e4(), Q);
    LMat expr = e2t * laurent_inverse(e4) * hm1 * laurent_inverse(h0) * g1 * h0 * g1 * h0;
    return d == expr;
  });
  add(v, "print.claim1-dsq", "lifted expression of d squared", [Q](std::string&) {
    auto [c, d] = cd_matrices(Q);
    (void)c;
    LMat h0 = gen_lift(GenId::h0(), Q);
    LMat g1 = gen_lift(GenId::g(Q->one()), Q);
    LMat e2t = gen_lift(GenId::e2t(), Q), e4 = gen_lift(GenId::e4(), Q);
    LMat h0i = laurent_inverse(h0), g1i = laurent_inverse(g1);
    LMat expr = e2t.pow(4) * laurent_inverse(e4.pow(2)) * h0i * h0i * g1i * h0i * g1i *
                h0i * g1 * h0 * g1 * h0;
    return d * d == expr;
  });
  add(v, "print.claim1-dcd", "lifted expression of the d-conjugate of c", [Q](std::string&) {
    auto [c, d] = cd_matrices(Q);
    LMat h0 = gen_lift(GenId::h0(), Q);
    LMat g1 = gen_lift(GenId::g(Q->one()), Q);
    LMat h0i = laurent_inverse(h0), g1i = laurent_inverse(g1);
    LMat expr = h0i * g1i * h0i * g1i * h0 * g1 * h0 * g1 * h0;
    return laurent_inverse(d) * c * d == expr;
  });
  add(v, "print.claim2-d", "characteristic-2 lifted expression of d", [](std::string&) {
    const Field* F2 = Field::prime(2);
    auto [c, d] = cd_matrices(F2);
    (void)c;
    LMat h0(2, 2, LaurentPoly(F2));
    h0.at(0, 0) = LaurentPoly::one(F2);
    h0.at(1, 1) = LaurentPoly::t(F2);
    LMat au1 = gen_lift(GenId::au(LaurentPoly::one(F2)), F2);
    LMat et2 = gen_lift(GenId::et2(), F2);
    LMat h0i = laurent_inverse(h0);
    return d == et2 * h0i * h0i * au1 * h0;
  });
  add(v, "print.C", "the seed lift matches its display entry for entry", [Q](std::string&) {
    return build_C(Q) == printed_C(Q);
  });
  add(v, "print.C-det", "determinant of the seed lift is one", [Q](std::string&) {
    return build_C(Q).det().is_one();
  });

  // --- criterion 4: similitude relations ---
  {
    std::vector<const Field*> fields{Q, Field::prime(5), Field::prime(7)};
    const char* rs[] = {"1", "-1", "2", "-2", "1/2", "-1/2", "3/5"};
    for (const Field* F : fields)
      for (const char* r : rs) {
        std::string tag = F->tag();
        mpq_class rq(r);
        if (F->kind() == FieldKind::Prime &&
            rq.get_den() % static_cast<long>(F->characteristic()) == 0)
          continue;  // not an element of this field
        add(v, "eq11." + tag + "[r=" + std::string(r) + "]",
            "involution action on an elementary generator",
            [F, rq](std::string&) { return rel11(F->from_rational(rq)); });
        add(v, "eq12." + tag + "[r=" + std::string(r) + "]",
            "index-two action on an elementary generator",
            [F, rq](std::string&) { return rel12(F->from_rational(rq)); });
      }
    const char* fs[] = {"1", "t", "t^2+t"};
    for (const char* fstr : fs)
      add(v, std::string("eq13.f2[f=") + fstr + "]",
          "swap of the additive generators in characteristic 2", [fstr](std::string&) {
            const Field* F2 = Field::prime(2);
            return rel13(LaurentPoly::parse(fstr, F2));
          });
    add(v, "eq15", "lifted involution relation", [Q](std::string&) { return rel15(Q); });
    add(v, "eq16", "lifted square relation", [Q](std::string&) { return rel16(Q); });
    add(v, "eq17", "characteristic-2 lifted structure bundle",
        [](std::string&) { return rel17(Field::prime(2)); });
    add(v, "key.q", "the closing relation over the rationals",
        [Q](std::string&) { return rel_key(Q); });
    for (unsigned long p : {3ul, 5ul, 7ul, 17ul})
      add(v, "key.f" + std::to_string(p), "the closing relation modulo " + std::to_string(p),
          [p](std::string&) { return rel_key(Field::prime(p)); });
    add(v, "cd.consistency", "d agrees with the diagonalized block recomputation",
        [Q](std::string&) { return cd_consistent(Q); });
  }

  // --- criterion 5: counterexample pipeline ---
  add(v, "counterexample.pipeline", "every assembled check and the final eigencheck",
      [Q](std::string& d) {
        CounterexampleReport rep = assemble_A0(Q);
        final_eigencheck(rep);
        bool ok = rep.pass();
        if (!ok) {
          d = "failing:";
          for (const auto& [k, val] : rep.checks)
            if (!val) d += " " + k;
        }
        return ok;
      });
  {
    const char* subchecks[] = {
        "C.det-one",         "C.unitary-d2",       "Bprime.identity-at-minus1",
        "A0.laurent",        "A0.det-one",         "A0.commutes-sigma3",
        "A0.gamma-prime",    "A0.eval-minus1",     "correction.unipotent-power",
        "A.eigencheck",      "A0.eigencheck-null", "A.det-one-crosscheck"};
    for (const char* name : subchecks)
      add(v, std::string("counterexample.") + name, std::string("pipeline check ") + name,
          [name, Q](std::string&) {
            CounterexampleReport rep = assemble_A0(Q);
            final_eigencheck(rep);
            return rep.check(name);
          });
  }

  // --- criterion 6: normal-form round trips ---
  add(v, "nf.seed-word", "the seven-letter word is recovered from its lift",
      [Q](std::string& d) {
        ProjMat w(build_C(Q));
        NormalFormResult nf = q_normal_form(w, Q, 8);
        if (!nf.found) {
          d = "not found within bound";
          return false;
        }
        if (!(nf.word == counterexample_word(Q))) {
          d = "recovered " + nf.word.str();
          return false;
        }
        return true;
      });
  {
    auto roundtrip = [](const Field* F, unsigned long seed, std::string& d) {
      std::mt19937_64 rng(seed);
      std::vector<FieldElem> pool;
      if (F->kind() == FieldKind::Prime) {
        for (unsigned long r = 0; r < F->characteristic(); ++r) {
          FieldElem e = F->from_long(static_cast<long>(r));
          FieldElem e2 = e * e;
          if (!(e2 * e2 + F->one()).is_zero()) pool.push_back(e);
        }
      } else {
        for (const char* r : {"0", "1", "-1", "2", "-2", "1/2", "-1/2", "3/2", "-2/3"})
          pool.push_back(F->from_rational(mpq_class(r)));
      }
      for (int cse = 0; cse < 200; ++cse) {
        GenWord w;
        int len = 1 + static_cast<int>(rng() % 6);
        std::size_t last = pool.size();
        for (int j = 0; j < len; ++j) {
          std::size_t pick = rng() % pool.size();
          if (pick == last) pick = (pick + 1) % pool.size();
          last = pick;
          long e = 1 + static_cast<long>(rng() % 2);
          if (rng() % 2) e = -e;
          w.append(GenId::g(pool[pick]), e);
        }
        ProjMat m = word_matrix(w, F);
        NormalFormResult nf = q_normal_form(m, F, 2 * len + 2);
        if (!nf.found || word_matrix(nf.word, F) != m) {
          d = "case " + std::to_string(cse) + ": " + w.str();
          return false;
        }
        const auto& ls = nf.word.letters();
        for (std::size_t j = 0; j + 1 < ls.size(); ++j)
          if (ls[j].first == ls[j + 1].first) {
            d = "not reduced: " + nf.word.str();
            return false;
          }
      }
      return true;
    };
    add(v, "nf.roundtrip-q", "200 random words over the rationals round trip",
        [roundtrip, Q](std::string& d) { return roundtrip(Q, 0x5eed0006, d); });
    add(v, "nf.roundtrip-f5", "200 random words modulo 5 round trip",
        [roundtrip](std::string& d) { return roundtrip(Field::prime(5), 0x5eed0007, d); });
  }

  // --- criterion 7: building suite ---
  for (long r : {1L, 2L, 3L})
    add(v, "lemma43.r" + std::to_string(r), "lattice chain of the elementary generator",
        [r](std::string& d) {
          std::string tower;
          bool ok = verify_lemma43(r, &tower);
          d = "tower " + tower;
          return ok;
        });
  add(v, "rel18", "composition of the two distinguished unipotents",
      [](std::string&) { return verify_rel18(); });
  add(v, "rel19.r2", "inversion relation at r = 2", [](std::string& d) {
    std::string tower;
    bool ok = verify_rel19(2, &tower);
    d = "tower " + tower;
    return ok;
  });
  add(v, "rel20.default", "triangle relation at (r1, r2) = (2, 1)", [](std::string& d) {
    std::string tower;
    bool ok = verify_rel20(2, 1, &tower);
    d = "tower " + tower;
    return ok;
  });
  for (int j = 1; j <= 9; ++j)
    add(v, "eq21.a" + std::to_string(j), "subgroup generator as a labeled word",
        [j](std::string&) { return verify_eq21(j); });
  add(v, "phi.values", "coordinate images of the labeled generators",
      [](std::string&) { return verify_phi_values(); });
  add(v, "eq22.grid", "closed form of conjugated unipotent coordinates",
      [](std::string&) { return verify_eq22_grid(); });

  // --- criterion 8: desk-scale link ---
  add(v, "lemma47.bfs-radius2", "the eleven type-1 link classes at radius 2",
      [](std::string& d) {
        if (!verify_lemma47()) {
          d = "direct class check failed";
          return false;
        }
        const Field* F = Field::gaussian();
        SubcomplexReport rep = explore(standard_gens(F), 2);
        if (rep.budget_exceeded) {
          d = "budget exceeded";
          return false;
        }
        // the eleven distinguished classes
        ProjMat d1 = named_gen(NamedGen::D1, F), d2 = named_gen(NamedGen::D2, F);
        ProjMat g1 = named_gen(NamedGen::G1, F), g2 = named_gen(NamedGen::G2, F);
        ProjMat g3 = named_gen(NamedGen::G3, F), g4 = named_gen(NamedGen::G4, F);
        std::vector<ProjMat> words{d1, d2, d1.inv() * d2.inv(), g1, g2, g3, g4,
                                   d2.inv() * g1.inv(), d2.inv() * g3.inv(),
                                   d1.inv() * g2.inv(), d1.inv() * g4.inv()};
        std::vector<std::string> keys;
        for (const auto& w : words)
          keys.push_back(LatticeClass::canonical(to_ratfunc(w.rep())).key());
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        if (keys.size() != 11) {
          d = "printed classes are not pairwise distinct";
          return false;
        }
        std::vector<std::string> found;
        for (std::size_t ix : rep.link_of_identity)
          if (rep.vertices[ix].type == 1) found.push_back(rep.vertices[ix].key);
        std::sort(found.begin(), found.end());
        if (found != keys) {
          d = "type-1 link classes differ from the printed list (" +
              std::to_string(found.size()) + " found)";
          return false;
        }
        return true;
      });

  // --- criterion 9: foldings ---
  add(v, "stallings.rank9", "folding the nine printed words gives rank 9",
      [](std::string& d) {
        long r = rank_of_a_words();
        d = "rank " + std::to_string(r);
        return r == 9;
      });
  add(v, "stallings.fquotient", "weight of every subgroup generator vanishes",
      [](std::string& d) {
        for (int j = 1; j <= 9; ++j)
          if (f_quotient_a(j) != 0) {
            d = "index " + std::to_string(j);
            return false;
          }
        return true;
      });
  add(v, "stallings.l-consistency", "printed kernel-basis expressions match the matrices",
      [](std::string& d) {
        bool ok = true;
        d = "per index:";
        for (int j = 1; j <= 9; ++j) {
          bool r = verify_l_consistency(j);
          d += r ? " +" : " a" + std::to_string(j) + ":FAIL";
          ok = ok && r;
        }
        return ok;
      });
  add(v, "stallings.l-derived", "re-derived kernel-basis expressions match the matrices",
      [](std::string& d) {
        long r = rank_of_derived_a_words();
        d = "derived fold rank " + std::to_string(r);
        return verify_l_derived_all() && r == 9;
      });

  // --- criterion 10: property suites ---
  add(v, "prop.bar-involution", "the bar map is an involutive ring morphism",
      [](std::string& d) {
        std::vector<const Field*> fields{Field::rational(), Field::gaussian(),
                                         Field::prime(5),
                                         Field::multiquad({2, 17}, true)};
        std::mt19937_64 rng(0x5eed0010);
        for (const Field* F : fields)
          for (int k = 0; k < 1000; ++k) {
            LaurentPoly f = random_poly(rng, F), g = random_poly(rng, F);
            if (!(f.bar().bar() == f) || !((f * g).bar() == f.bar() * g.bar()) ||
                !((f + g).bar() == f.bar() + g.bar())) {
              d = "field " + F->tag() + " case " + std::to_string(k);
              return false;
            }
          }
        return true;
      });
  add(v, "prop.gamma-closure", "membership is closed under products and inverses",
      [](std::string& d) {
        std::mt19937_64 rng(0x5eed0011);
        const Field* Q = Field::rational();
        for (int k = 0; k < 100; ++k) {
          LMat a = burau_matrix(random_braid(rng, 4, 6), BurauKind::Unreduced, Q);
          LMat b = burau_matrix(random_braid(rng, 4, 6), BurauKind::Unreduced, Q);
          if (!gamma_membership(a * b).pass() || !gamma_membership(laurent_inverse(a)).pass()) {
            d = "case " + std::to_string(k);
            return false;
          }
        }
        return true;
      });
  add(v, "prop.phi-additivity", "coordinates add along products in the kernel",
      [](std::string& d) {
        std::mt19937_64 rng(0x5eed0012);
        const Field* F = Field::gaussian();
        std::vector<ProjMat> gens = standard_gens(F);
        auto rand_word = [&](int len) {
          ProjMat m = ProjMat::identity(3, F);
          for (int j = 0; j < len; ++j) {
            const ProjMat& g = gens[rng() % gens.size()];
            m = m * (rng() % 2 ? g : g.inv());
          }
          return m;
        };
        for (int k = 0; k < 100; ++k) {
          ProjMat u = rand_word(1 + static_cast<int>(rng() % 3));
          ProjMat w = rand_word(1 + static_cast<int>(rng() % 3));
          auto [a1, b1] = phi_map(u);
          auto [a2, b2] = phi_map(w);
          auto [a3, b3] = phi_map(u * w);
          if (!(a3 == a1 + a2) || !(b3 == b1 + b2)) {
            d = "case " + std::to_string(k);
            return false;
          }
        }
        return true;
      });
  add(v, "prop.fold-confluence", "folding is independent of generator order",
      [](std::string& d) {
        std::vector<FreeWord> base;
        for (int j = 1; j <= 9; ++j) base.push_back(a_word_in_l(j));
        std::string expect = fold_words(base, 9).canonical_hash();
        std::mt19937_64 rng(0x5eed0013);
        for (int k = 0; k < 20; ++k) {
          std::vector<FreeWord> shuffled = base;
          std::shuffle(shuffled.begin(), shuffled.end(), rng);
          if (fold_words(shuffled, 9).canonical_hash() != expect) {
            d = "shuffle " + std::to_string(k);
            return false;
          }
        }
        return true;
      });

  std::sort(v.begin(), v.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  return v;
}

}  // namespace

const std::vector<Check>& check_registry() {
  static const std::vector<Check>* reg = new std::vector<Check>(build_registry());
  return *reg;
}

bool Scorecard::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string Scorecard::table() const {
  std::stringstream ss;
  std::size_t wid = 4;
  for (const auto& c : checks) wid = std::max(wid, c.id.size());
  for (const auto& c : checks) {
    ss << (c.pass ? "PASS  " : "FAIL  ") << c.id;
    for (std::size_t j = c.id.size(); j < wid + 2; ++j) ss << ' ';
    ss << c.label;
    if (!c.detail.empty()) ss << "  [" << c.detail << "]";
    char buf[32];
    std::snprintf(buf, sizeof buf, "  (%.1f ms)", c.ms);
    ss << buf << "\n";
  }
  std::size_t passed = 0;
  for (const auto& c : checks)
    if (c.pass) ++passed;
  ss << passed << "/" << checks.size() << " checks passed\n";
  return ss.str();
}

std::string Scorecard::json() const {
  nlohmann::json j;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["id"] = c.id;
    e["label"] = c.label;
    e["pass"] = c.pass;
    e["ms"] = c.ms;
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  j["status"] = all_pass() ? "pass" : "fail";
  return j.dump(2);
}

Scorecard run_checks(const std::string& prefix, unsigned threads) {
  const auto& reg = check_registry();
  std::vector<const Check*> jobs;
  for (const auto& c : reg)
    if (c.id.rfind(prefix, 0) == 0) jobs.push_back(&c);
  if (threads == 0) {
    if (const char* env = std::getenv("BURAU_FORGE_THREADS"))
      threads = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
  }
  threads = std::min<unsigned>(threads, jobs.empty() ? 1 : jobs.size());
  std::vector<CheckResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      const Check& c = *jobs[i];
      CheckResult r;
      r.id = c.id;
      r.label = c.label;
      auto t0 = Clock::now();
      try {
        r.pass = c.fn(r.detail);
      } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
      }
      r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      results[i] = std::move(r);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < threads; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Scorecard card;
  card.checks = std::move(results);
  std::sort(card.checks.begin(), card.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return card;
}

}  // namespace bforge
