#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "lgq/cartan.hpp"
#include "lgq/verify.hpp"

using namespace lgq;

namespace {

bool is_identity(const Matrix<RationalFunction>& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      RationalFunction expect = i == j ? RationalFunction::one() : RationalFunction::zero();
      if (!m.at(i, j).equals(expect)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("golden Cartan matrices of the three-vertex example") {
  ParsedQuiver ex = fixtures::example33();
  LocallyGentleQuiver g = validate(ex.quiver);
  Var q = *ex.vars.find("q");
  Var t = *ex.vars.find("t");

  Matrix<RationalFunction> computed = cartan_exact(g, ex.weights);
  Matrix<RationalFunction> golden = fixtures::golden_example33_cartan(q, t);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      INFO("entry (" << i + 1 << "," << j + 1 << ")");
      CHECK(computed.at(i, j).equals(golden.at(i, j)));
    }

  Matrix<RationalFunction> dual_computed = cartan_exact(dual(g), ex.weights);
  Matrix<RationalFunction> dual_golden = fixtures::golden_example33_dual_cartan(q, t);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      INFO("dual entry (" << i + 1 << "," << j + 1 << ")");
      CHECK(dual_computed.at(i, j).equals(dual_golden.at(i, j)));
    }
}

TEST_CASE("single vertex Cartan matrix is [1]") {
  Quiver q;
  q.add_vertex("v");
  LocallyGentleQuiver g = validate(q);
  Matrix<RationalFunction> c = cartan_exact(g, WeightFunction{});
  REQUIRE(c.rows() == 1);
  CHECK(c.at(0, 0).equals(RationalFunction::one()));
  CHECK(det_elimination(g, WeightFunction{}).equals(RationalFunction::one()));
}

TEST_CASE("duality on the printed matrices: C_Q(q,t) * C_Q#(q,-t) = E") {
  ParsedQuiver ex = fixtures::example33();
  Var q = *ex.vars.find("q");
  Var t = *ex.vars.find("t");
  Matrix<RationalFunction> a = fixtures::golden_example33_cartan(q, t);
  Matrix<RationalFunction> b = fixtures::golden_example33_dual_cartan(q, t);
  std::map<Var, SignedMonomial> negate_t{{t, SignedMonomial{-1, Monomial::variable(t)}}};
  Matrix<RationalFunction> b_neg(3, 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) b_neg.at(i, j) = b.at(i, j).substitute(negate_t);
  CHECK(is_identity(a * b_neg));

  LocallyGentleQuiver g = validate(ex.quiver);
  CHECK(verify_duality(g, ex.weights));
}

TEST_CASE("duality on the arrowless quiver") {
  Quiver q;
  q.add_vertex("u");
  q.add_vertex("v");
  LocallyGentleQuiver g = validate(q);
  CHECK(verify_duality(g, WeightFunction{}));
}

TEST_CASE("series oracle on loops") {
  VarTable vars;
  Var qv = vars.intern("q");
  DegreeWeights wts;

  Quiver loop;
  int v = loop.add_vertex("v");
  loop.add_arrow("eps", v, v);
  LocallyGentleQuiver free_loop = validate(loop);
  WeightFunction w = uniform_weights(loop, qv);

  Matrix<TruncatedSeries> s = cartan_series_oracle(free_loop, w, wts, 5);
  Polynomial expect;
  for (int k = 0; k <= 5; ++k) expect.add_term(Monomial::variable(qv, k), 1);
  CHECK(s.at(0, 0).poly() == expect);

  loop.add_relation(0, 0);
  LocallyGentleQuiver bounded = validate(loop);
  Matrix<TruncatedSeries> s2 = cartan_series_oracle(bounded, w, wts, 9);
  Polynomial expect2 = Polynomial::one() + Polynomial(Monomial::variable(qv));
  CHECK(s2.at(0, 0).poly() == expect2);
}

TEST_CASE("series oracle matches the exact matrix on the example") {
  ParsedQuiver ex = fixtures::example33();
  LocallyGentleQuiver g = validate(ex.quiver);
  Var q = *ex.vars.find("q");
  Var t = *ex.vars.find("t");
  DegreeWeights tw;  // t-degree = path length
  tw.set(q, 0).set(t, 1);
  Matrix<TruncatedSeries> oracle = cartan_series_oracle(g, ex.weights, tw, 5);
  Matrix<RationalFunction> exact = cartan_exact(g, ex.weights);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      CHECK(series_expand(exact.at(i, j), tw, 5) == oracle.at(i, j));
}

TEST_CASE("determinant of the double-triangle quiver") {
  ParsedQuiver ex = fixtures::example43();
  LocallyGentleQuiver g = validate(ex.quiver);
  Var q = *ex.vars.find("q");

  Polynomial num = (Polynomial::one() + Polynomial(Monomial::variable(q, 3))).pow(2);
  RationalFunction expect(num, {CycleFactor{Monomial::variable(q, 6), +1}});

  RationalFunction by_formula = det_formula(g, ex.weights);
  RationalFunction by_elim = det_elimination(g, ex.weights);
  CHECK(by_formula.equals(expect));
  CHECK(by_elim.equals(expect));
  CHECK(by_formula.equals(by_elim));
}

TEST_CASE("determinant of the gentle loop") {
  ParsedQuiver lp = fixtures::gentle_loop();
  LocallyGentleQuiver g = validate(lp.quiver);
  Var q = *lp.vars.find("q");
  RationalFunction expect(Polynomial::one() + Polynomial(Monomial::variable(q)));
  CHECK(det_formula(g, lp.weights).equals(expect));
  CHECK(det_elimination(g, lp.weights).equals(expect));
}

TEST_CASE("critical quiver determinant is 1 with generic weights") {
  ParsedQuiver crit = fixtures::critical2();
  LocallyGentleQuiver g = validate(crit.quiver);
  CHECK(det_formula(g, crit.weights).equals(RationalFunction::one()));
  CHECK(det_elimination(g, crit.weights).equals(RationalFunction::one()));
}

TEST_CASE("Cartan entry invariants on the corpus") {
  for (const auto& c : fixtures::corpus(40)) {
    Matrix<RationalFunction> m = cartan_exact(c.lgq, c.weights);
    bool gentle = is_gentle(c.lgq);
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j) {
        const RationalFunction& e = m.at(i, j);
        // constant term: 1 on the diagonal (trivial path), 0 off it
        Int num_const = e.numerator().coefficient(Monomial::one());
        CHECK(num_const == (i == j ? 1 : 0));  // denominators have constant term 1
        if (gentle) CHECK(e.denominator().empty());
      }
  }
}

TEST_CASE("main theorem and duality on a corpus sample") {
  // indices 60..107 reach the 6-vertex, 12-arrow instances
  for (const auto& c : fixtures::corpus_range(60, 48)) {
    INFO("seed " << c.seed);
    CHECK(det_elimination(c.lgq, c.weights).equals(det_formula(c.lgq, c.weights)));
    CHECK(verify_duality(c.lgq, c.weights));
  }
}

TEST_CASE("dual determinant closure on a corpus sample") {
  for (const auto& c : fixtures::corpus(30)) {
    std::map<Var, SignedMonomial> negate_all;
    for (int v = 0; v < c.vars.size(); ++v)
      negate_all.emplace(v, SignedMonomial{-1, Monomial::variable(v)});
    RationalFunction lhs = det_formula(dual(c.lgq), c.weights);
    RationalFunction rhs = det_formula(c.lgq, c.weights).substitute(negate_all);
    CHECK((lhs * rhs).equals(RationalFunction::one()));
  }
}

TEST_CASE("reduction of the double-triangle quiver") {
  ParsedQuiver ex = fixtures::example43();
  LocallyGentleQuiver g = validate(ex.quiver);
  Var q = *ex.vars.find("q");
  CyclePartition parts = minimal_cycles(g);
  REQUIRE(parts.zc.size() == 2);
  // outer cycle a1 a2 a3, reduced at its starting vertex
  const MinimalCycle& outer = parts.zc[0];
  REQUIRE(ex.quiver.arrows[static_cast<size_t>(outer.arrows[0])].id == "a1");

  ReductionOutcome out = reduce_step(g, ex.weights, outer, 0);

  Polynomial one_plus_q3 = Polynomial::one() + Polynomial(Monomial::variable(q, 3));
  REQUIRE(out.extracted_factors.size() == 2);
  CHECK(out.extracted_factors[0] == one_plus_q3);
  CHECK(out.extracted_factors[1] == one_plus_q3);

  // reduced quiver: five arrows, one of weight q^2, no full-relations
  // cycles, one no-relations cycle of weight q^6
  CHECK(out.quiver.n_arrows() == 5);
  int merged = *out.quiver.quiver().arrow_index("b3*a1");
  CHECK(out.weights.of(merged) == Monomial::variable(q, 2));
  CyclePartition reduced_parts = minimal_cycles(out.quiver);
  CHECK(reduced_parts.zc.empty());
  REQUIRE(reduced_parts.ic.size() == 1);
  CHECK(reduced_parts.ic[0].length() == 5);
  CHECK(reduced_parts.ic[0].weight(out.weights) == Monomial::variable(q, 6));

  // det C_Q = (1+q^3)^2 det C_Qbar, and the reduced determinant is 1/(1-q^6)
  RationalFunction reduced_det = det_elimination(out.quiver, out.weights);
  CHECK(reduced_det.equals(
      RationalFunction(Polynomial::one(), {CycleFactor{Monomial::variable(q, 6), +1}})));
  RationalFunction recombined =
      RationalFunction(one_plus_q3 * one_plus_q3) * reduced_det;
  CHECK(recombined.equals(det_elimination(g, ex.weights)));
}

TEST_CASE("reduction with no extra incoming arrow removes the cycle arrow") {
  // oriented triangle with full relations, nothing else attached
  Quiver q;
  int v1 = q.add_vertex("1");
  int v2 = q.add_vertex("2");
  int v3 = q.add_vertex("3");
  int r = q.add_arrow("r", v1, v2);
  int s = q.add_arrow("s", v2, v3);
  int u = q.add_arrow("u", v3, v1);
  q.add_relation(r, s);
  q.add_relation(s, u);
  q.add_relation(u, r);
  LocallyGentleQuiver g = validate(q);
  VarTable vars;
  WeightFunction w = generic_weights(q, vars);

  CyclePartition parts = minimal_cycles(g);
  REQUIRE(parts.zc.size() == 1);
  ReductionOutcome out = reduce_step(g, w, parts.zc[0], v1);
  CHECK(out.quiver.n_arrows() == 2);
  REQUIRE(out.extracted_factors.size() == 1);

  RationalFunction recombined = RationalFunction(out.extracted_factors[0]) *
                                det_elimination(out.quiver, out.weights);
  CHECK(recombined.equals(det_elimination(g, w)));
}

TEST_CASE("reduction preconditions") {
  ParsedQuiver crit = fixtures::critical2();
  LocallyGentleQuiver g = validate(crit.quiver);
  CyclePartition parts = minimal_cycles(g);
  REQUIRE(parts.zc.size() == 1);
  // every vertex is visited twice by the cycle of a critical quiver
  CHECK_THROWS_AS(reduce_step(g, crit.weights, parts.zc[0], 0), PreconditionError);
  CHECK_THROWS_AS(reduce_step(g, crit.weights, parts.ic[0], 0), PreconditionError);
}

TEST_CASE("reduction identity over all applicable corpus pairs") {
  int applied = 0;
  for (const auto& c : fixtures::corpus(36)) {
    RationalFunction det = det_elimination(c.lgq, c.weights);
    for (const auto& cycle : minimal_cycles(c.lgq).zc) {
      for (int v = 0; v < c.lgq.n_vertices(); ++v) {
        int sources = 0;
        for (int a : cycle.arrows)
          if (c.lgq.quiver().arrows[static_cast<size_t>(a)].source == v) ++sources;
        if (sources != 1) continue;
        ReductionOutcome out = reduce_step(c.lgq, c.weights, cycle, v);
        CHECK(minimal_cycles(out.quiver).zc.size() < minimal_cycles(c.lgq).zc.size());
        RationalFunction recombined = det_elimination(out.quiver, out.weights);
        for (const auto& f : out.extracted_factors)
          recombined *= RationalFunction(f);
        CHECK(recombined.equals(det));
        ++applied;
      }
    }
  }
  CHECK(applied > 0);
}

TEST_CASE("diagonalization consequences for gentle quivers") {
  SECTION("loop with squared relation") {
    ParsedQuiver lp = fixtures::gentle_loop();
    CHECK(verify_diagonalization(validate(lp.quiver), lp.weights));
  }

  SECTION("even cycle forces determinant 0 at q = 1") {
    Quiver q;
    int v1 = q.add_vertex("1");
    int v2 = q.add_vertex("2");
    int f = q.add_arrow("f", v1, v2);
    int b = q.add_arrow("b", v2, v1);
    q.add_relation(f, b);
    q.add_relation(b, f);
    LocallyGentleQuiver g = validate(q);
    VarTable vars;
    WeightFunction w = uniform_weights(q, vars.intern("q"));
    CHECK(is_gentle(g));
    CHECK(verify_diagonalization(g, w));
    RationalFunction det = det_formula(g, w);
    REQUIRE(det.denominator().empty());
    CHECK(det.numerator().evaluate_all_ones() == 0);
  }

  SECTION("not gentle is rejected") {
    ParsedQuiver ex = fixtures::example33();
    CHECK_THROWS_AS(verify_diagonalization(validate(ex.quiver), ex.weights),
                    PreconditionError);
  }

  SECTION("gentle corpus quivers pass") {
    for (const auto& c : fixtures::corpus(36)) {
      if (!is_gentle(c.lgq)) continue;
      CHECK(verify_diagonalization(c.lgq, c.weights));
    }
  }
}

TEST_CASE("corollary specializations") {
  SECTION("double triangle") {
    ParsedQuiver ex = fixtures::example43();
    LocallyGentleQuiver g = validate(ex.quiver);
    VarTable vars;
    CorollaryReport rep = specialize_corollaries(g, vars);
    Var q = *vars.find("q");
    Polynomial num = (Polynomial::one() + Polynomial(Monomial::variable(q, 3))).pow(2);
    CHECK(rep.q_determinant.equals(
        RationalFunction(num, {CycleFactor{Monomial::variable(q, 6), +1}})));
    CHECK_FALSE(rep.unweighted.has_value());  // not gentle
  }

  SECTION("two odd cycles give 2^2") {
    Quiver q;
    int u = q.add_vertex("u");
    int v = q.add_vertex("v");
    int e1 = q.add_arrow("e1", u, u);
    int e2 = q.add_arrow("e2", v, v);
    q.add_relation(e1, e1);
    q.add_relation(e2, e2);
    VarTable vars;
    CorollaryReport rep = specialize_corollaries(validate(q), vars);
    REQUIRE(rep.unweighted.has_value());
    CHECK(*rep.unweighted == 4);
    CHECK(rep.odd_cycles == 2);
    CHECK(rep.even_cycles == 0);
    CHECK(rep.consistent);
  }

  SECTION("an even cycle gives 0") {
    Quiver q;
    int v1 = q.add_vertex("1");
    int v2 = q.add_vertex("2");
    int f = q.add_arrow("f", v1, v2);
    int b = q.add_arrow("b", v2, v1);
    q.add_relation(f, b);
    q.add_relation(b, f);
    VarTable vars;
    CorollaryReport rep = specialize_corollaries(validate(q), vars);
    REQUIRE(rep.unweighted.has_value());
    CHECK(*rep.unweighted == 0);
    CHECK(rep.consistent);
  }

  SECTION("consistency across the gentle corpus") {
    for (const auto& c : fixtures::corpus(36)) {
      VarTable vars;
      CorollaryReport rep = specialize_corollaries(c.lgq, vars);
      if (is_gentle(c.lgq)) {
        REQUIRE(rep.unweighted.has_value());
        CHECK(rep.consistent);
      } else {
        CHECK_FALSE(rep.unweighted.has_value());
      }
    }
  }
}

TEST_CASE("verify bundle on the example quivers") {
  ParsedQuiver ex = fixtures::example33();
  VerifyReport rep = verify_quiver(validate(ex.quiver), ex.weights, 10);
  CHECK(rep.duality);
  CHECK(rep.determinant);
  CHECK(rep.oracle);
  CHECK(rep.all());
}
