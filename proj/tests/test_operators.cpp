// Operator-class residual checks and exact linear solving for the linear
// classes (centroid, central/quasi/generalized derivations, weight-0
// derivations).
#include <catch2/catch_amalgamated.hpp>

#include "tleib/linear.hpp"

using namespace tleib;

namespace {

TernaryStructure t2l1() {  // [e1,e1,e1] = e2
  TernaryStructure t(2);
  t.set_chi(0, 0, 0, 1, rf(Field(), 1));
  return t;
}

TernaryStructure t2l2() {  // [e1,e2,e2] = e1, [e2,e2,e2] = e1
  TernaryStructure t(2);
  t.set_chi(0, 1, 1, 0, rf(Field(), 1));
  t.set_chi(1, 1, 1, 0, rf(Field(), 1));
  return t;
}

BinaryStructure lie2() {  // [e1,e2] = e2 = -[e2,e1]
  BinaryStructure b(2);
  b.set_c(0, 1, 1, rf(Field(), 1));
  b.set_c(1, 0, 1, rf(Field(), -1));
  return b;
}

BinaryStructure square2() {  // [e1,e1] = e2
  BinaryStructure b(2);
  b.set_c(0, 0, 1, rf(Field(), 1));
  return b;
}

// Single-entry matrix E(r,c): maps e_c to e_r (1-based labels, 0-based args).
Mat unit_mat(const Field& f, int n, int r, int c) {
  Mat m(f, n);
  m.at(r, c) = rf(f, 1);
  return m;
}

Mat diag2(const Field& f, const RatFunc& a, const RatFunc& b) {
  Mat m(f, 2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("operator tuples are validated before evaluation") {
  Field f;
  TernaryStructure t = t2l1();

  CHECK(tuple_arity(OpClass::generalized_derivation, 3) == 4);
  CHECK(tuple_arity(OpClass::generalized_derivation, 2) == 3);
  CHECK(tuple_arity(OpClass::quasiderivation, 3) == 2);
  CHECK(tuple_arity(OpClass::averaging_compatibility, 2) == 2);
  CHECK_THROWS_AS(tuple_arity(OpClass::averaging_compatibility, 3), WrongTupleArity);
  CHECK(tuple_arity(OpClass::centroid, 3) == 1);

  Mat I = Mat::identity(f, 2);
  CHECK_THROWS_AS(ternary_operator_residual(t, OpClass::centroid, {I, I}), WrongTupleArity);
  CHECK_THROWS_AS(ternary_operator_residual(t, OpClass::quasiderivation, {I}), WrongTupleArity);
  CHECK_THROWS_AS(ternary_operator_residual(t, OpClass::centroid, {Mat::identity(f, 3)}),
                  DimensionMismatch);
  CHECK_THROWS_AS(ternary_operator_residual(t, OpClass::centroid, {I}, rf(f, 1)), Error);
  CHECK_THROWS_AS(
      ternary_operator_residual(t, OpClass::averaging_compatibility, {I, I}), WrongTupleArity);

  CHECK(opclass_from_name("rota-baxter") == OpClass::rota_baxter);
  CHECK(std::string(opclass_name(OpClass::derivation_weighted)) == "derivation-weighted");
  CHECK_THROWS_AS(opclass_from_name("frobenius"), SchemaError);
}

TEST_CASE("scalar multiples and the shift operator lie in the centroid") {
  Field f;
  TernaryStructure t = t2l1();

  Mat cI = Mat::scalar(f, 2, RatFunc::variable(f, "c"));
  OperatorCheck scaled = verify_family(t, OpClass::centroid, {cI});
  CHECK(scaled.pass());
  CHECK(scaled.residual.side_conditions.empty());

  Mat e21 = unit_mat(f, 2, 1, 0);
  CHECK(verify_family(t, OpClass::centroid, {e21}).pass());

  // The centroid chain carries no "= 0" bound, unlike central derivations:
  // the identity operator is central in the centroid sense but is not a
  // central derivation on a nonzero bracket.
  Mat I = Mat::identity(f, 2);
  CHECK(verify_family(t, OpClass::centroid, {I}).pass());
  OperatorCheck central = verify_family(t, OpClass::central_derivation, {I});
  CHECK_FALSE(central.pass());
  bool saw_zero_bound = false;
  for (const auto& e : central.residual.entries)
    if (e.eq == "c0") saw_zero_bound = true;
  CHECK(saw_zero_bound);

  // E21 kills the bracket entirely, so it is even a central derivation.
  CHECK(verify_family(t, OpClass::central_derivation, {e21}).pass());
}

TEST_CASE("Reynolds residual pins the witness triple") {
  Field f;
  TernaryStructure t = t2l1();
  Mat I = Mat::identity(f, 2);

  // lhs = [x,y,z]; inner = 3[x,y,z] - [x,y,z]; residual = -[x,y,z].
  OperatorCheck c = verify_family(t, OpClass::reynolds, {I});
  REQUIRE(c.status == "FAIL");
  REQUIRE(c.residual.entries.size() == 1);
  const ResidualEntry& e = c.residual.entries[0];
  CHECK(e.args == std::vector<int>{1, 1, 1});
  CHECK(e.coord == 2);
  CHECK(e.value == rf(f, -1));

  // The zero operator is always Reynolds.
  CHECK(verify_family(t, OpClass::reynolds, {Mat(f, 2)}).pass());
}

TEST_CASE("scalar multiples of the identity are Nijenhuis") {
  Field f;
  RatFunc c = RatFunc::variable(f, "c");

  // Ternary: c^3 - c*(3c^2) + c^2*(3c) - c^3 = 0.
  CHECK(verify_family(t2l1(), OpClass::nijenhuis, {Mat::scalar(f, 2, c)}).pass());
  CHECK(verify_family(t2l2(), OpClass::nijenhuis, {Mat::scalar(f, 2, c)}).pass());

  // Binary: c^2 - c*(2c) + c^2 = 0.
  CHECK(verify_family(lie2(), OpClass::nijenhuis, {Mat::scalar(f, 2, c)}).pass());

  // A non-example: N = E12 on [e1,e1] = e2 (N e1 = 0, N e2 = e1).  The pair
  // (1,2) leaves N([e1, Ne2]) = N([e1,e1]) = e1 uncancelled:
  //   (1,2): 0 - N([0,e2] + [e1,e1]) + 0 = -e1
  //   (2,1): 0 - N([e1,e1] + [e2,0]) + 0 = -e1
  //   (2,2): [e1,e1] - N(0) + 0      = e2
  BinaryStructure sq = square2();
  Mat e12 = unit_mat(f, 2, 0, 1);
  OperatorCheck bad = verify_family(sq, OpClass::nijenhuis, {e12});
  REQUIRE(bad.status == "FAIL");
  REQUIRE(bad.residual.entries.size() == 3);
  CHECK(bad.residual.entries[0].args == std::vector<int>{1, 2});
  CHECK(bad.residual.entries[0].coord == 1);
  CHECK(bad.residual.entries[0].value == rf(f, -1));
  CHECK(bad.residual.entries[1].args == std::vector<int>{2, 1});
  CHECK(bad.residual.entries[1].value == rf(f, -1));
  CHECK(bad.residual.entries[2].args == std::vector<int>{2, 2});
  CHECK(bad.residual.entries[2].coord == 2);
  CHECK(bad.residual.entries[2].value == rf(f, 1));

  // E11 + E12 (both basis vectors map to e1) fails at every pair; the first
  // pair alone gives [e1,e1] - N(2e2) + N^2(e2) = e2 - 2e1 + e1.
  Mat n = unit_mat(f, 2, 0, 0) + e12;
  OperatorCheck worse = verify_family(sq, OpClass::nijenhuis, {n});
  REQUIRE(worse.status == "FAIL");
  REQUIRE(worse.residual.entries.size() == 7);
  CHECK(worse.residual.entries[0].args == std::vector<int>{1, 1});
  CHECK(worse.residual.entries[0].coord == 1);
  CHECK(worse.residual.entries[0].value == rf(f, -1));
  CHECK(worse.residual.entries[1].coord == 2);
  CHECK(worse.residual.entries[1].value == rf(f, 1));
}

TEST_CASE("derivation families on the cubing bracket") {
  Field f;
  TernaryStructure t = t2l1();
  RatFunc lam = RatFunc::variable(f, "lambda");
  RatFunc d = RatFunc::variable(f, "d11");

  // Strictly lower-triangular operators are derivations of every weight.
  Mat low(f, 2);
  low.at(1, 0) = RatFunc::variable(f, "d21");
  CHECK(verify_family(t, OpClass::derivation_weighted, {low}, lam).pass());
  CHECK(verify_family(t, OpClass::derivation_weighted, {low}, rf(f, 0)).pass());

  // diag(d11, 3*d11) is a weight-0 derivation: D[e1,e1,e1] = 3*d11*e2 matches
  // the three single-slot terms.  At nonzero weight the quadratic and cubic
  // corrections spoil it.
  Mat dg = diag2(f, d, rf(f, 3) * d);
  CHECK(verify_family(t, OpClass::derivation_weighted, {dg}, RatFunc(f)).pass());

  OperatorCheck weighted = verify_family(t, OpClass::derivation_weighted, {dg}, lam);
  REQUIRE(weighted.status == "FAIL");
  REQUIRE(weighted.residual.entries.size() == 1);
  const ResidualEntry& e = weighted.residual.entries[0];
  CHECK(e.args == std::vector<int>{1, 1, 1});
  CHECK(e.coord == 2);
  CHECK(e.value == rf(f, -3) * lam * d * d - lam * lam * d * d * d);

  // Central-derivation chain labels: diag(d11, d22) produces the zero bounds
  // c0..c3 and all pairwise differences at the only interesting triple.
  Mat dg2 = diag2(f, d, RatFunc::variable(f, "d22"));
  OperatorCheck central = verify_family(t, OpClass::central_derivation, {dg2});
  REQUIRE(central.status == "FAIL");
  bool saw_c0 = false, saw_c1 = false, saw_diff = false;
  for (const auto& en : central.residual.entries) {
    if (en.eq == "c0") {
      saw_c0 = true;
      CHECK(en.value == RatFunc::variable(f, "d22"));
    }
    if (en.eq == "c1") {
      saw_c1 = true;
      CHECK(en.value == d);
    }
    if (en.eq == "c0-c1") {
      saw_diff = true;
      CHECK(en.value == RatFunc::variable(f, "d22") - d);
    }
  }
  CHECK(saw_c0);
  CHECK(saw_c1);
  CHECK(saw_diff);
}

TEST_CASE("identity operator is Rota-Baxter exactly at the exceptional weights") {
  Field f;
  TernaryStructure t = t2l1();
  Mat I = Mat::identity(f, 2);

  // Ternary residual for R = id: (1 - (3 + 3w + w^2)) [x,y,z].
  RatFunc w = RatFunc::variable(f, "w");
  OperatorCheck sym = verify_family(t, OpClass::rota_baxter, {I}, w);
  REQUIRE(sym.status == "FAIL");
  REQUIRE(sym.residual.entries.size() == 1);
  CHECK(sym.residual.entries[0].value == rf(f, -2) - rf(f, 3) * w - w * w);

  CHECK_FALSE(verify_family(t, OpClass::rota_baxter, {I}, rf(f, 0)).pass());
  CHECK(verify_family(t, OpClass::rota_baxter, {I}, rf(f, -1)).pass());
  CHECK(verify_family(t, OpClass::rota_baxter, {I}, rf(f, -2)).pass());

  // Binary residual for R = id: (1 - (2 + w)) [x,y]; only weight -1 works.
  CHECK_FALSE(verify_family(lie2(), OpClass::rota_baxter, {I}, rf(f, 0)).pass());
  CHECK(verify_family(lie2(), OpClass::rota_baxter, {I}, rf(f, -1)).pass());

  // E21 annihilates the cubing bracket and is Rota-Baxter of weight 0.
  CHECK(verify_family(t, OpClass::rota_baxter, {unit_mat(f, 2, 1, 0)}, rf(f, 0)).pass());
}

TEST_CASE("generalized and quasi-derivation tuples") {
  Field f;
  TernaryStructure t = t2l1();
  Mat I = Mat::identity(f, 2);
  RatFunc a = RatFunc::variable(f, "a");
  RatFunc b = RatFunc::variable(f, "b");
  RatFunc c = RatFunc::variable(f, "c");

  // (aI, bI, cI; (a+b+c)I) is a generalized derivation of any bracket.
  std::vector<Mat> tup{Mat::scalar(f, 2, a), Mat::scalar(f, 2, b), Mat::scalar(f, 2, c),
                       Mat::scalar(f, 2, a + b + c)};
  CHECK(verify_family(t, OpClass::generalized_derivation, tup).pass());
  CHECK(verify_family(t2l2(), OpClass::generalized_derivation, tup).pass());

  // Quasi-derivation (D, D') with D = id needs D' = 3*id on a ternary bracket.
  CHECK(verify_family(t, OpClass::quasiderivation, {I, Mat::scalar(f, 2, rf(f, 3))}).pass());
  OperatorCheck off = verify_family(t, OpClass::quasiderivation, {I, I});
  REQUIRE(off.status == "FAIL");
  REQUIRE(off.residual.entries.size() == 1);
  CHECK(off.residual.entries[0].value == rf(f, -2));

  // Binary generalized tuple has three members.
  CHECK(verify_family(lie2(), OpClass::generalized_derivation,
                      {Mat::scalar(f, 2, a), Mat::scalar(f, 2, b), Mat::scalar(f, 2, a + b)})
            .pass());
}

TEST_CASE("averaging chains compare all four placements") {
  Field f;
  TernaryStructure t = t2l1();

  CHECK(verify_family(t, OpClass::averaging, {Mat::identity(f, 2)}).pass());
  CHECK(verify_family(t, OpClass::averaging,
                      {Mat::scalar(f, 2, RatFunc::variable(f, "b"))})
            .pass());

  // diag(1,0) breaks the chain: the fully-decorated member keeps [e1,e1,e1]
  // while the three averaged members send it to 0.
  Mat p = diag2(f, rf(f, 1), rf(f, 0));
  OperatorCheck broken = verify_family(t, OpClass::averaging, {p});
  REQUIRE(broken.status == "FAIL");
  REQUIRE(broken.residual.entries.size() == 3);
  for (const auto& e : broken.residual.entries) {
    CHECK(e.args == std::vector<int>{1, 1, 1});
    CHECK(e.coord == 2);
    CHECK(e.value == rf(f, -1));
  }
  CHECK(broken.residual.entries[0].eq == "c0-c3");
  CHECK(broken.residual.entries[1].eq == "c1-c3");
  CHECK(broken.residual.entries[2].eq == "c2-c3");

  // E21 is averaging on the cubing bracket: every chain member vanishes.
  CHECK(verify_family(t, OpClass::averaging, {unit_mat(f, 2, 1, 0)}).pass());
}

TEST_CASE("averaging compatibility couples two binary operators") {
  Field f;
  Mat I = Mat::identity(f, 2);

  CHECK(verify_family(lie2(), OpClass::averaging_compatibility, {I, I}).pass());

  // beta1 = beta2 = E12 on [e1,e1] = e2: the operator side produces
  // 2*E12(e2) = 2e1 while the mixed brackets vanish, and [2e1, e1] = 2e2.
  Mat e12 = unit_mat(f, 2, 0, 1);
  OperatorCheck c = verify_family(square2(), OpClass::averaging_compatibility, {e12, e12});
  REQUIRE(c.status == "FAIL");
  REQUIRE(c.residual.entries.size() == 1);
  const ResidualEntry& e = c.residual.entries[0];
  CHECK(e.args == std::vector<int>{2, 1, 1});
  CHECK(e.coord == 2);
  CHECK(e.value == rf(f, 2));
}

TEST_CASE("linear systems solve the linear operator classes exactly") {
  Field f;
  TernaryStructure t = t2l1();

  SECTION("centroid of the cubing bracket is span{E21, I}") {
    LinearSystem sys = linear_system(t, OpClass::centroid);
    CHECK(sys.unknowns == 4);
    CHECK(sys.tuple_size == 1);
    NullspaceResult ns = nullspace(sys);
    CHECK(ns.rank == 2);
    REQUIRE(ns.basis.size() == 2);
    std::vector<std::vector<Mat>> sols = reshape_solutions(sys, ns, f);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0][0] == unit_mat(f, 2, 1, 0));
    CHECK(sols[1][0] == Mat::identity(f, 2));
    for (const auto& tuple : sols) CHECK(verify_family(t, OpClass::centroid, tuple).pass());
  }

  SECTION("central derivations shrink to span{E21}") {
    LinearSystem sys = linear_system(t, OpClass::central_derivation);
    NullspaceResult ns = nullspace(sys);
    CHECK(ns.rank == 3);
    REQUIRE(ns.basis.size() == 1);
    std::vector<std::vector<Mat>> sols = reshape_solutions(sys, ns, f);
    CHECK(sols[0][0] == unit_mat(f, 2, 1, 0));
    CHECK(verify_family(t, OpClass::central_derivation, sols[0]).pass());
  }

  SECTION("weight-0 derivations have dimension 2 with d12 = 0, d22 = 3 d11") {
    LinearSystem sys = linear_system(t, OpClass::derivation_weighted, RatFunc(f));
    NullspaceResult ns = nullspace(sys);
    CHECK(ns.rank == 2);
    REQUIRE(ns.basis.size() == 2);
    std::vector<std::vector<Mat>> sols = reshape_solutions(sys, ns, f);
    CHECK(sols[0][0] == unit_mat(f, 2, 1, 0));
    // Echelon normalization pins the free entry d22 to 1, giving diag(1/3, 1).
    CHECK(sols[1][0] == diag2(f, rf(f, 1, 3), rf(f, 1)));
    for (const auto& tuple : sols)
      CHECK(verify_family(t, OpClass::derivation_weighted, tuple, RatFunc(f)).pass());
  }

  SECTION("quasi-derivation pairs of the cubing bracket") {
    LinearSystem sys = linear_system(t, OpClass::quasiderivation);
    CHECK(sys.unknowns == 8);
    CHECK(sys.tuple_size == 2);
    NullspaceResult ns = nullspace(sys);
    // Constraints: d12 = 0, d'12 = 0, d'22 = 3 d11; five free entries remain.
    CHECK(ns.rank == 3);
    CHECK(ns.basis.size() == 5);
    std::vector<std::vector<Mat>> sols = reshape_solutions(sys, ns, f);
    for (const auto& tuple : sols)
      CHECK(verify_family(t, OpClass::quasiderivation, tuple).pass());
  }

  SECTION("nonlinear classes refuse symbolic solving") {
    CHECK_THROWS_AS(linear_system(t, OpClass::averaging), NonlinearClass);
    CHECK_THROWS_AS(linear_system(t, OpClass::rota_baxter), NonlinearClass);
    CHECK_THROWS_AS(linear_system(t, OpClass::nijenhuis), NonlinearClass);
    CHECK_THROWS_AS(linear_system(t, OpClass::reynolds), NonlinearClass);
    CHECK_THROWS_AS(linear_system(t, OpClass::derivation_weighted, rf(f, 1)), NonlinearClass);
    CHECK_THROWS_AS(linear_system(lie2(), OpClass::averaging), NonlinearClass);
  }

  SECTION("parametric structures are rejected") {
    TernaryStructure p(2, Field(), {"alpha"});
    p.set_chi(0, 0, 0, 1, RatFunc::variable(Field(), "alpha"));
    CHECK_THROWS_AS(linear_system(p, OpClass::centroid), ParametricAlgebra);
  }

  SECTION("binary centroid of the nonabelian Lie algebra is the scalars") {
    LinearSystem sys = linear_system(lie2(), OpClass::centroid);
    NullspaceResult ns = nullspace(sys);
    CHECK(ns.rank == 3);
    REQUIRE(ns.basis.size() == 1);
    std::vector<std::vector<Mat>> sols = reshape_solutions(sys, ns, f);
    CHECK(sols[0][0] == Mat::identity(f, 2));
  }

  SECTION("the zero bracket imposes no constraints") {
    TernaryStructure zero(2);
    LinearSystem sys = linear_system(zero, OpClass::centroid);
    NullspaceResult ns = nullspace(sys);
    CHECK(ns.rank == 0);
    CHECK(ns.basis.size() == 4);
  }
}

TEST_CASE("pair systems intersect the solution spaces") {
  Field f;
  TernaryStructure a = t2l1(), b = t2l2();

  // Stacking a system with itself changes nothing.
  NullspaceResult same = nullspace(linear_system(a, a, OpClass::centroid));
  CHECK(same.basis.size() == 2);

  // The centroid of [e1,e2,e2] = [e2,e2,e2] = e1 is just the scalars, so the
  // joint centroid with the cubing bracket drops from span{E21, I} to span{I}.
  NullspaceResult own = nullspace(linear_system(b, OpClass::centroid));
  CHECK(own.basis.size() == 1);

  LinearSystem joint = linear_system(a, b, OpClass::centroid);
  NullspaceResult ns = nullspace(joint);
  REQUIRE(ns.basis.size() == 1);
  std::vector<std::vector<Mat>> sols = reshape_solutions(joint, ns, f);
  CHECK(sols[0][0] == Mat::identity(f, 2));
  CHECK(verify_family(a, OpClass::centroid, sols[0]).pass());
  CHECK(verify_family(b, OpClass::centroid, sols[0]).pass());
}

TEST_CASE("matrix rank over the exact field") {
  Field f;
  FieldElement one(f, Rat(1)), two(f, Rat(2)), four(f, Rat(4));
  std::vector<std::vector<FieldElement>> m{{one, two}, {two, four}};
  CHECK(matrix_rank(m) == 1);
  std::vector<std::vector<FieldElement>> id{{one, FieldElement(f)}, {FieldElement(f), one}};
  CHECK(matrix_rank(id) == 2);
  CHECK(matrix_rank({}) == 0);
}
