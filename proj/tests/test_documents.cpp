// JSON document layer: schema validation, canonical emission, byte-exact
// round trips, and report serialization.
#include <catch2/catch_amalgamated.hpp>

#include "tleib/document.hpp"
#include "tleib/identities.hpp"
#include "tleib/linear.hpp"

using namespace tleib;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string one_triple_doc() {
  return R"json({
  "arity": 3,
  "brackets": [{"args": [1, 1, 1], "out": {"2": "1"}}],
  "dim": 2,
  "name": "cube-to-e2",
  "params": [],
  "roots": []
})json";
}

TernaryStructure cube2() {  // [e1,e1,e1] = e2
  TernaryStructure t(2);
  t.set_chi(0, 0, 0, 1, rf(Field(), 1));
  return t;
}

BinaryStructure lie2() {  // [e1,e2] = e2 = -[e2,e1]
  BinaryStructure b(2);
  b.set_c(0, 1, 1, rf(Field(), 1));
  b.set_c(1, 0, 1, rf(Field(), -1));
  return b;
}

}  // namespace

TEST_CASE("algebra documents parse into exact structures") {
  TernaryStructure t = parse_ternary_algebra(one_triple_doc());
  CHECK(t.dim() == 2);
  CHECK(t == cube2());
  CHECK(ternary_leibniz_residual(t).identically_zero);

  SECTION("parametric coefficients use the declared parameters") {
    AlgebraDocument d = parse_algebra_document(std::string(R"json({
      "arity": 3, "dim": 3, "name": "alpha-family", "params": ["alpha"], "roots": [],
      "brackets": [
        {"args": [2, 1, 1], "out": {"2": "1"}},
        {"args": [2, 1, 3], "out": {"2": "alpha"}},
        {"args": [2, 3, 1], "out": {"2": "1"}},
        {"args": [2, 3, 3], "out": {"2": "1"}}
      ]
    })json"));
    CHECK(d.arity == 3);
    CHECK(d.ternary.parametric());
    CHECK(d.ternary.chi(1, 0, 2, 1) == RatFunc::variable(d.field(), "alpha"));
    CHECK(ternary_leibniz_residual(d.ternary).identically_zero);
  }

  SECTION("binary documents build binary structures") {
    AlgebraDocument d = parse_algebra_document(std::string(R"json({
      "arity": 2, "dim": 2, "name": "nonabelian-lie", "params": [], "roots": [],
      "brackets": [
        {"args": [1, 2], "out": {"2": "1"}},
        {"args": [2, 1], "out": {"2": "-1"}}
      ]
    })json"));
    CHECK(d.arity == 2);
    CHECK(d.binary == lie2());
  }

  SECTION("root coefficients require declared roots") {
    AlgebraDocument d = parse_algebra_document(std::string(R"json({
      "arity": 2, "dim": 1, "name": "scaled", "params": [], "roots": [-1, 2],
      "brackets": [{"args": [1, 1], "out": {"1": "i*sqrt(2)"}}]
    })json"));
    Field f = d.field();
    CHECK(d.binary.c(0, 0, 0) ==
          RatFunc::constant(f, FieldElement::root(f, 0) * FieldElement::root(f, 1)));
  }

  SECTION("later duplicate bracket assignments overwrite earlier ones") {
    TernaryStructure t = parse_ternary_algebra(std::string(R"json({
      "arity": 3, "dim": 3, "name": "dup", "params": [], "roots": [],
      "brackets": [
        {"args": [3, 1, 3], "out": {"2": "1/2"}},
        {"args": [3, 1, 3], "out": {"2": "1"}}
      ]
    })json"));
    CHECK(t.chi(2, 0, 2, 1) == rf(t.field(), 1));
  }
}

TEST_CASE("schema violations are rejected with paths") {
  auto patch = [](const std::string& from, const std::string& to) {
    std::string s = one_triple_doc();
    s.replace(s.find(from), from.size(), to);
    return s;
  };

  SECTION("bracket argument 0: indices are 1-based") {
    CHECK_THROWS_MATCHES(parse_algebra_document(patch("[1, 1, 1]", "[0, 1, 1]")), SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("1-based") &&
                                                         ContainsSubstring("/brackets/0/args/0")));
  }
  SECTION("undeclared root in a coefficient") {
    std::string s = patch("\"1\"", "\"sqrt(3)\"");
    s.replace(s.find("\"roots\": []"), 12, "\"roots\": [2]");
    CHECK_THROWS_AS(parse_algebra_document(s), UndeclaredRoot);
  }
  SECTION("undeclared parameter in a coefficient") {
    CHECK_THROWS_AS(parse_algebra_document(patch("\"1\"", "\"beta\"")), UndeclaredParameter);
  }
  SECTION("unknown fields are rejected") {
    CHECK_THROWS_MATCHES(parse_algebra_document(patch("\"dim\": 2", "\"dim\": 2, \"extra\": 1")),
                         SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("/extra")));
  }
  SECTION("missing required field") {
    CHECK_THROWS_MATCHES(parse_algebra_document(patch("\"dim\": 2,", "")), SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("/dim")));
  }
  SECTION("arity outside 2..3") {
    CHECK_THROWS_AS(parse_algebra_document(patch("\"arity\": 3", "\"arity\": 4")), SchemaError);
  }
  SECTION("output index beyond the dimension") {
    CHECK_THROWS_MATCHES(parse_algebra_document(patch("{\"2\": \"1\"}", "{\"3\": \"1\"}")),
                         SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("out of range")));
  }
  SECTION("output index 0") {
    CHECK_THROWS_MATCHES(parse_algebra_document(patch("{\"2\": \"1\"}", "{\"0\": \"1\"}")),
                         SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("1-based")));
  }
  SECTION("wrong argument count for the arity") {
    CHECK_THROWS_MATCHES(parse_algebra_document(patch("[1, 1, 1]", "[1, 1]")), SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("expected 3")));
  }
  SECTION("reserved and duplicate parameter names") {
    CHECK_THROWS_AS(parse_algebra_document(patch("\"params\": []", "\"params\": [\"i\"]")),
                    SchemaError);
    CHECK_THROWS_AS(
        parse_algebra_document(patch("\"params\": []", "\"params\": [\"a\", \"a\"]")),
        SchemaError);
    CHECK_THROWS_AS(parse_algebra_document(patch("\"params\": []", "\"params\": [\"2x\"]")),
                    SchemaError);
  }
  SECTION("malformed JSON") {
    CHECK_THROWS_MATCHES(parse_algebra_document(std::string("{")), SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("invalid JSON")));
  }
  SECTION("dependent field roots") {
    CHECK_THROWS_MATCHES(parse_algebra_document(patch("\"roots\": []", "\"roots\": [2, 3, 6]")),
                         SchemaError,
                         Catch::Matchers::MessageMatches(ContainsSubstring("/roots")));
  }
}

TEST_CASE("algebra documents round-trip byte-exactly") {
  SECTION("single ternary structure") {
    AlgebraDocument d = make_document("cube-to-e2", cube2());
    std::string text = emit_algebra_document(d);
    AlgebraDocument back = parse_algebra_document(text);
    CHECK(back.name == d.name);
    CHECK(back.ternary == d.ternary);
    CHECK(emit_algebra_document(back) == text);
  }

  SECTION("parametric structure over an extended field") {
    Field f = make_field({-1, 2, 7});
    TernaryStructure t(3, f, {"alpha"});
    t.set_chi(1, 0, 0, 1, rf(f, 1));
    t.set_chi(1, 0, 2, 1, RatFunc::variable(f, "alpha"));
    t.set_chi(2, 2, 2, 0, RatFunc::constant(f, FieldElement::root(f, 0)) *
                              RatFunc::variable(f, "alpha"));
    std::string text = emit_algebra_document(make_document("alpha-family", t));
    AlgebraDocument back = parse_algebra_document(text);
    CHECK(back.ternary == t);
    CHECK(emit_algebra_document(back) == text);
  }

  SECTION("compatible pairs carry a second bracket list") {
    BinaryStructure b2(2);
    b2.set_c(1, 0, 1, rf(Field(), 1));
    AlgebraDocument d = make_document("pair", lie2(), b2);
    std::string text = emit_algebra_document(d);
    AlgebraDocument back = parse_algebra_document(text);
    CHECK(back.pair);
    CHECK(back.binary == d.binary);
    CHECK(back.binary2 == d.binary2);
    CHECK(emit_algebra_document(back) == text);
    CHECK_THROWS_AS(parse_binary_algebra(text), SchemaError);
  }

  SECTION("pair constructors demand one common dimension and field") {
    BinaryStructure b3(3);
    CHECK_THROWS_AS(make_document("bad", lie2(), b3), SchemaError);
  }

  SECTION("emission is canonical: sorted args and sorted keys") {
    std::string text = emit_algebra_document(make_document("cube-to-e2", cube2()));
    CHECK(text.find("\"arity\"") < text.find("\"brackets\""));
    CHECK(text.find("\"brackets\"") < text.find("\"dim\""));
    CHECK(text.find("\"dim\"") < text.find("\"name\""));
    CHECK(text.find("\"name\"") < text.find("\"params\""));
    CHECK(text.find("\"params\"") < text.find("\"roots\""));
    CHECK(text.back() == '\n');
  }
}

TEST_CASE("operator documents parse and round-trip") {
  std::string text = R"json({
  "class": "rota-baxter",
  "matrices": [[["r11", "0"], ["i*sqrt(2)", "lambda"]]],
  "name": "family-b",
  "params": ["lambda", "r11"],
  "roots": [-1, 2],
  "variant": "paper",
  "weight": "lambda"
})json";
  OperatorDocument d = parse_operator_document(text);
  CHECK(d.cls == OpClass::rota_baxter);
  CHECK(d.dim() == 2);
  CHECK(d.weight == RatFunc::variable(d.field, "lambda"));
  CHECK(d.matrices[0].at(1, 1) == RatFunc::variable(d.field, "lambda"));
  CHECK(d.matrices[0].at(1, 0) ==
        RatFunc::constant(d.field, FieldElement::root(d.field, 0) *
                                       FieldElement::root(d.field, 1)));
  std::string emitted = emit_operator_document(d);
  CHECK(emit_operator_document(parse_operator_document(emitted)) == emitted);

  SECTION("roots are optional on input, always emitted") {
    OperatorDocument c = parse_operator_document(std::string(
        R"json({"class": "centroid", "matrices": [[["c11", "0"], ["0", "c11"]]],
            "name": "scalars", "params": ["c11"], "variant": "paper", "weight": "0"})json"));
    CHECK(c.field.roots().empty());
    CHECK(emit_operator_document(c).find("\"roots\": []") != std::string::npos);
  }
  SECTION("weights are rejected on weightless classes") {
    CHECK_THROWS_MATCHES(
        parse_operator_document(std::string(
            R"json({"class": "centroid", "matrices": [[["1"]]], "name": "x",
                "params": [], "variant": "paper", "weight": "1"})json")),
        SchemaError,
        Catch::Matchers::MessageMatches(ContainsSubstring("does not take a weight")));
  }
  SECTION("unknown class and variant") {
    CHECK_THROWS_AS(parse_operator_document(std::string(
                        R"json({"class": "frobenius", "matrices": [[["1"]]], "name": "x",
                            "params": [], "variant": "paper", "weight": "0"})json")),
                    SchemaError);
    CHECK_THROWS_AS(parse_operator_document(std::string(
                        R"json({"class": "centroid", "matrices": [[["1"]]], "name": "x",
                            "params": [], "variant": "classical", "weight": "0"})json")),
                    SchemaError);
  }
  SECTION("ragged matrices are rejected") {
    CHECK_THROWS_MATCHES(
        parse_operator_document(std::string(
            R"json({"class": "centroid", "matrices": [[["1", "0"], ["0"]]], "name": "x",
                "params": [], "variant": "paper", "weight": "0"})json")),
        SchemaError, Catch::Matchers::MessageMatches(ContainsSubstring("/matrices/0/1")));
    CHECK_THROWS_AS(parse_operator_document(std::string(
                        R"json({"class": "centroid", "matrices": [], "name": "x",
                            "params": [], "variant": "paper", "weight": "0"})json")),
                    SchemaError);
  }
}

TEST_CASE("residual and lift reports serialize to stable JSON and text") {
  SECTION("empty report") {
    ResidualReport r;
    Json j = residual_report_to_json(r);
    CHECK(j["identically_zero"] == true);
    CHECK(j["entries"].is_array());
    CHECK(j["entries"].empty());
    std::string s = emit_json(j);
    CHECK(s.find("\"identically_zero\": true") != std::string::npos);
    CHECK(residual_report_text(r) == "residual: identically zero\n");
  }

  SECTION("failing report carries witness tuple and value string") {
    Field f;
    TernaryStructure t(1);
    t.set_chi(0, 0, 0, 0, rf(f, 1));  // [e,e,e] = e is not an allowed bracket
    ResidualReport r = ternary_leibniz_residual(t);
    REQUIRE_FALSE(r.identically_zero);
    Json j = residual_report_to_json(r);
    CHECK(j["entries"][0]["args"] == Json::array({1, 1, 1, 1, 1}));
    CHECK(j["entries"][0]["value"] == "-2");
    std::string text = residual_report_text(r);
    CHECK_THAT(text, ContainsSubstring("(1,1,1,1,1)"));
    CHECK_THAT(text, ContainsSubstring("-2"));
  }

  SECTION("lift reports embed both residuals") {
    BinaryStructure b = lie2();
    Field f;
    LiftReport rep = lift_check(b, OpClass::centroid, {Mat::identity(f, 2)}, rf(f, 0));
    Json j = lift_report_to_json(rep);
    CHECK(j["status"] == "PASS");
    CHECK(j["precondition"]["identically_zero"] == true);
    CHECK(j["conclusion"]["identically_zero"] == true);
    CHECK_THAT(lift_report_text(rep), ContainsSubstring("lift: PASS"));
  }
}

TEST_CASE("enumeration and completeness reports carry integer-matrix witnesses") {
  TernaryStructure t = cube2();
  FpSolutionSet sols = enumerate_over_fp(t, OpClass::centroid, 3);
  REQUIRE(sols.total() == 9);
  Json j = fp_solutions_to_json(sols);
  CHECK(j["prime"] == 3);
  CHECK(j["total"] == 9);
  REQUIRE(j["solutions"].contains("0"));
  CHECK(j["solutions"]["0"].size() == 9);
  // every witness is a tuple of integer matrices
  bool saw_e21 = false;
  for (const auto& tup : j["solutions"]["0"]) {
    REQUIRE(tup.size() == 1);
    REQUIRE(tup[0].size() == 2);
    REQUIRE(tup[0][0].size() == 2);
    CHECK(tup[0][0][0].is_number_integer());
    if (tup[0] == Json::parse("[[0,0],[1,0]]")) saw_e21 = true;
  }
  CHECK(saw_e21);

  SECTION("completeness report against the scalar family") {
    Field f;
    OperatorFamily scalars{"scalars", {Mat::scalar(f, 2, RatFunc::variable(f, "c11"))}};
    CompletenessReport rep = completeness_report(t, OpClass::centroid, 3, {scalars});
    CHECK(rep.contained);
    CHECK_FALSE(rep.complete);
    CHECK(rep.family_count == 3);
    CHECK(rep.all_count == 9);
    Json cj = completeness_report_to_json(rep);
    CHECK(cj["contained"] == true);
    CHECK(cj["complete"] == false);
    bool missing_e21 = false;
    for (const auto& w : cj["missing"])
      if (w["matrices"] == Json::parse("[[[0,0],[1,0]]]")) missing_e21 = true;
    CHECK(missing_e21);
    CHECK_THAT(completeness_report_text(rep), ContainsSubstring("complete: no"));
  }

  SECTION("weighted witnesses keep their weight residue") {
    Json w = detail::witness_to_json("w=2 [[1,0],[0,1]] | [[0,2],[1,0]]");
    CHECK(w["weight"] == 2);
    CHECK(w["matrices"] == Json::parse("[[[1,0],[0,1]],[[0,2],[1,0]]]"));
    CHECK(w["text"] == "w=2 [[1,0],[0,1]] | [[0,2],[1,0]]");
  }
}
