// Embedded classification catalog: listing, conformance audit, invariants,
// dimension audits, and document round trips.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <random>

#include "tleib/catalog.hpp"
#include "tleib/constructions.hpp"
#include "tleib/invariants.hpp"

using namespace tleib;
using Catch::Matchers::ContainsSubstring;

namespace {

const ConformanceRow& find_row(const ConformanceReport& rep, const std::string& entry,
                               const std::string& family, const std::string& check) {
  for (const auto& row : rep.rows)
    if (row.entry_id == entry && row.family_id == family && row.check == check)
      return row;
  FAIL("no row " + entry + "/" + family + "/" + check);
  static ConformanceRow dummy;
  return dummy;
}

bool is_scalar_matrix(const Mat& m) {
  for (int r = 0; r < m.n(); ++r)
    for (int c = 0; c < m.n(); ++c) {
      if (r == c && !(m.at(r, c) == m.at(0, 0))) return false;
      if (r != c && !m.at(r, c).is_zero()) return false;
    }
  return !m.at(0, 0).is_zero();
}

// Random invertible rational matrix: unit lower-triangular times
// upper-triangular with nonzero diagonal.
Mat random_invertible(const Field& f, int n, std::mt19937& gen) {
  std::uniform_int_distribution<int> entry(-4, 4);
  Mat L = Mat::identity(f, n), U(f, n);
  for (int i = 0; i < n; ++i) {
    U.at(i, i) = rf(f, 1 + (std::abs(entry(gen)) % 3));
    for (int j = 0; j < i; ++j) L.at(i, j) = rf(f, entry(gen));
    for (int j = i + 1; j < n; ++j) U.at(i, j) = rf(f, entry(gen));
  }
  return L * U;
}

}  // namespace

TEST_CASE("catalog listing is deterministic and filterable") {
  REQUIRE(catalog_list().size() == 154);

  CatalogFilter two_dim_algebras;
  two_dim_algebras.kind = EntryKind::algebra;
  two_dim_algebras.dim = 2;
  REQUIRE(catalog_list(two_dim_algebras) ==
          std::vector<std::string>{"T2.L1", "T2.L2"});

  CatalogFilter two_dim_pairs;
  two_dim_pairs.kind = EntryKind::compatible_pair;
  two_dim_pairs.dim = 2;
  REQUIRE(catalog_list(two_dim_pairs) ==
          std::vector<std::string>{"CT2.L1", "CT2.L2a", "CT2.L3"});

  CatalogFilter tables;
  tables.kind = EntryKind::operator_table;
  REQUIRE(catalog_list(tables).size() == 132);

  CatalogFilter centroid_tables;
  centroid_tables.cls = OpClass::centroid;
  auto cents = catalog_list(centroid_tables);
  REQUIRE(cents.size() == 22);
  REQUIRE(std::count(cents.begin(), cents.end(), "T2.L1/centroid") == 1);

  // Re-listing gives the identical ordering.
  REQUIRE(catalog_list() == catalog_list());
}

TEST_CASE("catalog lookup validates ids") {
  REQUIRE_THROWS_AS(catalog_entry("nope"), UnknownEntry);

  const CatalogEntry& alg = catalog_entry("T3.L4a");
  REQUIRE(alg.kind == EntryKind::algebra);
  REQUIRE(alg.dimension == 3);
  REQUIRE(alg.doc.params() == std::vector<std::string>{"alpha"});
  REQUIRE(alg.source == "ternary classification, dim 3");

  const CatalogEntry& tab = catalog_entry("T2.L1/derivations");
  REQUIRE(tab.kind == EntryKind::operator_table);
  REQUIRE(tab.algebra_id == "T2.L1");
  REQUIRE(tab.cls == OpClass::derivation_weighted);
  REQUIRE(tab.families.size() == 1);
  REQUIRE(tab.families[0].id == "a");
}

TEST_CASE("family counts per operator class match the transcription") {
  std::map<OpClass, std::size_t> count;
  for (const auto& e : catalog_entries())
    if (e.kind == EntryKind::operator_table) count[e.cls] += e.families.size();
  REQUIRE(count[OpClass::derivation_weighted] == 22);
  REQUIRE(count[OpClass::averaging] == 68);
  REQUIRE(count[OpClass::rota_baxter] == 63);
  REQUIRE(count[OpClass::nijenhuis] == 53);
  REQUIRE(count[OpClass::reynolds] == 59);
  REQUIRE(count[OpClass::centroid] == 22);
}

TEST_CASE("algebra identity rows pass for every single-bracket entry") {
  CatalogFilter algebras;
  algebras.kind = EntryKind::algebra;
  ConformanceReport rep = catalog_check(catalog_list(algebras));
  REQUIRE(rep.rows.size() == 10);
  for (const auto& row : rep.rows) {
    INFO(row.entry_id);
    REQUIRE(row.check == "leibniz");
    REQUIRE(row.verdict == "PASS");
  }
}

TEST_CASE("pair identity and compatibility rows") {
  CatalogFilter pairs;
  pairs.kind = EntryKind::compatible_pair;
  ConformanceReport rep = catalog_check(catalog_list(pairs));
  REQUIRE(rep.rows.size() == 36);  // three rows per pair

  // CT3.L5's first bracket violates the defining identity: hand expansion at
  // (2,2,2,2,1) leaves -e1, since [e2,e2,[e2,e2,e1]] = [e2,e2,e1] = e1 has no
  // balancing term ([1,2,2], [2,1,2] and [3,2,1] are all absent).  The second
  // bracket is fine; compatibility inherits the defect.
  REQUIRE(find_row(rep, "CT3.L5", "", "leibniz-b1").verdict == "FAIL");
  REQUIRE_THAT(find_row(rep, "CT3.L5", "", "leibniz-b1").witness,
               ContainsSubstring("at (2,2,2,2,1)"));
  REQUIRE(find_row(rep, "CT3.L5", "", "leibniz-b2").verdict == "PASS");
  REQUIRE(find_row(rep, "CT3.L5", "", "compatibility").verdict == "FAIL");

  // Every other pair satisfies both identities and the compatibility law.
  for (const auto& row : rep.rows) {
    if (row.entry_id == "CT3.L5") continue;
    INFO(row.entry_id + " " + row.check);
    REQUIRE(row.verdict == "PASS");
  }
}

TEST_CASE("anchored operator-table rows") {
  SECTION("2-dim derivation tables pass at both weights") {
    ConformanceReport rep =
        catalog_check({"T2.L1/derivations", "T2.L2/derivations"});
    REQUIRE(rep.rows.size() == 4);
    for (const auto& row : rep.rows) {
      INFO(row.entry_id + " " + row.check);
      REQUIRE(row.verdict == "PASS");
    }
  }

  SECTION("square-zero single-corner families solve the weighted identity") {
    // [[0,0],[r21,0]] kills both basis images' e1-components, so every term
    // of the weighted identity vanishes for any r21 and any weight.
    ConformanceReport rep = catalog_check({"T2.L1/rota-baxter"});
    REQUIRE(find_row(rep, "T2.L1/rota-baxter", "c", "containment(weight=lambda)")
                .verdict == "PASS");
  }

  SECTION("rational-entry family encodes the exact solvability constraint") {
    // For [[r11,0],[r21,x]] on the cube-to-e2 bracket the identity reduces to
    // r11^3 = (3*r11^2 - r11^3) * x, i.e. x = r11/(3-r11): the recorded entry.
    ConformanceReport rep = catalog_check({"T2.L1/reynolds"});
    const ConformanceRow& row = find_row(rep, "T2.L1/reynolds", "a", "containment");
    REQUIRE(row.verdict == "PASS");
    REQUIRE_THAT(row.conditions, ContainsSubstring("r11 - 3 != 0"));
  }

  SECTION("table without families is skipped with a reason") {
    ConformanceReport rep = catalog_check({"CT3.L6a/rota-baxter"});
    REQUIRE(rep.rows.size() == 1);
    REQUIRE(rep.rows[0].verdict == "SKIPPED");
    REQUIRE(rep.rows[0].reason == "no families recorded for this entry");
    REQUIRE(rep.skipped == 1);
  }

  SECTION("recorded near-miss families are reported, not repaired") {
    // The 3-dim cube-style bracket sends everything into span(e3), so any
    // operator in its derivation table must keep e3 inside span(e3); the
    // recorded family frees the (1,3) entry, which the identity forces to 0.
    ConformanceReport rep = catalog_check({"T3.L1/derivations"});
    const ConformanceRow& w0 =
        find_row(rep, "T3.L1/derivations", "a", "containment(weight=0)");
    REQUIRE(w0.verdict == "FAIL");
    REQUIRE_THAT(w0.witness, ContainsSubstring("d13"));

    // Hand expansion of the cubic identity at (1,1,1) for the second family
    // of the same entry's square-preserving table leaves (1/2)*n21^3.
    ConformanceReport nrep = catalog_check({"T3.L1/nijenhuis"});
    const ConformanceRow& nb = find_row(nrep, "T3.L1/nijenhuis", "b", "containment");
    REQUIRE(nb.verdict == "FAIL");
    REQUIRE_THAT(nb.witness, ContainsSubstring("n21"));
  }
}

TEST_CASE("scalar operator families pass wherever they appear") {
  // A scalar matrix is a centroid element, an averaging operator and a
  // Nijenhuis operator on any algebra, so every scalar family row must pass.
  std::size_t checked = 0;
  for (const auto& e : catalog_entries()) {
    if (e.kind != EntryKind::operator_table) continue;
    if (e.cls != OpClass::centroid && e.cls != OpClass::averaging &&
        e.cls != OpClass::nijenhuis)
      continue;
    for (const auto& fam : e.families) {
      if (!is_scalar_matrix(fam.mats[0])) continue;
      ConformanceReport rep = catalog_check({e.id});
      const ConformanceRow& row = find_row(rep, e.id, fam.id, "containment");
      INFO(e.id + " family " + fam.id);
      REQUIRE(row.verdict == "PASS");
      ++checked;
    }
  }
  REQUIRE(checked >= 22);  // at least every centroid table ships a scalar family
}

TEST_CASE("full conformance audit shape") {
  ConformanceReport rep = catalog_check();
  // 10 algebra rows + 12 pairs x 3 rows + one row per family (two for the
  // weighted-derivation tables) + one skipped placeholder for the only empty
  // table: 10 + 36 + (287 - 22) + 2*22 + 1.
  REQUIRE(rep.rows.size() == 356);
  REQUIRE(rep.pass + rep.fail + rep.skipped == (int)rep.rows.size());
  REQUIRE(rep.skipped == 1);
  REQUIRE_FALSE(rep.all_pass());  // discrepant rows are reported, not hidden
  for (const auto& row : rep.rows) {
    if (row.verdict == "FAIL") {
      INFO(row.entry_id + " " + row.check);
      REQUIRE_FALSE(row.witness.empty());  // every FAIL carries a witness
    }
  }

  // Serialization is deterministic: two runs emit identical bytes.
  ConformanceReport again = catalog_check();
  REQUIRE(conformance_report_text(rep) == conformance_report_text(again));
  REQUIRE(emit_json(conformance_report_to_json(rep)) ==
          emit_json(conformance_report_to_json(again)));

  std::string text = conformance_report_text(rep);
  REQUIRE_THAT(text, ContainsSubstring("pass " + std::to_string(rep.pass) + ", fail " +
                                       std::to_string(rep.fail) + ", skipped 1\n"));

  Json j = conformance_report_to_json(rep);
  REQUIRE(j["rows"].size() == 356);
  REQUIRE(j["all_pass"] == false);
}

TEST_CASE("completeness option reports family coverage gaps") {
  CheckOptions opts;
  opts.completeness = true;
  opts.prime = 3;
  ConformanceReport rep = catalog_check({"T2.L1/centroid"}, opts);

  const ConformanceRow& cont = find_row(rep, "T2.L1/centroid", "a", "containment");
  REQUIRE(cont.verdict == "PASS");

  // The full centroid of the cube-to-e2 bracket is {[[a,0],[c,a]]}: dimension
  // 2, so 9 solutions mod 3, of which the recorded scalar family covers 3.
  const ConformanceRow& comp = find_row(rep, "T2.L1/centroid", "", "completeness(p=3)");
  REQUIRE(comp.verdict == "FAIL");
  REQUIRE_THAT(comp.witness, ContainsSubstring("missing:"));
  REQUIRE_THAT(comp.witness, ContainsSubstring("(6 of 9 solutions uncovered)"));
}

TEST_CASE("catalog documents round-trip byte-exactly") {
  std::size_t docs = 0;
  for (const auto& e : catalog_entries()) {
    if (e.kind == EntryKind::operator_table) {
      for (const auto& fam : e.families) {
        OperatorDocument d = family_document(e, fam);
        std::string text = emit_operator_document(d);
        OperatorDocument back = parse_operator_document(text);
        REQUIRE(emit_operator_document(back) == text);
        ++docs;
      }
    } else {
      std::string text = emit_algebra_document(e.doc);
      AlgebraDocument back = parse_algebra_document(text);
      REQUIRE(emit_algebra_document(back) == text);
      ++docs;
    }
  }
  REQUIRE(docs == 22 + 287);
}

TEST_CASE("family documents carry class, weight and parameters") {
  const CatalogEntry& der = catalog_entry("T2.L1/derivations");
  OperatorDocument d = family_document(der, der.families[0]);
  REQUIRE(d.name == "T2.L1/derivations/a");
  REQUIRE(d.cls == OpClass::derivation_weighted);
  REQUIRE(d.weight.str() == "lambda");
  REQUIRE(std::count(d.params.begin(), d.params.end(), "d21") == 1);
  REQUIRE(std::count(d.params.begin(), d.params.end(), "lambda") == 1);

  const CatalogEntry& cent = catalog_entry("T2.L1/centroid");
  OperatorDocument c = family_document(cent, cent.families[0]);
  REQUIRE(c.weight.str() == "0");
}

TEST_CASE("entry invariants at the generic point") {
  SECTION("zero algebra baseline") {
    TernaryStructure zero(2);
    InvariantRecord r = invariants(zero);
    REQUIRE(r.centroid_dim == 4);
    REQUIRE(r.derivation0_dim == 4);
    REQUIRE(r.left_annihilator_dim == 2);
    REQUIRE(r.middle_annihilator_dim == 2);
    REQUIRE(r.right_annihilator_dim == 2);
    REQUIRE(r.bracket_rank == 0);
  }

  SECTION("cube-to-e2 entry") {
    auto recs = entry_invariants(catalog_entry("T2.L1"));
    REQUIRE(recs.size() == 1);
    // Hand nullspaces: centroid {[[a,0],[c,a]]}, weight-0 derivations
    // {[[a,0],[c,3a]]}; every annihilator is span(e2); image is span(e2).
    REQUIRE(recs[0].centroid_dim == 2);
    REQUIRE(recs[0].derivation0_dim == 2);
    REQUIRE(recs[0].left_annihilator_dim == 1);
    REQUIRE(recs[0].middle_annihilator_dim == 1);
    REQUIRE(recs[0].right_annihilator_dim == 1);
    REQUIRE(recs[0].bracket_rank == 1);
  }

  SECTION("pairs yield one record per bracket") {
    auto recs = entry_invariants(catalog_entry("CT2.L1"));
    REQUIRE(recs.size() == 2);
    REQUIRE(recs[0].bracket_rank == 1);
    REQUIRE(recs[1].bracket_rank == 1);
  }

  SECTION("tables have no invariants") {
    REQUIRE_THROWS_AS(entry_invariants(catalog_entry("T2.L1/centroid")),
                      UnknownEntry);
  }

  SECTION("induced bracket of the nonabelian 2-dim Lie algebra") {
    BinaryStructure lie(2);
    lie.set_c(0, 1, 1, rf(Field(), 1));
    lie.set_c(1, 0, 1, rf(Field(), -1));
    TernaryStructure t = induced_ternary(lie);
    REQUIRE(invariants(t).bracket_rank == 1);
  }
}

TEST_CASE("invariants are basis-independent") {
  std::mt19937 gen(20260814);
  for (const char* id : {"T2.L1", "T2.L2", "T3.L4a"}) {
    const CatalogEntry& e = catalog_entry(id);
    TernaryStructure t =
        instantiate(e.doc.ternary, detail::generic_bind(e.doc.ternary, Rat(2)));
    InvariantRecord base = invariants(t);
    for (int trial = 0; trial < 3; ++trial) {
      Mat P = random_invertible(t.field(), t.dim(), gen);
      INFO(id << " trial " << trial);
      REQUIRE(invariants(change_basis(t, P)) == base);
    }
  }
}

TEST_CASE("distinguishability audit compares invariant records") {
  SECTION("2-dim entries are separated") {
    DistinguishabilityReport rep =
        distinguishability_audit(EntryKind::algebra, 2, Rat(2));
    REQUIRE(rep.entries == std::vector<std::string>{"T2.L1", "T2.L2"});
    REQUIRE(rep.coincidences.empty());  // weight-0 derivation dims 2 vs 1
  }

  SECTION("the recorded parameter collision shows up at alpha=1") {
    DistinguishabilityReport rep =
        distinguishability_audit(EntryKind::algebra, 3, Rat(1));
    bool found = false;
    for (const auto& [a, b] : rep.coincidences)
      found |= (a == "T3.L4a" && b == "T3.L7");
    REQUIRE(found);  // the two structures coincide literally at alpha=1
  }

  SECTION("audit covers every entry of the requested kind and dimension") {
    DistinguishabilityReport rep =
        distinguishability_audit(EntryKind::compatible_pair, 3, Rat(2));
    REQUIRE(rep.entries.size() == 9);
  }
}

TEST_CASE("derivation dimension audit against the recorded ranges") {
  SECTION("2-dim entries overshoot the claimed constant range") {
    DerivationDimensionAudit rep =
        derivation_dimension_audit(EntryKind::algebra, 2);
    REQUIRE(rep.dims.at("T2.L1") == 2);
    REQUIRE(rep.dims.at("T2.L2") == 1);
    REQUIRE(rep.claimed_lo == 1);
    REQUIRE(rep.claimed_hi == 1);
    REQUIRE(rep.observed_lo == 1);
    REQUIRE(rep.observed_hi == 2);
    REQUIRE_FALSE(rep.within_claimed);
    REQUIRE(rep.endpoints_attained);
  }

  SECTION("2-dim pairs have no joint weight-0 derivations") {
    DerivationDimensionAudit rep =
        derivation_dimension_audit(EntryKind::compatible_pair, 2);
    REQUIRE(rep.dims.size() == 3);
    for (const auto& [id, d] : rep.dims) {
      INFO(id);
      REQUIRE(d == 0);
    }
    REQUIRE(rep.within_claimed);
    REQUIRE(rep.endpoints_attained);
  }

  SECTION("3-dim audits aggregate consistently") {
    for (EntryKind kind : {EntryKind::algebra, EntryKind::compatible_pair}) {
      DerivationDimensionAudit rep = derivation_dimension_audit(kind, 3);
      REQUIRE(rep.dims.size() == (kind == EntryKind::algebra ? 8u : 9u));
      std::size_t lo = SIZE_MAX, hi = 0;
      bool inside = true;
      for (const auto& [id, d] : rep.dims) {
        lo = std::min(lo, d);
        hi = std::max(hi, d);
        inside = inside && d >= rep.claimed_lo && d <= rep.claimed_hi;
      }
      REQUIRE(rep.observed_lo == lo);
      REQUIRE(rep.observed_hi == hi);
      REQUIRE(rep.within_claimed == inside);
    }
  }

  SECTION("tables are rejected") {
    REQUIRE_THROWS_AS(derivation_dimension_audit(EntryKind::operator_table, 2),
                      UnknownEntry);
  }
}
