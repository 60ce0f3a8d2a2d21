#include <fstream>
#include <sstream>

#include "support.hpp"

#include "hopfxyz/errors.hpp"
#include "hopfxyz/io.hpp"

using namespace hopf;
using namespace hopf::testing;

namespace {

std::string data(const std::string& name) {
  std::ifstream in(std::string(HOPFXYZ_TEST_DATA) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kTiny = R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 0, "1"]], "unit": ["1"]})";

// kTiny with one key replaced or added
std::string tiny_with(const std::string& key, const std::string& value) {
  std::string s = kTiny;
  s.insert(s.size() - 1, ", \"" + key + "\": " + value);
  return s;
}

}  // namespace

TEST(HopfFile, ParsesAlgebraOnlyDocument) {
  const HopfFile f = HopfFile::parse(kTiny);
  EXPECT_FALSE(f.is_hopf());
  EXPECT_EQ(f.algebra.dim, 1u);
  EXPECT_EQ(f.algebra.labels, std::vector<std::string>{"1"});
  EXPECT_THROW(f.hopf(), InvalidInput);
}

TEST(HopfFile, CatalogRoundTripIsExact) {
  for (const CatalogSpec& spec : small_catalog()) {
    const HopfAlgebraData h = catalog_hopf(spec);
    const std::string text = HopfFile::from(h).dump();
    const HopfFile back = HopfFile::parse(text);
    ASSERT_TRUE(back.is_hopf());
    EXPECT_TRUE(same_structure(back.hopf(), h)) << spec.to_string();
    EXPECT_EQ(back.algebra.labels, h.labels());
    EXPECT_EQ(back.dump(), text) << spec.to_string();
  }
}

TEST(HopfFile, GoldenFiles) {
  EXPECT_EQ(HopfFile::from(cyclic_group_algebra(2)).dump(), data("cyclic2.json"));
  EXPECT_EQ(HopfFile::from(sweedler4()).dump(), data("sweedler4.json"));
  EXPECT_EQ(HopfFile::from(taft(2, 5)).dump(), data("taft2_5.json"));
}

TEST(HopfFile, GoldenCyclic2Text) {
  const std::string text = data("cyclic2.json");
  EXPECT_NE(text.find("\"field\": \"Q\""), std::string::npos);
  EXPECT_NE(text.find("[1,1,0,\"1\"]"), std::string::npos);  // g g = 1
  EXPECT_NE(text.find("\"counit\": [\"1\",\"1\"]"), std::string::npos);
}

TEST(HopfFile, PrimeFieldAndFractions) {
  const HopfFile f = HopfFile::parse(
      R"({"field": {"p": 7}, "dim": 1, "basis": ["1"], "mult": [[0, 0, 0, "8"]], "unit": ["1/8"]})");
  EXPECT_EQ(f.algebra.field, FieldSpec::prime(7));
  EXPECT_EQ(f.algebra.unit[0], Scalar::one(FieldSpec::prime(7)));
  EXPECT_EQ(f.algebra.mult.at(0, 0).front().coef, Scalar::one(FieldSpec::prime(7)));

  const HopfFile g = HopfFile::parse(
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 0, "-3/6"]], "unit": ["-2"]})");
  EXPECT_EQ(g.algebra.mult.at(0, 0).front().coef.to_string(), "-1/2");
}

TEST(HopfFile, RepeatedEntriesAccumulate) {
  const HopfFile f = HopfFile::parse(
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 0, "1/2"], [0, 0, 0, "1/2"]], "unit": ["1"]})");
  EXPECT_EQ(f.algebra.mult.at(0, 0).front().coef, sc(1));
}

TEST(HopfFile, MaterializedAlgebraRoundTrip) {
  const HopfAlgebraData h = sweedler4();
  const AlgebraData a = tensor_algebra(h.algebra, opposite_algebra(h.algebra));
  const HopfFile back = HopfFile::parse(HopfFile::from(a).dump());
  EXPECT_TRUE(same_structure(back.algebra, a));
  EXPECT_EQ(back.algebra.mult, a.mult);
}

TEST(HopfFile, ActionsCoactionsAndModuleRoundTrip) {
  const HopfAlgebraData h = sweedler4();
  HopfFile f = HopfFile::from(h);
  f.actions.push_back({"trivial", trivial_action(Side::right, h, 3)});
  const HopfBimoduleData m = example_bimodule(h, BimoduleKind::parse("free:2"));
  f.coactions.push_back({"rhoL", m.left_co});
  f.coactions.push_back({"rhoR", m.right_co});
  f.module = m;

  const std::string text = f.dump();
  const HopfFile back = HopfFile::parse(text);
  ASSERT_EQ(back.actions.size(), 1u);
  EXPECT_EQ(back.actions[0].name, "trivial");
  EXPECT_EQ(back.actions[0].action.side, Side::right);
  EXPECT_EQ(back.actions[0].action.table, f.actions[0].action.table);
  ASSERT_EQ(back.coactions.size(), 2u);
  EXPECT_EQ(back.coactions[0].coaction.side, Side::left);
  EXPECT_EQ(back.coactions[0].coaction.map, m.left_co.map);
  EXPECT_EQ(back.coactions[1].coaction.map, m.right_co.map);
  ASSERT_TRUE(back.module.has_value());
  EXPECT_EQ(back.module->space_dim, m.space_dim);
  EXPECT_EQ(back.module->left_act.table, m.left_act.table);
  EXPECT_EQ(back.module->right_act.table, m.right_act.table);
  EXPECT_EQ(back.module->left_co.map, m.left_co.map);
  EXPECT_EQ(back.module->right_co.map, m.right_co.map);
  EXPECT_EQ(back.dump(), text);
  EXPECT_TRUE(check_hopf_bimodule(*back.module, back.hopf()).passed());
}

TEST(HopfFile, CoactionEntryEncoding) {
  // m_0 -> e_1 (x) m_0 on the left, m_0 -> m_0 (x) e_1 on the right, with a 2-dim coalgebra
  const std::string base = data("cyclic2.json");
  for (const char* side : {"left", "right"}) {
    std::string doc = base;
    doc.insert(doc.rfind('}'), std::string(R"(, "coactions": [{"name": "c", "side": ")") + side +
                                   R"(", "coalgebra_dim": 2, "space_dim": 1, "map": [[0, 1, 0, "1"]]}])");
    const HopfFile f = HopfFile::parse(doc);
    EXPECT_EQ(f.coactions[0].coaction.map.column(0), (SparseVec{{1, sc(1)}})) << side;
  }
}

TEST(HopfFile, RejectsMalformedInput) {
  const std::vector<std::string> bad = {
      "",
      "{",
      "[]",
      tiny_with("colour", "1"),
      R"({"field": "Q", "dim": 1, "basis": ["1"], "unit": ["1"]})",
      R"({"field": "R", "dim": 1, "basis": ["1"], "mult": [], "unit": ["1"]})",
      R"({"field": {"p": 6}, "dim": 1, "basis": ["1"], "mult": [], "unit": ["1"]})",
      R"({"field": {"p": 5, "q": 1}, "dim": 1, "basis": ["1"], "mult": [], "unit": ["1"]})",
      R"({"field": "Q", "dim": -1, "basis": [], "mult": [], "unit": []})",
      R"({"field": "Q", "dim": 1, "basis": ["1", "2"], "mult": [], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": [1], "mult": [], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 0, 1]], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 1, "1"]], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, "1"]], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 0.0, "1"]], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 0, "1/0"]], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [[0, 0, 0, "one"]], "unit": ["1"]})",
      R"({"field": "Q", "dim": 1, "basis": ["1"], "mult": [], "unit": ["1", "0"]})",
      tiny_with("comult", R"([[0, 0, 0, "1"]])"),
      tiny_with("module", "{}"),
      tiny_with("actions", R"([{"name": "a", "side": "up", "actor_dim": 1, "space_dim": 1, "table": []}])"),
      tiny_with("actions", R"([{"name": "a", "side": "left", "actor_dim": 1, "space_dim": 1, "table": [], "x": 0}])"),
      tiny_with("coactions", R"([{"name": "c", "side": "left", "coalgebra_dim": 1, "space_dim": 1, "map": [[1, 0, 0, "1"]]}])"),
  };
  for (const std::string& doc : bad) {
    EXPECT_THROW(HopfFile::parse(doc), ParseError) << doc;
  }
}

TEST(HopfFile, UnknownKeyIsNamed) {
  try {
    HopfFile::parse(tiny_with("colour", "1"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("colour"), std::string::npos);
  }
}

TEST(HopfFile, ReadMissingFileIsParseError) {
  EXPECT_THROW(HopfFile::read("/nonexistent/h.json"), ParseError);
}

TEST(HopfFile, CorruptedFileStillParses) {
  const HopfFile f = HopfFile::parse(data("corrupted.json"));
  EXPECT_FALSE(check_hopf_axioms(f.hopf()).passed());
}

TEST(MatrixDump, ListsNonzeroEntries) {
  const std::string s = dump_matrix(mat(Q, {{1, 0}, {2, 3}}), "m");
  EXPECT_NE(s.find("\"name\": \"m\""), std::string::npos);
  EXPECT_NE(s.find("[1,0,\"2\"]"), std::string::npos);
  EXPECT_EQ(s.find("[0,1,"), std::string::npos);
}

TEST(Fnv, KnownValues) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}
