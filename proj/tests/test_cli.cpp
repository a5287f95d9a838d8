#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stratify/cli.hpp"
#include "support.hpp"

using namespace stratify;
using stratify::testing::example_path;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

const std::string& fixture() {
  static const std::string p = example_path("cyclic3_rad3.alg");
  return p;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '\t') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST(Cli, AlgebraCheck) {
  const auto r = run({"algebra", "check", fixture()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("dimension 9"), std::string::npos);
  EXPECT_NE(r.out.find("a*b"), std::string::npos);
  const auto j = Json::parse(run({"--format", "json", "algebra", "check", fixture()}).out);
  EXPECT_EQ(j.at("vertices"), 3);
  EXPECT_EQ(j.at("basis").size(), 9u);
}

TEST(Cli, IndecList) {
  const auto r = run({"indec", "list", fixture()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("9 indecomposables, complete"), std::string::npos);
  const auto j = Json::parse(run({"indec", "list", fixture(), "--format", "json"}).out);
  EXPECT_TRUE(j.at("complete").get<bool>());
  ASSERT_EQ(j.at("modules").size(), 9u);
  std::multiset<std::vector<std::size_t>> dims;
  for (const auto& m : j.at("modules")) dims.insert(m.at("dim_vector").get<std::vector<std::size_t>>());
  const std::multiset<std::vector<std::size_t>> expected{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1},
                                                         {1, 0, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}};
  EXPECT_EQ(dims, expected);
  const auto tsv = lines(run({"--format", "tsv", "indec", "list", fixture()}).out);
  ASSERT_EQ(tsv.size(), 10u);
  EXPECT_EQ(fields(tsv[0]).front(), "name");
}

TEST(Cli, HomAndTau) {
  EXPECT_EQ(run({"hom", "S1", "S1", fixture()}).out, "dim Hom(S1, S1) = 1\n");
  EXPECT_EQ(run({"hom", "P2", "P1", fixture()}).out, "dim Hom(P2, P1) = 1\n");
  EXPECT_EQ(run({"hom", "P1+P2", "S1", fixture()}).out, "dim Hom(P1+P2, S1) = 1\n");
  EXPECT_EQ(run({"tau", "--module", "S1", fixture()}).out, "S2\n");
  EXPECT_EQ(run({"tau", "-m", "S2", "--inverse", fixture()}).out, "S1\n");
  EXPECT_EQ(run({"tau", "-m", "P1", fixture()}).out, "0\n");
  EXPECT_EQ(run({"tau", "-m", "M12+S3", fixture()}).out, "M23+S1\n");
  const std::string inline_s1 = R"({"dim_vector":[1,0,0]})";
  EXPECT_EQ(run({"tau", "-m", inline_s1, fixture()}).out, "S2\n");
}

TEST(Cli, TauTilting) {
  const auto r = run({"tautilt", "list", fixture()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("10 tau-tilting modules"), std::string::npos);
  EXPECT_NE(r.out.find("P1+M12+S1\n"), std::string::npos);
  const auto j = Json::parse(run({"tautilt", "list", fixture(), "--format", "json"}).out);
  EXPECT_EQ(j.size(), 10u);
  EXPECT_NE(run({"tautilt", "list", "--support", fixture()}).out.find("20 support tau-tilting pairs"), std::string::npos);
  EXPECT_EQ(run({"bongartz", "-m", "S2", fixture()}).out, "P1+P2+S2\n");
  EXPECT_EQ(run({"bongartz", "-m", "S1+S2", fixture()}).code, 1);
}

TEST(Cli, SsBuildAndEnumerate) {
  const auto r = run({"ss", "build", "-o", "P1,P2,S2", fixture()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Delta(1) = S1\nDelta(2) = P2\nDelta(3) = S2\n"), std::string::npos);
  EXPECT_NE(r.out.find("TF-proper: no"), std::string::npos);
  const auto proper = run({"ss", "build", "-o", "P1,M12,S2", "-m", "P1+M12+S2", fixture()});
  EXPECT_NE(proper.out.find("TF-proper: yes"), std::string::npos);
  EXPECT_NE(proper.out.find("Ext-projective stratifying system: yes"), std::string::npos);
  EXPECT_EQ(run({"ss", "build", "-o", "P1,M12,S2", "-m", "P1+M12+S1", fixture()}).code, 1);
  EXPECT_EQ(run({"ss", "build", "-o", "S1,M12,P1", fixture()}).code, 1);
  const auto e = run({"ss", "enumerate", "-m", "P1+P2+P3", fixture()});
  EXPECT_NE(e.out.find("6 orders, 6 stratifying systems (6 as sets), 0 tfepss"), std::string::npos);
  const auto j = Json::parse(run({"ss", "enumerate", "-m", "P1+M12+S2", "--format", "json", fixture()}).out);
  EXPECT_EQ(j.at("count_tfepss"), 3);
}

TEST(Cli, SsTableTsv) {
  const auto r = run({"ss", "table", fixture(), "--format", "tsv"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 12u);  // header, ten rows, verdict
  const auto header = fields(ls[0]);
  EXPECT_EQ(header[0], "module");
  EXPECT_EQ(header[4], "tfepss");
  std::vector<std::string> tfepss, match;
  for (std::size_t k = 1; k <= 10; ++k) {
    const auto f = fields(ls[k]);
    tfepss.push_back(f[4]);
    match.push_back(f[7]);
  }
  EXPECT_EQ(tfepss, (std::vector<std::string>{"0", "0", "0", "0", "3", "1", "3", "1", "3", "1"}));
  for (const auto& m : match) EXPECT_EQ(m.rfind("yes", 0), 0u) << m;
  EXPECT_EQ(ls.back(), "all rows match");
  EXPECT_EQ(fields(ls[6])[0], "P1+M12+S1");
}

TEST(Cli, SsTableJsonAndAudit) {
  const auto j = Json::parse(run({"--format", "json", "ss", "table", fixture()}).out);
  ASSERT_EQ(j.size(), 10u);
  EXPECT_EQ(j[5].at("count_ordered"), 1);
  EXPECT_EQ(j[5].at("count_tfepss"), 1);
  EXPECT_TRUE(j[1].at("match").at("matched").get<bool>());
  EXPECT_FALSE(j[1].at("match").at("ordered").get<bool>());
  const auto audit = run({"ss", "table", "--audit", fixture()}).out;
  EXPECT_NE(audit.find("ordered/unordered differ"), std::string::npos);
  EXPECT_NE(audit.find("order (P1, M12, S1) -> Delta (P1, M12, S1)  tf-proper"), std::string::npos);
  const auto bare = run({"ss", "table", "--no-expected", fixture()}).out;
  EXPECT_EQ(bare.find("match"), std::string::npos);
}

TEST(Cli, SsTableWithWrongExpectations) {
  const auto path = std::filesystem::temp_directory_path() / "stratify_wrong_expected.json";
  {
    std::ofstream f(path);
    f << R"({"rows": [{"module": ["P1", "P2", "P3"], "stratifying_systems": 5, "tfepss": 0}]})";
  }
  const auto r = run({"ss", "table", "--expected", path.string(), fixture()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("some rows do not match"), std::string::npos);
  {
    std::ofstream f(path);
    f << R"({"rows": [{"module": ["Q7"], "stratifying_systems": 5, "tfepss": 0}]})";
  }
  EXPECT_EQ(run({"ss", "table", "--expected", path.string(), fixture()}).code, 1);
  std::filesystem::remove(path);
}

TEST(Cli, Profile) {
  const auto r = run({"profile", fixture()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 6u);
  for (const auto& l : ls) EXPECT_NE(l.find("standardly stratified: no"), std::string::npos) << l;
  EXPECT_EQ(ls[0].rfind("order 1<2<3: Delta(1)=S1 Delta(2)=S2 Delta(3)=P3", 0), 0u) << ls[0];
  const auto lin = run({"profile", "-o", "1,2", example_path("linear2.alg")});
  EXPECT_NE(lin.out.find("standardly stratified: yes  quasi-hereditary: yes"), std::string::npos);
  EXPECT_EQ(run({"profile", "-o", "1,4,2", fixture()}).code, 1);
}

TEST(Cli, Exseq) {
  const auto b = run({"exseq", "build", "-o", "P1,P2,S2", fixture()});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.out, "(S1, P2, S2)\nsigned tau-exceptional: yes\n");
  EXPECT_EQ(run({"exseq", "build", "--nested", "-o", "P1,P2,S2", fixture()}).out, b.out);
  EXPECT_EQ(run({"exseq", "build", "--nested", "-o", "S2,P2,P1", fixture()}).code, 1);

  const auto seq = run({"--format", "json", "exseq", "build", "-o", "P1,M12,S2", fixture()}).out;
  const auto v = run({"exseq", "verify", "-s", seq, fixture()});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "pass\n");
  const auto bad = run({"exseq", "verify", "-s", R"([{"module":"S2","shifted":false},{"module":"S2","shifted":false}])",
                        fixture()});
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.out.rfind("fail\n", 0), 0u);

  const auto path = std::filesystem::temp_directory_path() / "stratify_seq.json";
  {
    std::ofstream f(path);
    f << R"([{"module":"S1","shifted":false},{"module":"P3","shifted":true}])";
  }
  const auto j = Json::parse(run({"exseq", "verify", "-s", "@" + path.string(), "--format", "json", fixture()}).out);
  EXPECT_TRUE(j.at("passed").get<bool>());
  std::filesystem::remove(path);
  EXPECT_EQ(run({"exseq", "verify", "-s", R"([{"module":"P3","shifted":true},{"module":"S1","shifted":false}])", fixture()})
                .code,
            1);
  EXPECT_EQ(run({"exseq", "verify", "-s", "[{", fixture()}).code, 1);
  EXPECT_EQ(run({"exseq", "verify", "-s", R"([{"module":"S1","shifted":1}])", fixture()}).code, 1);
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(run({"indec", "list", ""}).code, 1);
  EXPECT_EQ(run({"indec", "list", "/nonexistent/file.alg"}).code, 1);
  const auto unknown = run({"bogus", fixture()});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("unknown command 'bogus'"), std::string::npos);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"tau", "-m", "Q9", fixture()}).code, 1);
  EXPECT_EQ(run({"tau", "-m", R"({"dim_vector":[1,0)", fixture()}).code, 1);
  EXPECT_EQ(run({"tau", "-m", R"({"dim_vector":[1,1,0],"arrows":{"a":[[1,1]]}})", fixture()}).code, 1);
  EXPECT_EQ(run({"--field-char", "4", "indec", "list", fixture()}).code, 1);
  EXPECT_EQ(run({"--format", "xml", "indec", "list", fixture()}).code, 1);
  EXPECT_EQ(run({"--dim-bound", "0", "indec", "list", fixture()}).code, 1);
  EXPECT_EQ(run({"tau", fixture()}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ss"), std::string::npos);
}

TEST(Cli, CapsGiveInconclusive) {
  const auto r = run({"--search-cap", "1", "indec", "list", fixture()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("inconclusive"), std::string::npos);
  EXPECT_EQ(run({"--filtration-cap", "1", "ss", "table", fixture()}).code, 2);
  const auto partial = run({"--dim-bound", "2", "tautilt", "list", fixture()});
  EXPECT_EQ(partial.code, 2);
}

TEST(Cli, FieldCharacteristicThree) {
  const auto r = run({"--field-char", "3", "ss", "table", fixture()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("all rows match"), std::string::npos);
  EXPECT_NE(run({"--field-char", "3", "algebra", "check", fixture()}).out.find("characteristic 3"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const char* fmt : {"text", "tsv", "json"}) {
    const auto a = run({"--format", fmt, "ss", "table", "--audit", fixture()});
    const auto b = run({"--format", fmt, "ss", "table", "--audit", fixture()});
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, NoInvariantViolationsOnBundledFixtures) {
  for (const auto& file : {fixture(), example_path("linear2.alg")}) {
    for (const auto& args : std::vector<std::vector<std::string>>{{"algebra", "check"},
                                                                  {"indec", "list"},
                                                                  {"tautilt", "list"},
                                                                  {"tautilt", "list", "--support"},
                                                                  {"ss", "table", "--audit"},
                                                                  {"profile"}}) {
      auto full = args;
      full.push_back(file);
      const auto r = run(full);
      EXPECT_EQ(r.code, 0) << file << ": " << r.err;
    }
  }
  // Every TF-admissible order of every tau-tilting module builds cleanly.
  const auto j = Json::parse(run({"--format", "json", "ss", "table", "--audit", fixture()}).out);
  for (const auto& row : j)
    for (const auto& o : row.at("orders")) {
      std::string spec;
      for (const auto& n : o) spec += (spec.empty() ? "" : ",") + n.get<std::string>();
      EXPECT_EQ(run({"ss", "build", "-o", spec, fixture()}).code, 0) << spec;
      EXPECT_EQ(run({"exseq", "build", "--nested", "-o", spec, fixture()}).code, 0) << spec;
    }
}
