#include <gtest/gtest.h>

#include <sstream>

#include "json.hpp"
#include "oracle.hpp"
#include "persemi/cli.hpp"

namespace cli = persemi::cli;
using persemi::Int;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int const code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(std::string const& name) {
  return oracle::read_file(std::string(PERSEMI_GOLDEN_DIR) + "/" + name);
}

}  // namespace

TEST(ParseGenerators, AcceptsAndRejects) {
  EXPECT_EQ(cli::parse_generators("9,14,15,16"), (std::vector<Int>{9, 14, 15, 16}));
  EXPECT_EQ(cli::parse_generators(" 5 , 3,4 "), (std::vector<Int>{3, 4, 5}));
  for (char const* bad : {"", "3,,4", "3,4,", "3,x", "0,1", "-1,2", "3,4,3", "3.5"}) {
    EXPECT_THROW(cli::parse_generators(bad), std::invalid_argument) << bad;
  }
}

TEST(ParseFormat, Values) {
  EXPECT_EQ(cli::parse_format("csv"), cli::OutputFormat::Csv);
  EXPECT_EQ(cli::parse_format("json"), cli::OutputFormat::Json);
  EXPECT_EQ(cli::parse_format("text"), cli::OutputFormat::Text);
  EXPECT_THROW(cli::parse_format("xml"), std::invalid_argument);
}

TEST(Check, ExitCodes) {
  auto const yes = run({"check", "9,14,15,16", "--n", "4"});
  EXPECT_EQ(yes.code, cli::kSuccess);
  EXPECT_NE(yes.out.find("verdict: 4-permutation"), std::string::npos);

  auto const no = run({"check", "4,5,7", "--n", "3", "--format", "json"});
  EXPECT_EQ(no.code, cli::kCheckedFalse);
  auto const j = nlohmann::json::parse(no.out);
  EXPECT_FALSE(j["verdict"].get<bool>());
  EXPECT_EQ(j["first_failure"]["index"].get<int>(), 0);
  EXPECT_EQ(j["first_failure"]["residues"], nlohmann::json({1, 2, 1}));

  auto const bad = run({"check", "2,4", "--n", "2"});
  EXPECT_EQ(bad.code, cli::kUsageError);
  EXPECT_NE(bad.err.find("gcd"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
}

TEST(Check, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsageError);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "3,4"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "3,4", "--n", "0"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "3,4", "--n", "2", "--format", "xml"}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "3,3,4", "--n", "2"}).code, cli::kUsageError);
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST(Info, Examples) {
  auto const a = run({"info", "3,4", "--format", "json"});
  ASSERT_EQ(a.code, 0);
  auto const j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["frobenius"].get<Int>(), 5);
  EXPECT_EQ(j["apery"], nlohmann::json({0, 4, 8}));
  EXPECT_EQ(j["elements"].size(), 30u);

  EXPECT_NE(run({"info", "2,3"}).out.find("frobenius: 1\n"), std::string::npos);
  EXPECT_NE(run({"info", "1"}).out.find("frobenius: -1\n"), std::string::npos);
}

TEST(Enumerate, GoldenFiles) {
  auto const t1 = run({"enumerate", "--n", "3", "--min", "1", "--max", "33", "--format", "csv"});
  EXPECT_EQ(t1.code, 0);
  EXPECT_EQ(t1.out, golden("n3_max33.csv"));
  auto const t2 = run({"enumerate", "--n", "3", "--min", "12", "--max", "105", "--format", "csv",
                       "--workers", "4"});
  EXPECT_EQ(t2.code, 0);
  EXPECT_EQ(t2.out, golden("n3_m12_35.csv"));
}

TEST(Enumerate, OutputIsByteStable) {
  std::vector<std::string> base{"enumerate", "--n", "3", "--min", "1", "--max", "60"};
  for (char const* fmt : {"csv", "json"}) {
    auto a = base;
    a.insert(a.end(), {"--format", fmt, "--workers", "1"});
    auto b = base;
    b.insert(b.end(), {"--format", fmt, "--workers", "6"});
    EXPECT_EQ(run(a).out, run(b).out) << fmt;
  }
  auto const two = run({"enumerate", "--n", "2", "--min", "1", "--max", "50", "--format", "json"});
  auto const j = nlohmann::json::parse(two.out);
  EXPECT_EQ(j["found"], nlohmann::json({{1, 2}, {2, 3}, {3, 4}}));
  EXPECT_FALSE(j.contains("wall_time"));
}

TEST(Enumerate, Errors) {
  EXPECT_EQ(run({"enumerate", "--n", "3", "--min", "9", "--max", "3"}).code, cli::kUsageError);
  EXPECT_EQ(run({"enumerate", "--n", "3", "--max", "30", "--workers", "0"}).code,
            cli::kUsageError);
}

TEST(Family, Gen) {
  auto const g = run({"family", "gen", "H1", "--k", "5"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out, "15,16,29\n");
  auto const j = nlohmann::json::parse(run({"family", "gen", "N4", "--k", "2", "--format", "json"}).out);
  EXPECT_EQ(j["family"], "N4");
  EXPECT_EQ(j["generators"], nlohmann::json({9, 14, 15, 16}));
  EXPECT_EQ(run({"family", "gen", "H5", "--k", "1"}).code, cli::kUsageError);
  EXPECT_EQ(run({"family", "gen", "H99", "--k", "1"}).code, cli::kUsageError);
}

TEST(Family, VerifyAll) {
  auto const r = run({"family", "verify", "--all", "--kmax", "12", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("false"), std::string::npos);
  // 16 families * 12 values of k, minus H5 at k = 1, plus the header.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 16 * 12 - 1 + 1);
  EXPECT_EQ(run({"family", "verify", "N5", "--k", "3"}).code, 0);
  EXPECT_EQ(run({"family", "verify"}).code, cli::kUsageError);
  EXPECT_EQ(run({"family", "verify", "H1", "--all"}).code, cli::kUsageError);
}

TEST(Family, Match) {
  EXPECT_EQ(run({"family", "match", "17,24,25"}).out, "H13 k=2\n");
  EXPECT_EQ(run({"family", "match", "3,5,7"}).out, "no match\n");
  EXPECT_EQ(run({"family", "match", "17,24,25", "--format", "csv"}).out, "family,k\nH13,2\n");
}

TEST(Family, Members) {
  auto const r = run({"family", "members", "H9", "--k", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  auto const j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["bound"].get<Int>(), 23);
  EXPECT_EQ(j["members"].get<std::vector<Int>>(), oracle::elements_up_to({5, 7, 9}, 23));
  EXPECT_EQ(run({"family", "members", "H9", "--k", "1", "--bound", "0"}).out, "0\n");
  EXPECT_EQ(run({"family", "members", "H1", "--k", "1"}).code, cli::kUsageError);
}

TEST(Conjecture, Examples) {
  auto const one = run({"conjecture", "--from", "12", "--to", "12", "--format", "csv"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, "multiplicity,generators,family,k,confirmed\n12,12 13 23,H1,4,true\n");

  auto const all = run({"conjecture", "--from", "12", "--to", "35", "--format", "json"});
  EXPECT_EQ(all.code, 0);
  auto const j = nlohmann::json::parse(all.out);
  EXPECT_EQ(j["rows"].size(), 72u);
  EXPECT_TRUE(j["unmatched"].empty());

  auto const low = run({"conjecture", "--from", "1", "--to", "11"});
  EXPECT_EQ(low.code, 0);
  EXPECT_NE(low.err.find("warning"), std::string::npos);
}

TEST(Conjecture, LabelsAgreeWithReferenceTable) {
  auto const r = run({"conjecture", "--from", "12", "--to", "35", "--format", "csv"});
  auto const labels = oracle::read_labels(std::string(PERSEMI_GOLDEN_DIR) + "/n3_m12_35_families.csv");
  std::ostringstream expected;
  expected << "multiplicity,generators,family,k,confirmed\n";
  for (auto const& l : labels) {
    Int const k = oracle::k_from_multiplicity(l.family, l.generators[0]);
    expected << l.generators[0] << ',' << l.generators[0] << ' ' << l.generators[1] << ' '
             << l.generators[2] << ',' << l.family << ',' << k << ",true\n";
  }
  EXPECT_EQ(r.out, expected.str());
}
