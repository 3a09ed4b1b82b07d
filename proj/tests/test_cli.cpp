#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "mmseg/cli.hpp"

using namespace mmseg;
using namespace mmseg::cli;

#ifndef MMSEG_TEST_DATA
#error "MMSEG_TEST_DATA must point at tests/data"
#endif

namespace {

const std::string kData = MMSEG_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_config(const CliConfig& cfg, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(cfg, in, out, err);
  return {code, out.str(), err.str()};
}

Result run_args(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "mmseg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  ParseResult parsed = parse_args(static_cast<int>(argv.size()), argv.data(), out, err);
  if (const int* code = std::get_if<int>(&parsed)) return {*code, out.str(), err.str()};
  std::istringstream in(stdin_text);
  const int code = run(std::get<CliConfig>(parsed), in, out, err);
  return {code, out.str(), err.str()};
}

std::string u8(const Word& w) { return to_utf8(w); }

}  // namespace

TEST(Cli, SegmentMonosyllable) {
  const Result r = run_args({"segment", "--input", "-"}, u8({cp::UN}) + "\n");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, u8({cp::UN}) + "\n");
}

TEST(Cli, SegmentCustomDelimiterAndFormats) {
  const std::string text = u8({cp::PA, cp::ANAP, cp::NA, cp::ANAP}) + "\n";
  EXPECT_EQ(run_args({"segment", "--delimiter", "|"}, text).out,
            u8({cp::PA, cp::ANAP}) + "|" + u8({cp::NA, cp::ANAP}) + "\n");
  const Result tsv = run_args({"segment", "--format", "tsv"}, text);
  EXPECT_NE(tsv.out.find("\tsegmented\t"), std::string::npos);
  const Result json = run_args({"segment", "--format", "json"}, text);
  EXPECT_EQ(nlohmann::json::parse(json.out)["patterns"], nlohmann::json::array({"CV", "CV"}));
}

TEST(Cli, SegmentSampleFile) {
  const Result r = run_args({"segment", "--input", kData + "/sample.txt"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string lemon = u8({cp::CHIL, cp::ANAP, cp::MIT_LONSUM}) + "/" +
                            u8({cp::PA, cp::APUN, cp::RAI, cp::ANAP});
  const std::string expected =
      lemon + " " + u8({cp::UN, cp::CHEIKHEI}) + "\n" +
      u8({cp::PA, cp::ANAP}) + "/" + u8({cp::NA, cp::ANAP}) + " " +
      u8({cp::DIGIT_ZERO + 1, cp::DIGIT_ZERO + 2}) + " abc " +
      u8({cp::CHIL, cp::ANAP, cp::LUM}) + "/" + u8({cp::BA}) + "\n" + "\n" +
      u8({cp::PA, cp::ANAP, cp::ANAP, cp::KOK}) + "\n";
  EXPECT_EQ(r.out, expected);
}

TEST(Cli, SegmentIsDeterministicAndLossless) {
  // Running text built from the gold words, a few per line.
  std::string text;
  const auto gold = load_gold(kData + "/synthetic_gold.tsv");
  for (std::size_t k = 0; k < gold.size(); ++k) {
    text += u8(gold[k].word) + (k % 5 == 4 ? "\n" : " ");
  }
  const Result a = run_args({"segment"}, text);
  const Result b = run_args({"segment"}, text);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);

  // Stripping the delimiter gives back the input's word tokens.
  std::istringstream original(text);
  std::istringstream segmented(a.out);
  std::string in_line, out_line;
  while (std::getline(original, in_line)) {
    ASSERT_TRUE(std::getline(segmented, out_line));
    std::vector<Word> in_words, out_words;
    for (const Token& t : tokenize(in_line)) {
      if (t.kind == TokenKind::Word) in_words.push_back(t.text);
    }
    std::string stripped;
    for (char c : out_line) {
      if (c != '/') stripped.push_back(c);
    }
    for (const Token& t : tokenize(stripped)) {
      if (t.kind == TokenKind::Word) out_words.push_back(t.text);
    }
    ASSERT_EQ(in_words, out_words);
  }
}

TEST(Cli, EvalAgainstOwnOutputIsPerfect) {
  const Result r = run_args({"eval", "--gold", kData + "/synthetic_gold.tsv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("precision\t100.00\n"), std::string::npos);
  EXPECT_NE(r.out.find("recall\t100.00\n"), std::string::npos);
  EXPECT_NE(r.out.find("f_score\t100.00\n"), std::string::npos);
}

// Four two-syllable words, four gold boundaries; the system merges one of
// them.  gold = 8, system = 7, correct = 6:
//   P = 6/7 = 85.71, R = 6/8 = 75.00, F = 2PR/(P+R) = 0.8 = 80.00
TEST(Cli, EvalMergedBoundary) {
  const Result r = run_args({"eval", "--gold", kData + "/merge_gold.tsv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "correct_syllables\t6\nsystem_syllables\t7\ngold_syllables\t8\n"
            "precision\t85.71\nrecall\t75.00\nf_score\t80.00\nbeta\t1.0\n");

  const Result j = run_args({"eval", "--gold", kData + "/merge_gold.tsv", "--format", "json",
                             "--beta", "2"});
  ASSERT_EQ(j.code, kExitOk);
  const auto report = nlohmann::json::parse(j.out);
  // F2 = 5PR / (4P + R) with P = 6/7, R = 3/4
  const double p = 6.0 / 7.0, rc = 0.75;
  EXPECT_NEAR(report["f_score"].get<double>(), 100.0 * 5 * p * rc / (4 * p + rc), 1e-9);
  EXPECT_EQ(report["beta"], 2.0);
}

TEST(Cli, Patterns) {
  const Result r = run_args({"patterns", "--input", kData + "/sample.txt"});
  ASSERT_EQ(r.code, kExitOk);
  // lemon: CVC + CCV(out of inventory); u: V; paanaa: CV CV; chaa.ba: CV C
  EXPECT_EQ(r.out,
            "V\t1\nCV\t3\nC\t1\nVVV\t0\nCVC\t1\nCC\t0\nCVV\t0\nVV\t0\nVVC\t0\nVC\t0\n"
            "CCVC\t0\nOutOfInventory\t1\nunsegmented\t1\n");
}

TEST(Cli, Inspect) {
  const Result r = run_args({"inspect"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string l; std::getline(lines, l);) rows.push_back(l);
  ASSERT_EQ(rows.size(), 57u);
  EXPECT_EQ(rows[0], "# codepoint\tclass\tname\tromanization");
  EXPECT_EQ(rows[1], "U+ABC0\tMajorLetter\tkok\tk");
  EXPECT_EQ(rows[15], "U+ABCE\tMajorLetter:vowel\tun\tu");
  EXPECT_EQ(rows[38], "U+ABE5\tVowelSign\taatap\taa");
  EXPECT_EQ(rows[56], "U+ABF9\tDigit\tmapal\t9");
  EXPECT_EQ(r.out, run_args({"inspect"}).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_args({}).code, kExitUsage);
  EXPECT_EQ(run_args({"eval"}).code, kExitUsage);
  EXPECT_EQ(run_args({"segment", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_args({"segment", "--delimiter", u8({cp::APUN})}).code, kExitUsage);
  EXPECT_EQ(run_args({"segment", "--delimiter", ""}).code, kExitUsage);
  EXPECT_EQ(run_args({"eval", "--gold", "x", "--beta", "0"}).code, kExitUsage);
  EXPECT_EQ(run_args({"--help"}).code, kExitOk);

  CliConfig cfg;
  cfg.command = Command::Eval;
  EXPECT_EQ(run_config(cfg).code, kExitUsage);
}

TEST(Cli, DataErrors) {
  const Result missing = run_args({"segment", "--input", "/nonexistent/input.txt"});
  EXPECT_EQ(missing.code, kExitData);
  EXPECT_NE(missing.err.find("/nonexistent/input.txt"), std::string::npos);

  const std::string bad = ::testing::TempDir() + "/bad_gold.tsv";
  {
    std::ofstream f(bad);
    f << "# comment\n" << u8({cp::UN}) << "\t" << u8({cp::UN}) << "\n" << u8({cp::PA}) << "\n";
  }
  const Result r = run_args({"eval", "--gold", bad});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find(bad), std::string::npos);
}
