#include <gtest/gtest.h>

#include "bnpoly/generator_file.hpp"
#include "bnpoly/theorem.hpp"

using namespace bnpoly;

TEST(Report, JsonRoundTrip) {
  for (auto [f, n] : {std::pair{Family::thm12, 5u}, std::pair{Family::thm13, 8u}}) {
    auto r = verify_theorem(f, n);
    auto text = to_json_text(r);
    auto back = report_from_json_text(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(to_json_text(back), text);
  }
}

TEST(Report, JsonShape) {
  auto r = verify_theorem(Family::thm12, 7);
  auto j = json::parse(to_json_text(r));
  EXPECT_EQ(j.at("schlafli"), json({10, 6, 4}));
  EXPECT_EQ(j.at("family"), "thm12");
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_TRUE(j.at("timing").empty());
  EXPECT_EQ(j.at("unravelled").at("overall"), "unravelled");
  EXPECT_EQ(j.at("tool_version"), kToolVersion);
}

TEST(Report, SkipUnravelLeavesFieldNull) {
  VerifyOptions o;
  o.skip_unravel = true;
  auto j = json::parse(to_json_text(verify_theorem(Family::thm12, 7, o)));
  EXPECT_TRUE(j.at("unravelled").is_null());
}

TEST(Report, TimingOnlyWhenRequested) {
  VerifyOptions o;
  o.timing = true;
  EXPECT_FALSE(verify_theorem(Family::thm12, 5, o).timing.empty());
}

TEST(Report, TextRendering) {
  auto text = render_text(verify_theorem(Family::thm12, 7));
  EXPECT_NE(text.find("Schlafli symbol [10, 6, 4]"), std::string::npos);
  EXPECT_NE(text.find("overall: unravelled"), std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 13), "result: PASS\n");
}

TEST(Report, FailuresAreListed) {
  VerificationReport r;
  r.checks.push_back({"a", true, true, "", "", ""});
  r.checks.push_back({"b", false, false, "", "", ""});
  EXPECT_TRUE(r.all_asserted_passed());
  r.checks.push_back({"c", false, true, "1", "2", ""});
  ASSERT_EQ(r.failures().size(), 1u);
  EXPECT_EQ(r.failures()[0]->name, "c");
  EXPECT_NE(render_text(r).find("[FAIL] c  expected 1, observed 2"), std::string::npos);
}

TEST(GeneratorFile, WriteAndParse) {
  for (auto c : {thm12_generators(5), thm13_generators(8), thm13_generators(11)}) {
    auto f = parse_generator_file(write_generator_file(c));
    EXPECT_EQ(f.degree, c.degree());
    EXPECT_EQ(f.rank, c.rank());
    EXPECT_EQ(f.family, c.family);
    EXPECT_EQ(f.generators, c.generators);
    EXPECT_EQ(candidate_from_file(f).n, c.n);
  }
}

TEST(GeneratorFile, Thm12HeaderLine) {
  auto text = write_generator_file(thm12_generators(5));
  EXPECT_EQ(text.substr(0, text.find('\n')), "degree=10 rank=4 family=thm12");
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
}

TEST(GeneratorFile, CommentsAndBlankLines) {
  auto f = parse_generator_file("# a square\n\ndegree=4 rank=2  # custom\n(1,2)(3,4)\n\n(2,4)\n");
  EXPECT_EQ(f.family, Family::custom);
  ASSERT_EQ(f.generators.size(), 2u);
  EXPECT_EQ(format_cycles(f.generators[1]), "(2,4)");
}

TEST(GeneratorFile, Errors) {
  auto line_of = [](const std::string& text) {
    try {
      parse_generator_file(text);
    } catch (const FormatError& e) {
      return e.line;
    }
    return std::size_t{0};
  };
  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("degree=4\n(1,2)\n"), 1u);
  EXPECT_EQ(line_of("degree=4 rank=1 colour=red\n(1,2)\n"), 1u);
  EXPECT_EQ(line_of("degree=4 rank=1 family=thm99\n(1,2)\n"), 1u);
  EXPECT_EQ(line_of("degree=x rank=1\n(1,2)\n"), 1u);
  EXPECT_EQ(line_of("degree=4 rank=2\n(1,2)\n"), 1u);
  EXPECT_EQ(line_of("degree=4 rank=2\n(1,2)\n(1,5)\n"), 3u);
  EXPECT_EQ(line_of("degree=4 rank=2\n(1,2)\n(1,2\n"), 3u);
  EXPECT_EQ(line_of("degree=4 rank=2\n(1,2)\n(3,4)\n"), 0u);
}

TEST(GeneratorFile, InvalidCandidates) {
  EXPECT_THROW(candidate_from_file(parse_generator_file("degree=4 rank=1\n(1,2,3)\n")), InvalidCandidate);
  EXPECT_THROW(candidate_from_file(parse_generator_file("degree=4 rank=3\n(1,2)\n(3,4)\n(2,3)\n")),
               InvalidCandidate);
}
