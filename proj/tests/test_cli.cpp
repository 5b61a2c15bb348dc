#include <mixsym/cli/commands.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>

using namespace mixsym::cli;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

/// Runs the CLI binary; stderr is discarded.
Outcome run(const std::string& args) {
  Outcome r;
  const std::string cmd = std::string(MIXSYM_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json json_of(const Outcome& r) {
  Json j = Json::parse(r.out);
  j.erase("seconds");
  return j;
}

std::map<int, std::size_t> dims_of(std::initializer_list<std::size_t> counts, int first) {
  std::map<int, std::size_t> out;
  for (auto c : counts) out[first++] = c;
  return out;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  Report r = cmd_prolong({2, 3, 0}, "sternberg", true, std::nullopt);
  ASSERT_TRUE(r.comparison);
  Report back = report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back, r);

  Report q;
  q.spec = TableauSpec(3, 4, -1);
  q.method = "known-basis";
  q.dimension = 2;
  q.basis = {"(-1/3*x^2)*d/dx", "d/dy0"};
  q.agreements = {{"span", false, "2 vs 3"}};
  q.seconds = 0.125;
  back = report_from_json(Json::parse(to_json(q).dump()));
  EXPECT_EQ(back, q);
  EXPECT_EQ(to_json(q)["graded_dims"], Json::object());
}

TEST(Report, GradedKeysAreStrings) {
  const Json j = to_json(cmd_prolong({2, 3, 0}, "tanaka", false, std::nullopt), false);
  EXPECT_EQ(j["graded_dims"], Json::parse(R"({"-3":2,"-2":2,"-1":2,"0":4,"1":2,"2":1,"3":2})"));
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_EQ(j["invariants"]["graded_dims"], j["graded_dims"]);
}

TEST(Commands, Symmetries) {
  const Report both = cmd_symmetries({2, 3, 0}, std::nullopt, "both");
  EXPECT_EQ(both.dimension, 15u);
  EXPECT_TRUE(both.ok());
  EXPECT_EQ(both.agreements.back().name, "known-basis span");
  EXPECT_EQ(cmd_symmetries({2, 4, 1}, std::nullopt, "known").dimension, 11u);
  EXPECT_EQ(cmd_symmetries({3, 4, -1}, std::nullopt, "known").dimension, 31u);
  EXPECT_THROW(cmd_symmetries({3, 3, 0}, std::nullopt, "known"), mixsym::eds::UncoveredCase);
  EXPECT_THROW(cmd_symmetries({4, 4, 2}, 8, "determining"), mixsym::eds::NotStabilized);
}

TEST(Commands, Prolong) {
  EXPECT_EQ(cmd_prolong({2, 3, 0}, "tanaka", false, std::nullopt).graded_dims, dims_of({2, 2, 2, 4, 2, 1, 2}, -3));
  const Report s = cmd_prolong({2, 3, 0}, "sternberg", false, std::nullopt);
  EXPECT_EQ(s.graded_dims, dims_of({5, 7, 3}, -1));
  const Report t = cmd_prolong({2, 3, 0}, "sternberg", true, std::nullopt);
  EXPECT_EQ(t.dimension, 15u);
  EXPECT_NE(t.invariants, s.invariants);
  EXPECT_EQ(t.comparison->verdict, "certified non-isomorphic");
  EXPECT_THROW(cmd_prolong({2, 3, 0}, "sternberg", false, 0), mixsym::sternberg::NotTerminated);
}

TEST(Commands, Compare) {
  const Report a = cmd_compare({2, 3, 0}, std::nullopt, 1);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.comparison->verdict, "certified non-isomorphic");
  const Report b = cmd_compare({2, 4, 0}, std::nullopt, 2);
  EXPECT_EQ(b.dimension, 19u);
  EXPECT_NE(std::find(b.comparison->differing.begin(), b.comparison->differing.end(), "dimension"),
            b.comparison->differing.end());
  EXPECT_NE(b.comparison->against.find("dimension 14"), std::string::npos);
  const Report c = cmd_compare({3, 4, 0}, std::nullopt, std::nullopt);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.dimension, 14u);
  EXPECT_FALSE(c.comparison);
}

TEST(Commands, TableauLemmaFlags) {
  const auto t = cmd_tableau({2, 3, 1});
  EXPECT_EQ(t.tableau, "[f2][f1][f0]\n[e1][e0]\n");
  EXPECT_EQ(t.chain, "J^{2,3}→J^{1,2}→J^{0,1}");
  const auto b = cmd_lemma("b", 3, 1, 0);
  EXPECT_TRUE(b.ok);
  EXPECT_EQ(b.kernel_dim, 6u);
  EXPECT_TRUE(cmd_lemma("a", 2, 3, 0).ok);
  EXPECT_THROW(cmd_lemma("e", 1, 1, 0), std::invalid_argument);
  EXPECT_EQ(cmd_flags(2, 4, "z3^2", "0"), (std::vector<std::size_t>{4, 2, 0}));
  EXPECT_THROW(cmd_flags(2, 4, "z3^", "0"), mixsym::poly::ParseError);
}

TEST(Commands, SuiteSmallGrid) {
  const auto rows = cmd_suite(6);
  ASSERT_EQ(rows.size(), mixsym::eds::spec_grid(6).size());
  for (const auto& r : rows) EXPECT_TRUE(r.ok) << r.spec.label() << " " << r.error;
  EXPECT_EQ(rows.front().spec, TableauSpec(2, 2, 0));
}

TEST(Binary, DeterministicJson) {
  for (const std::string args : {"symmetries --k 2 --l 3 --shift 1 --method both --format json",
                                 "prolong --engine tanaka --k 2 --l 3 --shift 1 --format json"}) {
    const Outcome a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_EQ(json_of(a).dump(), json_of(b).dump()) << args;
    EXPECT_EQ(json_of(a)["dimension"], 15);
  }
}

TEST(Binary, TextExamples) {
  Outcome r = run("tableau --k 2 --l 3 --shift 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[f2][f1][f0]\n[e1][e0]\nJ^{2,3}→J^{1,2}→J^{0,1}\n");
  r = run("lemma --part b --r 3 --format json");
  EXPECT_EQ(Json::parse(r.out)["kernel_dim"], 6);
  r = run("flags --k 2 --l 4 --f \"z3^2\" --g 0");
  EXPECT_EQ(r.out, "ranks: 4,2,0\n");
  r = run("prolong --engine sternberg --k 2 --l 3 --shift 0");
  EXPECT_NE(r.out.find("dims: 5,7,3\n"), std::string::npos);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("symmetries --k 3 --l 2 --shift 0").code, 2);
  EXPECT_EQ(run("symmetries --k 3 --l 3 --shift 0 --method known").code, 2);
  EXPECT_EQ(run("symmetries --k 2 --l 3 --shift 0 --method magic").code, 2);
  EXPECT_EQ(run("flags --k 2 --l 4 --f \"z3^\"").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("prolong --engine sternberg --k 2 --l 3 --shift 0 --cap 0").code, 1);
  EXPECT_EQ(run("symmetries --k 4 --l 4 --shift 2 --degree-bound 8").code, 1);
}
