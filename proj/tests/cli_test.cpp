#include <gtest/gtest.h>

#include <sstream>

#include "saseval/cli.hpp"
#include "support/fixtures.hpp"

namespace saseval {
namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(cli::Command command, const fs::path& dir, const fs::path& out_dir = {},
              bool strict = false, AsilLevel threshold = AsilLevel::A) {
  cli::CliConfig cfg;
  cfg.command = command;
  cfg.project_dir = dir;
  cfg.output_dir = out_dir.empty() ? dir / "out" : out_dir;
  cfg.strict = strict;
  cfg.asil_threshold = threshold;
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

void append(const fs::path& file, const std::string& text) {
  std::ofstream(file, std::ios::app) << text;
}

TEST(Cli, ParseCommand) {
  EXPECT_EQ(cli::parse_command("emit-tests"), cli::Command::EmitTests);
  EXPECT_EQ(cli::parse_command("fmt"), cli::Command::Fmt);
  EXPECT_FALSE(cli::parse_command("deploy"));
}

TEST(Cli, CheckFullyCoveredFixture) {
  const auto r = run(cli::Command::Check, testing::fixture_dir("uc2"));
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty()) << r.err;
}

TEST(Cli, CheckUnjustifiedThreat) {
  testing::TempDir dir;
  testing::copy_fixture("uc2", dir.path());
  append(dir.path() / "library.saseval",
         "\nthreat T9.9 {\n  asset: GW\n  description: \"new threat\"\n  stride: Tampering\n}\n");
  const auto r = run(cli::Command::Check, dir.path());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("T9.9"), std::string::npos);
  EXPECT_NE(r.err.find("library.saseval:"), std::string::npos);
  EXPECT_NE(r.err.find("error: threat T9.9 is neither attacked nor justified [InductiveGap]"),
            std::string::npos)
      << r.err;
}

TEST(Cli, ValidationErrorsExitOne) {
  testing::TempDir dir;
  testing::copy_fixture("uc2", dir.path());
  append(dir.path() / "attacks.saseval", "\njustify T404 { reason: \"x\" }\n");
  const auto r = run(cli::Command::Check, dir.path());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("attacks.saseval:"), std::string::npos);
  EXPECT_NE(r.err.find("[DanglingReference]"), std::string::npos);
}

TEST(Cli, StrictTurnsWarningsIntoErrors) {
  testing::TempDir dir;
  testing::copy_fixture("uc2", dir.path());
  append(dir.path() / "attacks.saseval", "\njustify T3.1.4 { reason: \"x\" }\n");
  EXPECT_EQ(run(cli::Command::Check, dir.path()).code, 0);
  const auto strict = run(cli::Command::Check, dir.path(), {}, true);
  EXPECT_EQ(strict.code, 1);
  EXPECT_NE(strict.err.find("JustifiedButAttacked"), std::string::npos);
}

TEST(Cli, MissingDirectory) {
  EXPECT_EQ(run(cli::Command::Check, "/nonexistent/saseval/project").code, 3);
  EXPECT_EQ(run(cli::Command::Report, "/nonexistent/saseval/project").code, 3);
}

TEST(Cli, StrideNeedsNoProject) {
  const auto r = run(cli::Command::Stride, "/nonexistent/saseval/project");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Elevation of privilege\tIllegal acquisition, Gain elevated access, "
                       "Gain unauthorized access\n"),
            std::string::npos)
      << r.out;
}

TEST(Cli, AsilTable) {
  const auto r = run(cli::Command::Asil, testing::fixture_dir("uc2"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SG01"), std::string::npos);
  EXPECT_NE(r.out.find("ASIL D"), std::string::npos);
}

TEST(Cli, FmtIsIdempotent) {
  testing::TempDir dir;
  testing::copy_fixture("uc1", dir.path());
  const auto first = run(cli::Command::Fmt, dir.path());
  ASSERT_EQ(first.code, 0) << first.err;
  std::map<fs::path, std::string> after_first;
  for (const auto& p : dsl::project_files(dir.path())) after_first[p] = dsl::read_file(p);
  const auto second = run(cli::Command::Fmt, dir.path());
  ASSERT_EQ(second.code, 0);
  EXPECT_TRUE(second.out.empty()) << second.out;
  for (const auto& [p, text] : after_first) EXPECT_EQ(dsl::read_file(p), text) << p;
  // Formatting keeps the project intact.
  EXPECT_EQ(*dsl::load_directory(dir.path()).project, testing::load_fixture("uc1"));
}

TEST(Cli, ReportIsDeterministic) {
  testing::TempDir out1, out2;
  ASSERT_EQ(run(cli::Command::Report, testing::fixture_dir("uc1"), out1.path()).code, 0);
  ASSERT_EQ(run(cli::Command::Report, testing::fixture_dir("uc1"), out2.path()).code, 0);
  for (const char* f : {"report.md", "matrix.csv"}) {
    EXPECT_EQ(dsl::read_file(out1.path() / f), dsl::read_file(out2.path() / f)) << f;
  }
}

TEST(Cli, CoverageWritesArtifactsAndGates) {
  testing::TempDir dir, out;
  testing::copy_fixture("uc1", dir.path());
  const auto ok = run(cli::Command::Coverage, dir.path(), out.path());
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_TRUE(fs::exists(out.path() / "coverage.md"));
  EXPECT_TRUE(fs::exists(out.path() / "matrix.csv"));

  const auto gaps = run(cli::Command::Coverage, dir.path(), out.path(), false, AsilLevel::QM);
  EXPECT_EQ(gaps.code, 0);
}

TEST(Cli, EmitTestsWritesOneFilePerAdoptedAttack) {
  testing::TempDir out;
  const auto r = run(cli::Command::EmitTests, testing::fixture_dir("uc2"), out.path());
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(out.path() / "tests")) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 6u);
  EXPECT_NE(dsl::read_file(out.path() / "tests" / "AD08.md").find("Opening is rejected"),
            std::string::npos);
}

TEST(Cli, DeriveWritesReingestableStubs) {
  testing::TempDir dir, out;
  testing::copy_fixture("uc2", dir.path());
  const auto r = run(cli::Command::Derive, dir.path(), out.path());
  ASSERT_EQ(r.code, 0) << r.err;
  fs::copy_file(out.path() / "candidates.saseval", dir.path() / "candidates.saseval");
  const auto loaded = dsl::load_directory(dir.path());
  ASSERT_TRUE(loaded.project);
  std::size_t proposed = 0;
  for (const auto& [id, a] : loaded.project->attacks) {
    proposed += a.status == CandidateStatus::Proposed;
  }
  EXPECT_EQ(proposed, derive::derive_candidates(testing::load_fixture("uc2")).size());
  // Proposed stubs do not change coverage.
  EXPECT_EQ(run(cli::Command::Check, dir.path()).code, 0);
}

TEST(Cli, DeriveOnEmptyLibrary) {
  testing::TempDir dir;
  append(dir.path() / "goals.saseval", "goal SG01 { title: \"g\" }\n");
  const auto r = run(cli::Command::Derive, dir.path());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("threat library is empty"), std::string::npos);
}

TEST(Cli, ParseErrorsExitOne) {
  testing::TempDir dir;
  append(dir.path() / "bad.saseval", "goal SG01 { title: \"g\" \n");
  const auto r = run(cli::Command::Check, dir.path());
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind((dir.path() / "bad.saseval").string() + ":2:1: error:", 0), 0u) << r.err;
}

}  // namespace
}  // namespace saseval
