// Command-line front end: saseval <command> [--project DIR] [--out DIR]
//                                  [--threshold QM|A|B|C|D] [--strict]
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "saseval/cli.hpp"

int main(int argc, char** argv) {
  using saseval::cli::CliConfig;
  using saseval::cli::Command;

  CLI::App app{"Safety-driven attack description toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string project_dir = ".";
  std::string out_dir = "out";
  std::string threshold = "A";
  bool strict = false;

  std::map<CLI::App*, Command> commands;
  auto add = [&](const char* name, const char* help, bool needs_project) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (needs_project) {
      sub->add_option("--project", project_dir, "Directory holding .saseval files")
          ->capture_default_str();
      sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
      sub->add_option("--threshold", threshold, "Minimum ASIL a goal needs to require coverage")
          ->check(CLI::IsMember({"QM", "A", "B", "C", "D"}))
          ->capture_default_str();
      sub->add_flag("--strict", strict, "Treat warnings as errors");
    }
    commands[sub] = *saseval::cli::parse_command(name);
  };
  add("check", "Validate the project and gate on coverage gaps", true);
  add("asil", "Print HARA ratings, goal ASILs and the rating summary", true);
  add("stride", "Print the STRIDE threat type to attack type table", false);
  add("derive", "Write candidate attack stubs to <out>/candidates.saseval", true);
  add("coverage", "Deductive and inductive coverage plus traceability matrix", true);
  add("report", "Write <out>/report.md and <out>/matrix.csv", true);
  add("emit-tests", "Write Given/When/Then skeletons to <out>/tests/", true);
  add("fmt", "Rewrite project files in canonical form", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : saseval::cli::kIoError;
  }

  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) {
      cfg.command = command;
    }
  }
  cfg.project_dir = project_dir;
  cfg.output_dir = out_dir;
  cfg.asil_threshold = *saseval::parse_label<saseval::AsilLevel>(threshold);
  cfg.strict = strict;
  return saseval::cli::run(cfg, std::cout, std::cerr);
}
