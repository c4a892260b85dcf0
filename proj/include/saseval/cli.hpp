#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "saseval/asil.hpp"
#include "saseval/coverage.hpp"
#include "saseval/derive.hpp"
#include "saseval/dsl/loader.hpp"
#include "saseval/dsl/printer.hpp"
#include "saseval/emit.hpp"
#include "saseval/error.hpp"
#include "saseval/stride.hpp"

namespace saseval::cli {

enum class Command { Check, Asil, Stride, Derive, Coverage, Report, EmitTests, Fmt };

inline constexpr std::array<std::pair<std::string_view, Command>, 8> kCommands{{
    {"check", Command::Check},
    {"asil", Command::Asil},
    {"stride", Command::Stride},
    {"derive", Command::Derive},
    {"coverage", Command::Coverage},
    {"report", Command::Report},
    {"emit-tests", Command::EmitTests},
    {"fmt", Command::Fmt},
}};

inline std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [n, c] : kCommands) {
    if (n == name) return c;
  }
  return std::nullopt;
}

struct CliConfig {
  std::filesystem::path project_dir = ".";
  Command command = Command::Check;
  AsilLevel asil_threshold = AsilLevel::A;
  std::filesystem::path output_dir = "out";
  bool strict = false;
};

enum ExitCode : int {
  kSuccess = 0,
  kInvalid = 1,
  kGaps = 2,
  kIoError = 3,
};

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

// Prints diagnostics; returns true if any counts as an error under `strict`.
inline bool report(const std::vector<Diagnostic>& diags, bool strict, std::ostream& err) {
  bool failed = false;
  for (Diagnostic d : diags) {
    if (strict && d.severity == Severity::Warning) {
      d.severity = Severity::Error;
    }
    failed = failed || d.severity == Severity::Error;
    err << format_diagnostic(d) << '\n';
  }
  return failed;
}

inline std::string stride_table() {
  std::string out = "Threat Type\tAttack Types\n";
  for (auto t : all_values<ThreatType>()) {
    out += std::string(display_label(t)) + '\t';
    bool first = true;
    for (auto a : stride::attack_types_for(t)) {
      if (!first) out += ", ";
      out += display_label(a);
      first = false;
    }
    out += '\n';
  }
  return out;
}

inline std::string asil_table(const Project& p) {
  std::ostringstream out;
  out << "HARA entries\n";
  out << std::left << std::setw(12) << "id" << std::setw(12) << "function" << std::setw(14)
      << "failure_mode" << std::setw(10) << "E/S/C" << std::setw(9) << "rating" << "goal\n";
  for (const auto& [id, h] : p.hara) {
    std::string esc = "-";
    if (h.rating) {
      esc = std::to_string(h.rating->e) + "/" + std::to_string(h.rating->s) + "/" +
            std::to_string(h.rating->c);
    }
    out << std::setw(12) << id << std::setw(12) << h.function << std::setw(14)
        << label(h.failure_mode) << std::setw(10) << esc << std::setw(9)
        << asil::category_label(asil::category_of(asil::entry_asil(h)))
        << h.goal.value_or("-") << '\n';
  }
  out << "\nSafety goals\n";
  for (const auto& [id, g] : p.goals) {
    auto level = asil::rated_goal_asil(id, p);
    out << id << "\t" << (level ? display_label(*level) : std::string_view("unrated")) << "\t"
        << g.title << '\n';
  }
  const auto summary = asil::rating_summary(p);
  out << "\nRating summary\n";
  for (auto cat : asil::kRatingCategories) {
    out << asil::category_label(cat) << "\t" << summary.count(cat) << '\n';
  }
  out << "Total\t" << summary.total << '\n';
  return out.str();
}

// Entities of `p` whose block lives in `file`.
inline Project project_slice(const Project& p, const dsl::LoadedProject& loaded,
                             const std::string& file) {
  Project out;
  auto in_file = [&](const char* kind, const std::string& id) {
    auto span = loaded.span_of(kind, id);
    return span && span->file == file;
  };
  auto copy = [&](const char* kind, const auto& from, auto& into) {
    for (const auto& [id, v] : from) {
      if (in_file(kind, id)) into.emplace(id, v);
    }
  };
  copy("scenario", p.scenarios, out.scenarios);
  copy("asset", p.assets, out.assets);
  copy("threat", p.threats, out.threats);
  copy("function", p.functions, out.functions);
  copy("hara", p.hara, out.hara);
  copy("goal", p.goals, out.goals);
  copy("attack", p.attacks, out.attacks);
  copy("justify", p.justifications, out.justifications);
  return out;
}

inline int run_loaded(const CliConfig& cfg, const dsl::LoadedProject& loaded, std::ostream& out,
                      std::ostream& err) {
  const Project& p = *loaded.project;
  switch (cfg.command) {
    case Command::Check: {
      auto cov = coverage::analyze(p, cfg.asil_threshold);
      std::vector<Diagnostic> findings = cov.warnings;
      for (auto& w : findings) {
        w.span = loaded.span_of("justify", w.entity);
      }
      const bool failed = report(findings, cfg.strict, err);
      for (const auto& g : cov.uncovered_goals) {
        Diagnostic d = make_error("DeductiveGap", g.goal,
                                  "safety goal " + g.goal + " (" +
                                      std::string(display_label(g.asil)) +
                                      ") is not addressed by any attack description");
        d.span = loaded.span_of("goal", g.goal);
        err << format_diagnostic(d) << '\n';
      }
      for (const auto& t : cov.uncovered_threats) {
        Diagnostic d = make_error("InductiveGap", t,
                                  "threat " + t + " is neither attacked nor justified");
        d.span = loaded.span_of("threat", t);
        d.hint = "add an attack description or a `justify " + t + "` block";
        err << format_diagnostic(d) << '\n';
      }
      if (failed) return kInvalid;
      if (cov.has_gaps()) {
        out << "coverage gaps: " << cov.uncovered_goals.size() << " goal(s), "
            << cov.uncovered_threats.size() << " threat(s)\n";
        return kGaps;
      }
      out << "ok: " << p.goals.size() << " safety goals, " << p.threats.size() << " threats, "
          << p.attacks.size() << " attack descriptions\n";
      return kSuccess;
    }
    case Command::Asil:
      out << asil_table(p);
      return kSuccess;
    case Command::Derive: {
      auto candidates = derive::derive_candidates(p);
      Project stubs;
      for (auto& a : derive::candidate_stubs(candidates)) {
        std::string id = a.id;
        stubs.attacks.emplace(std::move(id), std::move(a));
      }
      const auto path = cfg.output_dir / "candidates.saseval";
      write_file(path, dsl::print(stubs));
      out << candidates.size() << " candidate(s) written to " << path.string() << '\n';
      return kSuccess;
    }
    case Command::Coverage: {
      auto cov = coverage::analyze(p, cfg.asil_threshold);
      const bool failed = report(cov.warnings, cfg.strict, err);
      const std::string text = coverage::render_text(p, cov);
      write_file(cfg.output_dir / "coverage.md", text);
      write_file(cfg.output_dir / "matrix.csv", coverage::matrix_csv(p, cov.matrix));
      out << text;
      if (failed) return kInvalid;
      return cov.has_gaps() ? kGaps : kSuccess;
    }
    case Command::Report: {
      auto cov = coverage::analyze(p, cfg.asil_threshold);
      const bool failed = report(cov.warnings, cfg.strict, err);
      write_file(cfg.output_dir / "report.md",
                 emit::emit_report(p, cov, asil::rating_summary(p)));
      write_file(cfg.output_dir / "matrix.csv", coverage::matrix_csv(p, cov.matrix));
      out << "wrote " << (cfg.output_dir / "report.md").string() << " and "
          << (cfg.output_dir / "matrix.csv").string() << '\n';
      return failed ? kInvalid : kSuccess;
    }
    case Command::EmitTests: {
      const auto skeletons = emit::emit_skeletons(p);
      for (const auto& s : skeletons) {
        write_file(cfg.output_dir / "tests" / (s.attack + ".md"), emit::render_skeleton(s, p));
      }
      out << skeletons.size() << " test skeleton(s) written to "
          << (cfg.output_dir / "tests").string() << '\n';
      return kSuccess;
    }
    case Command::Fmt: {
      for (const auto& src : loaded.sources) {
        const std::string canonical = dsl::print(project_slice(p, loaded, src.path));
        if (canonical != src.text) {
          write_file(src.path, canonical);
          out << "formatted " << src.path << '\n';
        }
      }
      return kSuccess;
    }
    case Command::Stride:
      break;
  }
  return kSuccess;
}

}  // namespace detail

/// Runs one command. Exit codes: 0 success, 1 parse/validation errors,
/// 2 coverage gaps (check, coverage), 3 I/O or usage errors.
inline int run(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == Command::Stride) {
    out << detail::stride_table();
    return kSuccess;
  }
  std::error_code ec;
  if (!std::filesystem::is_directory(cfg.project_dir, ec)) {
    err << cfg.project_dir.string() << ": error: project directory does not exist\n";
    return kIoError;
  }
  try {
    const dsl::LoadedProject loaded = dsl::load_directory(cfg.project_dir);
    if (loaded.sources.empty()) {
      err << cfg.project_dir.string() << ": warning: no " << dsl::kFileExtension
          << " files found\n";
    }
    const bool failed = detail::report(loaded.diagnostics, cfg.strict, err);
    if (failed || !loaded.project) {
      return kInvalid;
    }
    return detail::run_loaded(cfg, loaded, out, err);
  } catch (const Error& e) {
    err << cfg.project_dir.string() << ": error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace saseval::cli
