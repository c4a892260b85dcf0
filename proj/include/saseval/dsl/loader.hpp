#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "saseval/diagnostic.hpp"
#include "saseval/dsl/lower.hpp"
#include "saseval/dsl/parser.hpp"
#include "saseval/model.hpp"

namespace saseval::dsl {

inline constexpr std::string_view kFileExtension = ".saseval";

struct SourceFile {
  std::string path;
  std::string text;
};

/// A project assembled from one or more source files.
struct LoadedProject {
  std::vector<SourceFile> sources;
  std::optional<Project> project;
  std::vector<Diagnostic> diagnostics;
  // Block span of each lowered entity, keyed by (kind, id). Justifications
  // use the kind "justify" and the threat id.
  std::map<std::pair<std::string, std::string>, SourceSpan> spans;

  bool ok() const { return project.has_value(); }

  std::optional<SourceSpan> span_of(const std::string& kind, const std::string& id) const {
    if (auto it = spans.find({kind, id}); it != spans.end()) {
      return it->second;
    }
    return std::nullopt;
  }
};

namespace detail {

template <typename T>
void index_spans(const std::vector<Located<T>>& items, const std::string& kind,
                 LoadedProject& out) {
  for (const auto& item : items) {
    if (!item.origin.block) {
      continue;
    }
    std::string id;
    if constexpr (std::is_same_v<T, Justification>) {
      id = item.value.threat;
    } else {
      id = item.value.id;
    }
    out.spans.emplace(std::make_pair(kind, id), *item.origin.block);
  }
}

}  // namespace detail

/// Parses every source (concurrently), then merges and validates them as one
/// project. Cross-file references are allowed.
inline LoadedProject load_sources(std::vector<SourceFile> sources) {
  LoadedProject out;
  std::vector<std::future<Outcome<Document>>> pending;
  pending.reserve(sources.size());
  for (const auto& src : sources) {
    pending.push_back(std::async(std::launch::async, [&src] { return parse(src.text, src.path); }));
  }
  std::vector<Document> docs;
  for (auto& f : pending) {
    Outcome<Document> parsed = f.get();
    for (auto& d : parsed.diagnostics) {
      out.diagnostics.push_back(std::move(d));
    }
    if (parsed.value) {
      docs.push_back(std::move(*parsed.value));
    }
  }
  out.sources = std::move(sources);
  if (has_errors(out.diagnostics)) {
    return out;
  }

  Lowered lowered = lower_entities(docs);
  detail::index_spans(lowered.entities.scenarios, "scenario", out);
  detail::index_spans(lowered.entities.assets, "asset", out);
  detail::index_spans(lowered.entities.threats, "threat", out);
  detail::index_spans(lowered.entities.functions, "function", out);
  detail::index_spans(lowered.entities.hara, "hara", out);
  detail::index_spans(lowered.entities.goals, "goal", out);
  detail::index_spans(lowered.entities.attacks, "attack", out);
  detail::index_spans(lowered.entities.justifications, "justify", out);

  Outcome<Project> result = lower(docs);
  for (auto& d : result.diagnostics) {
    out.diagnostics.push_back(std::move(d));
  }
  out.project = std::move(result.value);
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Project files in a directory (non-recursive), sorted by name.
inline std::vector<std::filesystem::path> project_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == kFileExtension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

/// Loads every `.saseval` file of a directory. Throws std::runtime_error or
/// std::filesystem::filesystem_error on I/O failure.
inline LoadedProject load_directory(const std::filesystem::path& dir) {
  std::vector<SourceFile> sources;
  for (const auto& path : project_files(dir)) {
    sources.push_back({path.string(), read_file(path)});
  }
  return load_sources(std::move(sources));
}

}  // namespace saseval::dsl
