#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace saseval {

/// Location of a token or node in a source file. Lines and columns are
/// 1-based; columns count bytes.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 1;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { Warning, Error };

inline const char* severity_label(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

/// A single finding from parsing, lowering, validation or analysis.
///
/// `rule` is a stable machine-readable name (e.g. "DanglingReference"),
/// `entity` the id of the entity at fault, `target` the referenced id for
/// reference errors.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string rule;
  std::string entity;
  std::string message;
  std::optional<SourceSpan> span;
  std::string hint;
  std::string target;
};

inline Diagnostic make_error(std::string rule, std::string entity,
                             std::string message) {
  Diagnostic d;
  d.rule = std::move(rule);
  d.entity = std::move(entity);
  d.message = std::move(message);
  return d;
}

/// Renders as `file:line:col: severity: message`. Diagnostics without a span
/// use the entity id in place of the location.
inline std::string format_diagnostic(const Diagnostic& d) {
  std::ostringstream out;
  if (d.span) {
    out << d.span->file << ':' << d.span->line << ':' << d.span->column;
  } else if (!d.entity.empty()) {
    out << d.entity;
  } else {
    out << "<project>";
  }
  out << ": " << severity_label(d.severity) << ": " << d.message;
  if (!d.rule.empty()) {
    out << " [" << d.rule << ']';
  }
  if (!d.hint.empty()) {
    out << " (" << d.hint << ')';
  }
  return out.str();
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

/// Either a value or the diagnostics explaining why there is none. Warnings
/// may accompany a value.
template <typename T>
struct Outcome {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return value.has_value(); }
  explicit operator bool() const { return ok(); }
  const T& operator*() const { return *value; }
  T& operator*() { return *value; }
  const T* operator->() const { return &*value; }
};

}  // namespace saseval
