#pragma once

#include <filesystem>
#include <random>
#include <stdexcept>
#include <string>

#include "saseval/dsl/loader.hpp"

#ifndef SASEVAL_FIXTURE_DIR
#error "SASEVAL_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace saseval::testing {

inline std::filesystem::path fixture_dir(const std::string& name) {
  return std::filesystem::path(SASEVAL_FIXTURE_DIR) / name;
}

/// Loads a fixture project; throws if it does not validate.
inline Project load_fixture(const std::string& name) {
  auto loaded = dsl::load_directory(fixture_dir(name));
  if (!loaded.project) {
    std::string msg = "fixture " + name + " failed to load:";
    for (const auto& d : loaded.diagnostics) msg += "\n  " + format_diagnostic(d);
    throw std::runtime_error(msg);
  }
  return *loaded.project;
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("saseval-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

/// Copies every file of a fixture into `dest`.
inline void copy_fixture(const std::string& name, const std::filesystem::path& dest) {
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir(name))) {
    std::filesystem::copy_file(entry.path(), dest / entry.path().filename());
  }
}

}  // namespace saseval::testing
