#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "konig/hypergraph.hpp"

namespace konig::testing {

/// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  /// Writes `text` to `name` inside the directory and returns its path.
  std::filesystem::path write(const std::string& name, const std::string& text) const;

 private:
  std::filesystem::path path_;
};

std::string read_file(const std::filesystem::path& path);

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// Runs the command line without the program name.
CliResult run_cli(std::vector<std::string> args);

struct NamedInstance {
  std::string name;
  Hypergraph graph;
};

/// Fixed instances: the generator families at desk scale, the small named
/// graphs, and seeded random hypergraphs and graphs.
std::vector<NamedInstance> corpus();

}  // namespace konig::testing
