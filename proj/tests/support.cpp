#include "support.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>

#include "konig/cli/cli.hpp"
#include "konig/generators.hpp"

namespace konig::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static std::atomic<unsigned> counter{0};
  const auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  path_ = fs::temp_directory_path() /
          ("konig-test-" + std::to_string(stamp) + "-" + std::to_string(counter++));
  fs::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ignored;
  fs::remove_all(path_, ignored);
}

fs::path TempDir::write(const std::string& name, const std::string& text) const {
  const fs::path p = path_ / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "konig");
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<NamedInstance> corpus() {
  std::vector<NamedInstance> c{
      {"cofinite(5,1)", cofinite_family(5, 1)},
      {"cofinite(12,1)", cofinite_family(12, 1)},
      {"cofinite(8,2)", cofinite_family(8, 2)},
      {"large_subsets(4,2)", large_subsets_family(4, 2)},
      {"large_subsets(4,3)", large_subsets_family(4, 3)},
      {"large_subsets(6,3)", large_subsets_family(6, 3)},
      {"affine_lines(2)", affine_lines_family(2)},
      {"affine_lines(3)", affine_lines_family(3)},
      {"K4", complete_graph(4)},
      {"K5", complete_graph(5)},
      {"C4", cycle_graph(4)},
      {"C5", cycle_graph(5)},
      {"C6", cycle_graph(6)},
      {"P3", path_graph(3)},
      {"P6", path_graph(6)},
      {"empty(4)", Hypergraph(4, {})},
      {"matched_triangle", Hypergraph(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}, {0, 4}})},
  };
  for (std::uint64_t seed = 0; seed < 60; ++seed)
    c.push_back({"random(" + std::to_string(seed) + ")", random_hypergraph(7, 1 + seed % 8, 4, seed)});
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    c.push_back({"random_graph(" + std::to_string(seed) + ")", random_graph(8, 3 + seed % 10, seed)});
  return c;
}

}  // namespace konig::testing
