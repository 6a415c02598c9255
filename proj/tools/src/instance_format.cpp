#include "konig/cli/instance_format.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace konig::cli {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::optional<std::uint64_t> to_number(std::string_view word) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Hypergraph parse_instance(std::string_view text) {
  std::optional<std::size_t> vertex_count;
  std::vector<VertexList> edges;
  std::vector<std::string> labels;
  std::size_t line_no = 0;

  while (!text.empty()) {
    ++line_no;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string_view tag = words[0];

    if (tag == "hg") {
      if (vertex_count) throw ParseError("duplicate header", line_no);
      if (words.size() != 2) throw ParseError("malformed header", line_no);
      const auto n = to_number(words[1]);
      if (!n || *n > std::numeric_limits<Vertex>::max()) throw ParseError("malformed header", line_no);
      vertex_count = static_cast<std::size_t>(*n);
      continue;
    }
    if (!vertex_count) throw ParseError("malformed header", line_no);

    if (tag == "e") {
      if (words.size() == 1) throw ParseError("empty edge", line_no);
      VertexList edge;
      for (std::size_t i = 1; i < words.size(); ++i) {
        const auto v = to_number(words[i]);
        if (!v) throw ParseError("invalid vertex id '" + std::string(words[i]) + "'", line_no);
        if (*v >= *vertex_count)
          throw ParseError("vertex " + std::to_string(*v) + " out of range", line_no);
        edge.push_back(static_cast<Vertex>(*v));
      }
      edges.push_back(std::move(edge));
    } else if (tag == "v") {
      if (words.size() < 3) throw ParseError("malformed label", line_no);
      const auto v = to_number(words[1]);
      if (!v) throw ParseError("invalid vertex id '" + std::string(words[1]) + "'", line_no);
      if (*v >= *vertex_count) throw ParseError("vertex " + std::to_string(*v) + " out of range", line_no);
      if (labels.empty()) labels.resize(*vertex_count);
      const std::size_t start = static_cast<std::size_t>(words[2].data() - line.data());
      labels[*v] = std::string(trim(line.substr(start)));
    } else {
      throw ParseError("unknown record '" + std::string(tag) + "'", line_no);
    }
  }
  if (!vertex_count) throw ParseError("malformed header", line_no == 0 ? 1 : line_no);
  return Hypergraph(*vertex_count, std::move(edges), std::move(labels));
}

std::string emit_instance(const Hypergraph& h) {
  std::ostringstream out;
  out << "hg " << h.vertex_count() << '\n';
  for (std::size_t v = 0; v < h.labels().size(); ++v)
    if (!h.labels()[v].empty()) out << "v " << v << ' ' << h.labels()[v] << '\n';
  for (const auto& e : h.edges()) {
    out << 'e';
    for (Vertex v : e) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

Hypergraph read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace konig::cli
