#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "konig/hypergraph.hpp"

namespace konig::cli {

/// Malformed instance text. what() already includes the line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : std::runtime_error(message + " at line " + std::to_string(line)), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Instance format, one record per line:
//
//   # comment (also allowed after a record)
//   hg <vertex_count>        header, exactly once, before any other record
//   v <id> <label>           optional vertex label
//   e <v1> <v2> ...          edge, 0-based vertex ids, at least one
//
// Blank lines are ignored. Edges are canonicalized on load, so the edge
// indices used by certificates refer to the sorted, deduplicated edge list.

Hypergraph parse_instance(std::string_view text);

/// Canonical text: header, labels, then edges in index order.
std::string emit_instance(const Hypergraph& h);

/// Reads and parses a file; I/O failures raise std::runtime_error.
Hypergraph read_instance_file(const std::filesystem::path& path);

}  // namespace konig::cli
