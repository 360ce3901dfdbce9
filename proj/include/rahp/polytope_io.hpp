#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rahp/polytope.hpp"

namespace rahp {

/// Malformed polytope text; line() is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Text format:
///
///   polytope <name>
///   vertices <V>
///   face v0 v1 ... v_{k-1}
///   ...
///
/// '#' starts a comment, blank lines are ignored. A stream may hold several
/// records, each opened by its own "polytope" line.
std::vector<CombinatorialPolytope> parse_polytopes(const std::string& text);

/// Parses exactly one record.
CombinatorialPolytope parse_polytope(const std::string& text);

/// Each face rotated to start at its smallest vertex and oriented so the
/// second entry is the smaller neighbour; faces sorted lexicographically.
CombinatorialPolytope canonicalize(const CombinatorialPolytope& p);

/// Canonical text of one record, ending in a newline.
std::string serialize(const CombinatorialPolytope& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace rahp
