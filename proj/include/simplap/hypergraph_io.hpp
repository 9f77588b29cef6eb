#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplap/complex.hpp"

namespace simplap {

/// Malformed input line; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Hyperedge file: one hyperedge per line, whitespace-separated vertex labels,
// optional trailing "| <weight>". '#' comment lines and blank lines are skipped.
std::vector<Hyperedge> read_hyperedges(std::istream& in);
std::vector<Hyperedge> read_hyperedges_file(const std::string& path);
void write_hyperedges(std::ostream& out, const std::vector<Hyperedge>& edges);

// Weights file: "<v1> ... <vk> | <weight>" per line, weight mandatory.
std::vector<SimplexWeight> read_simplex_weights(std::istream& in);
std::vector<SimplexWeight> read_simplex_weights_file(const std::string& path);

}  // namespace simplap
