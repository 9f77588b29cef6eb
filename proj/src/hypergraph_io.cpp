#include "simplap/hypergraph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace simplap {

namespace {

struct ParsedLine {
  std::vector<std::string> labels;
  std::optional<double> weight;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_weight(const std::string& text, std::size_t line) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError(line, "missing weight after '|'");
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) throw ParseError(line, "invalid weight '" + t + "'");
  if (!std::isfinite(value) || value <= 0.0) throw ParseError(line, "weight must be positive, got '" + t + "'");
  return value;
}

// Returns false for blank and comment lines.
bool parse_line(const std::string& raw, std::size_t line, ParsedLine& out) {
  const std::string text = trim(raw);
  if (text.empty() || text.front() == '#') return false;
  out = {};
  std::string body = text;
  if (auto bar = text.find('|'); bar != std::string::npos) {
    body = text.substr(0, bar);
    const std::string rest = text.substr(bar + 1);
    if (rest.find('|') != std::string::npos) throw ParseError(line, "more than one '|'");
    out.weight = parse_weight(rest, line);
  }
  std::istringstream tokens(body);
  for (std::string tok; tokens >> tok;) out.labels.push_back(tok);
  if (out.labels.empty()) throw ParseError(line, "no vertex labels");
  return true;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

}  // namespace

std::vector<Hyperedge> read_hyperedges(std::istream& in) {
  std::vector<Hyperedge> edges;
  std::string raw;
  ParsedLine parsed;
  for (std::size_t line = 1; std::getline(in, raw); ++line)
    if (parse_line(raw, line, parsed)) edges.push_back({std::move(parsed.labels), parsed.weight});
  return edges;
}

std::vector<Hyperedge> read_hyperedges_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_hyperedges(in);
}

void write_hyperedges(std::ostream& out, const std::vector<Hyperedge>& edges) {
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < e.labels.size(); ++i) out << (i ? " " : "") << e.labels[i];
    if (e.weight) out << " | " << std::setprecision(std::numeric_limits<double>::max_digits10) << *e.weight;
    out << '\n';
  }
}

std::vector<SimplexWeight> read_simplex_weights(std::istream& in) {
  std::vector<SimplexWeight> weights;
  std::string raw;
  ParsedLine parsed;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (!parse_line(raw, line, parsed)) continue;
    if (!parsed.weight) throw ParseError(line, "weight assignment needs '| <weight>'");
    weights.push_back({std::move(parsed.labels), *parsed.weight});
  }
  return weights;
}

std::vector<SimplexWeight> read_simplex_weights_file(const std::string& path) {
  auto in = open_or_throw(path);
  return read_simplex_weights(in);
}

}  // namespace simplap
