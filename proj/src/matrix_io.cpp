#include "simplap/matrix_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "simplap/hypergraph_io.hpp"

namespace simplap {

namespace {

using Triplet = Eigen::Triplet<double, Eigen::Index>;

std::vector<Triplet> row_major_entries(const SparseMat<double>& m) {
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(m.nonZeros()));
  for (Eigen::Index col = 0; col < m.outerSize(); ++col)
    for (SparseMat<double>::InnerIterator it(m, col); it; ++it)
      if (it.value() != 0.0) t.emplace_back(it.row(), it.col(), it.value());
  std::sort(t.begin(), t.end(), [](const Triplet& a, const Triplet& b) {
    return a.row() != b.row() ? a.row() < b.row() : a.col() < b.col();
  });
  return t;
}

double parse_double(const std::string& tok, std::size_t line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError(line, "invalid number '" + tok + "'");
  return v;
}

long long parse_int(const std::string& tok, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) throw ParseError(line, "invalid integer '" + tok + "'");
  return v;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

nlohmann::json index_json(const std::vector<IndexEntry>& index) {
  auto arr = nlohmann::json::array();
  for (const auto& e : index) arr.push_back({e.dim, e.index, e.label});
  return arr;
}

}  // namespace

std::vector<IndexEntry> simplex_index(const SimplicialComplex& c, int p) {
  std::vector<IndexEntry> out;
  const int lo = p == kMixedDim ? 0 : p;
  const int hi = p == kMixedDim ? c.max_dim() : p;
  for (int d = lo; d <= hi; ++d)
    for (std::size_t i = 0; i < c.count(d); ++i) out.push_back({d, i, c.describe({d, i})});
  return out;
}

std::string format_value(double v) {
  if (v == 0.0) return "0";
  if (std::floor(v) == v && std::abs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_matrix_market(std::ostream& out, const SparseMat<double>& m) {
  const auto entries = row_major_entries(m);
  out << "%%MatrixMarket matrix coordinate " << (is_integral(m) ? "integer" : "real") << " general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << entries.size() << '\n';
  for (const auto& e : entries) out << e.row() + 1 << ' ' << e.col() + 1 << ' ' << format_value(e.value()) << '\n';
}

SparseMat<double> read_matrix_market(std::istream& in) {
  std::string raw;
  std::size_t line = 0;
  if (!std::getline(in, raw)) throw ParseError(1, "missing MatrixMarket header");
  ++line;
  std::istringstream header(raw);
  std::string banner, object, format, field, symmetry;
  header >> banner >> object >> format >> field >> symmetry;
  if (banner != "%%MatrixMarket" || lower(object) != "matrix" || lower(format) != "coordinate")
    throw ParseError(line, "expected '%%MatrixMarket matrix coordinate' header");
  field = lower(field);
  symmetry = lower(symmetry);
  if (field != "integer" && field != "real" && field != "pattern") throw ParseError(line, "unsupported field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric") throw ParseError(line, "unsupported symmetry '" + symmetry + "'");

  long long rows = -1, cols = -1, nnz = -1;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty() || raw[0] == '%') continue;
    std::istringstream size_line(raw);
    std::string a, b, c, extra;
    if (!(size_line >> a >> b >> c) || (size_line >> extra)) throw ParseError(line, "expected 'rows cols nnz'");
    rows = parse_int(a, line);
    cols = parse_int(b, line);
    nnz = parse_int(c, line);
    if (rows < 0 || cols < 0 || nnz < 0) throw ParseError(line, "negative size");
    break;
  }
  if (rows < 0) throw ParseError(line, "missing size line");

  std::vector<Triplet> t;
  long long seen = 0;
  while (seen < nnz && std::getline(in, raw)) {
    ++line;
    if (raw.empty() || raw[0] == '%') continue;
    std::istringstream entry(raw);
    std::string si, sj, sv, extra;
    if (!(entry >> si >> sj)) throw ParseError(line, "expected 'row col value'");
    const long long i = parse_int(si, line), j = parse_int(sj, line);
    double v = 1.0;
    if (field != "pattern") {
      if (!(entry >> sv)) throw ParseError(line, "missing value");
      v = parse_double(sv, line);
    }
    if (entry >> extra) throw ParseError(line, "trailing tokens");
    if (i < 1 || i > rows || j < 1 || j > cols) throw ParseError(line, "index out of range");
    t.emplace_back(i - 1, j - 1, v);
    if (symmetry == "symmetric" && i != j) t.emplace_back(j - 1, i - 1, v);
    ++seen;
  }
  if (seen < nnz) throw ParseError(line, "expected " + std::to_string(nnz) + " entries, found " + std::to_string(seen));
  return from_triplets<double>(rows, cols, t);
}

void write_csv(std::ostream& out, const SparseMat<double>& m) {
  const DenseMat<double> d(m);
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.cols(); ++j) out << (j ? "," : "") << format_value(d(i, j));
    out << '\n';
  }
}

SparseMat<double> read_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = raw.find(',', start);
      std::string cell = raw.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      cell.erase(0, cell.find_first_not_of(" \t"));
      cell.erase(cell.find_last_not_of(" \t") + 1);
      row.push_back(parse_double(cell, line));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError(line, "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  const auto nr = static_cast<Eigen::Index>(rows.size());
  const auto nc = rows.empty() ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  std::vector<Triplet> t;
  for (Eigen::Index i = 0; i < nr; ++i)
    for (Eigen::Index j = 0; j < nc; ++j)
      if (rows[i][j] != 0.0) t.emplace_back(i, j, rows[i][j]);
  return from_triplets<double>(nr, nc, t);
}

void write_matrix_json(std::ostream& out, const SparseMat<double>& m, const std::vector<IndexEntry>& rows,
                       const std::vector<IndexEntry>& cols) {
  const DenseMat<double> d(m);
  nlohmann::json j;
  j["rows"] = d.rows();
  j["cols"] = d.cols();
  auto data = nlohmann::json::array();
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < d.cols(); ++k) row.push_back(d(i, k));
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  j["row_index"] = index_json(rows);
  j["col_index"] = index_json(cols);
  out << j.dump() << '\n';
}

void write_spectrum_json(std::ostream& out, const Spectrum<double>& s) {
  nlohmann::json j;
  j["eigenvalues"] = std::vector<double>(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
  j["symmetric"] = s.symmetric;
  j["max_residual"] = s.max_residual;
  out << j.dump() << '\n';
}

void write_spectrum_csv(std::ostream& out, const Spectrum<double>& s) {
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) out << format_value(s.eigenvalues[i]) << '\n';
}

void write_trace_json(std::ostream& out, const DiffusionTrace<double>& trace, const std::vector<IndexEntry>& index) {
  nlohmann::json j;
  j["times"] = trace.times;
  auto states = nlohmann::json::array();
  for (const auto& s : trace.states) states.push_back(std::vector<double>(s.data(), s.data() + s.size()));
  j["states"] = std::move(states);
  j["mode"] = std::string(mode_name(trace.mode));
  j["index"] = index_json(index);
  out << j.dump() << '\n';
}

void write_trace_csv(std::ostream& out, const DiffusionTrace<double>& trace) {
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    out << format_value(trace.times[k]);
    for (Eigen::Index i = 0; i < trace.states[k].size(); ++i) out << ',' << format_value(trace.states[k][i]);
    out << '\n';
  }
}

}  // namespace simplap
