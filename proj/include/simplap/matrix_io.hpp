#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "simplap/complex.hpp"
#include "simplap/diffusion.hpp"
#include "simplap/simplex_matrix.hpp"
#include "simplap/spectrum.hpp"

namespace simplap {

/// Row/column attribution: (dimension, index within dimension, vertex labels).
struct IndexEntry {
  int dim = 0;
  std::size_t index = 0;
  std::string label;
};

/// Index entries for all simplices of dimension `p`, or of every dimension in
/// global (L_H) order when p == kMixedDim.
std::vector<IndexEntry> simplex_index(const SimplicialComplex& c, int p);

/// Shortest text that reads back to the same double; integral values print
/// without a decimal point.
std::string format_value(double v);

// MatrixMarket coordinate format, entries in row-major order. The field is
// "integer" when every entry is integral and "real" otherwise.
void write_matrix_market(std::ostream& out, const SparseMat<double>& m);
SparseMat<double> read_matrix_market(std::istream& in);

// Dense CSV, one matrix row per line, no header.
void write_csv(std::ostream& out, const SparseMat<double>& m);
SparseMat<double> read_csv(std::istream& in);

void write_matrix_json(std::ostream& out, const SparseMat<double>& m, const std::vector<IndexEntry>& rows,
                       const std::vector<IndexEntry>& cols);

// {"eigenvalues":[...]} plus "symmetric" and "max_residual".
void write_spectrum_json(std::ostream& out, const Spectrum<double>& s);
void write_spectrum_csv(std::ostream& out, const Spectrum<double>& s);

// {"times":[...],"states":[[...]],"mode":"...","index":[[dim,idx,label],...]}
void write_trace_json(std::ostream& out, const DiffusionTrace<double>& trace, const std::vector<IndexEntry>& index);
// One line per checkpoint: time followed by the state.
void write_trace_csv(std::ostream& out, const DiffusionTrace<double>& trace);

}  // namespace simplap
