#include "simplap/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "simplap/complex.hpp"
#include "simplap/diffusion.hpp"
#include "simplap/hypergraph_io.hpp"
#include "simplap/incidence.hpp"
#include "simplap/laplacian.hpp"
#include "simplap/matrix_io.hpp"
#include "simplap/spectrum.hpp"

namespace simplap::cli {

namespace {

struct Operator {
  SparseMat<double> values;
  int row_dim = 0;
  int col_dim = 0;
};

int parse_int_value(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("target: '" + key + "' expects an integer, got '" + text + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

Operator build_operator(const SimplicialComplex& c, const OperatorSelector& sel) {
  switch (sel.kind) {
    case OperatorKind::Full:
      return {laplacian_general<double>(c).assemble(), kMixedDim, kMixedDim};
    case OperatorKind::Graph:
      return {graph_laplacian<double>(c).values, 0, 0};
    case OperatorKind::Fixed:
      return {laplacian_fixed<double>(c, sel.k).values, sel.k, sel.k};
    case OperatorKind::Between:
      return {laplacian_between<double>(c, sel.k, sel.l).values, sel.k, sel.k};
    case OperatorKind::Hodge: {
      SimplexMatrix<double> m;
      if (sel.hodge == "up") m = hodge_up<double>(c, sel.i, sel.oriented);
      else if (sel.hodge == "down") m = hodge_down<double>(c, sel.i, sel.oriented);
      else m = hodge_full<double>(c, sel.i, sel.oriented);
      return {std::move(m.values), sel.i, sel.i};
    }
  }
  throw UsageError("unknown operator");
}

void validate(RunConfig& cfg) {
  if (cfg.command == "incidence") {
    if (cfg.p && cfg.r && !(*cfg.p < *cfg.r)) throw UsageError("p < r required");
    if (cfg.p && *cfg.p < 0) throw UsageError("p >= 0 required");
    if (cfg.q && cfg.all) throw UsageError("--q and --all are mutually exclusive");
    if (cfg.q && *cfg.q < 0) throw UsageError("q >= 0 required");
    if (cfg.oriented && (cfg.q || cfg.all)) throw UsageError("--oriented applies only to plain incidence");
    if (cfg.oriented && *cfg.r != *cfg.p + 1) throw UsageError("r = p + 1 required with --oriented");
  }
  if (cfg.command == "laplacian") {
    const auto& t = cfg.target;
    if (t.kind == OperatorKind::Between && t.k == t.l) throw UsageError("k != l required");
  }
  if (cfg.command == "spectrum" && cfg.count && *cfg.count < 0) throw UsageError("--count must be non-negative");
  if (cfg.command == "diffuse") {
    if (!(cfg.t_end > 0.0)) throw UsageError("--t must be positive");
    if (cfg.steps < 1) throw UsageError("--steps must be at least 1");
    if (cfg.mode != "raw" && cfg.mode != "conservative") throw UsageError("--mode must be raw or conservative");
  }

  const bool matrix_out = cfg.command == "incidence" || cfg.command == "laplacian" || cfg.command == "graph-laplacian";
  if (cfg.format) {
    const auto& f = *cfg.format;
    if (f != "mm" && f != "csv" && f != "json") throw UsageError("--format must be mm, csv or json");
    if (!matrix_out && f == "mm") throw UsageError("--format mm applies only to matrix outputs");
    if (cfg.command == "summary" && f != "json") throw UsageError("summary supports only --format json");
  }
}

DenseVec<double> initial_state(const RunConfig& cfg, const SimplicialComplex& c, const Operator& op) {
  const Eigen::Index n = op.values.rows();
  if (cfg.init == "uniform") return DenseVec<double>::Constant(n, n ? 1.0 / static_cast<double>(n) : 0.0);

  if (cfg.init.rfind("delta:", 0) == 0) {
    const auto labels = split(cfg.init.substr(6), ',');
    const auto ref = c.find(labels);
    if (!ref) throw ComplexError("delta: no simplex {" + cfg.init.substr(6) + "} in the complex");
    Eigen::Index row = 0;
    if (op.row_dim == kMixedDim) {
      for (int d = 0; d < ref->dim; ++d) row += static_cast<Eigen::Index>(c.count(d));
      row += static_cast<Eigen::Index>(ref->index);
    } else if (ref->dim == op.row_dim) {
      row = static_cast<Eigen::Index>(ref->index);
    } else {
      throw ComplexError("delta: simplex {" + cfg.init.substr(6) + "} has dimension " + std::to_string(ref->dim) +
                         ", operator acts on dimension " + std::to_string(op.row_dim));
    }
    DenseVec<double> x = DenseVec<double>::Zero(n);
    x[row] = 1.0;
    return x;
  }

  std::ifstream in(cfg.init);
  if (!in) throw std::runtime_error("cannot open initial state '" + cfg.init + "'");
  std::vector<double> values;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw std::runtime_error("initial state: invalid number '" + tok + "'");
    }
  }
  if (static_cast<Eigen::Index>(values.size()) != n)
    throw std::runtime_error("initial state has " + std::to_string(values.size()) + " values, operator has " +
                             std::to_string(n) + " rows");
  return Eigen::Map<DenseVec<double>>(values.data(), n);
}

void write_matrix(std::ostream& out, const RunConfig& cfg, const SimplicialComplex& c, const Operator& op) {
  const std::string format = cfg.format.value_or("mm");
  if (format == "csv") write_csv(out, op.values);
  else if (format == "json") write_matrix_json(out, op.values, simplex_index(c, op.row_dim), simplex_index(c, op.col_dim));
  else write_matrix_market(out, op.values);
}

void execute(const RunConfig& cfg, std::ostream& out) {
  const auto edges = read_hyperedges_file(cfg.input);
  std::vector<SimplexWeight> weights;
  if (cfg.weights) weights = read_simplex_weights_file(*cfg.weights);
  const auto c = SimplicialComplex::from_hyperedges(edges, weights, ComplexOptions{cfg.max_card});

  if (cfg.command == "summary") {
    if (cfg.format == std::optional<std::string>("json")) {
      std::vector<std::size_t> counts;
      for (int p = 0; p <= c.max_dim(); ++p) counts.push_back(c.count(p));
      out << nlohmann::json{{"n", c.max_dim()}, {"counts", counts}, {"vertices", c.vertex_count()}}.dump() << '\n';
      return;
    }
    out << "n=" << c.max_dim() << ";";
    for (int p = 0; p <= c.max_dim(); ++p) out << " n_" << p << "=" << c.count(p);
    out << '\n';
    return;
  }

  if (cfg.command == "incidence") {
    SimplexMatrix<double> m;
    if (cfg.oriented) m = hodge_incidence<double>(c, *cfg.p, true);
    else if (cfg.all) m = incidence_all<double>(c, *cfg.p, *cfg.r);
    else if (cfg.q) m = incidence_through<double>(c, *cfg.p, *cfg.r, *cfg.q);
    else m = incidence<double>(c, *cfg.p, *cfg.r);
    write_matrix(out, cfg, c, {std::move(m.values), m.row_dim, m.col_dim});
    return;
  }

  if (cfg.command == "laplacian" || cfg.command == "graph-laplacian") {
    write_matrix(out, cfg, c, build_operator(c, cfg.target));
    return;
  }

  const Operator op = build_operator(c, cfg.target);
  if (cfg.command == "spectrum") {
    SpectrumOptions options;
    if (cfg.count) options.count = static_cast<Eigen::Index>(*cfg.count);
    const auto s = spectrum(op.values, options);
    if (cfg.format.value_or("json") == "csv") write_spectrum_csv(out, s);
    else write_spectrum_json(out, s);
    return;
  }

  // diffuse
  const auto x0 = initial_state(cfg, c, op);
  const auto mode = cfg.mode == "raw" ? DiffusionMode::RawExponential : DiffusionMode::ConservativeGenerator;
  const auto trace = diffuse(op.values, x0, cfg.t_end, static_cast<std::size_t>(cfg.steps), mode);
  if (cfg.format.value_or("json") == "csv") write_trace_csv(out, trace);
  else write_trace_json(out, trace, simplex_index(c, op.row_dim));
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("input", cfg.input, "Hyperedge list file")->required();
  sub->add_option("--weights", cfg.weights, "Per-simplex weight assignments");
  sub->add_option("--format", cfg.format, "Output format: mm, csv or json");
  sub->add_option("--out", cfg.out, "Write the payload to this file instead of stdout");
  sub->add_option("--max-card", cfg.max_card, "Largest accepted hyperedge cardinality");
}

}  // namespace

OperatorSelector parse_target(const std::string& text) {
  OperatorSelector sel;
  if (text == "full") return sel;
  if (text == "graph") {
    sel.kind = OperatorKind::Graph;
    return sel;
  }
  std::optional<int> k, l, i;
  std::optional<std::string> hodge;
  for (const auto& part : split(text, ',')) {
    if (part == "oriented") {
      sel.oriented = true;
      continue;
    }
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("target: cannot parse '" + part + "'");
    const std::string key = part.substr(0, eq), value = part.substr(eq + 1);
    if (key == "k") k = parse_int_value(key, value);
    else if (key == "l") l = parse_int_value(key, value);
    else if (key == "i") i = parse_int_value(key, value);
    else if (key == "hodge") {
      if (value != "up" && value != "down" && value != "full") throw UsageError("target: hodge must be up, down or full");
      hodge = value;
    } else {
      throw UsageError("target: unknown key '" + key + "'");
    }
  }
  if (hodge) {
    if (k || l) throw UsageError("target: hodge selectors take i, not k/l");
    if (!i) throw UsageError("target: hodge selector needs i=<dim>");
    sel.kind = OperatorKind::Hodge;
    sel.hodge = *hodge;
    sel.i = *i;
    return sel;
  }
  if (i || sel.oriented) throw UsageError("target: i and oriented apply only to hodge selectors");
  if (!k) throw UsageError("target: expected full, graph, k=<k>[,l=<l>] or hodge=<kind>,i=<i>");
  sel.k = *k;
  if (l) {
    if (*l == *k) throw UsageError("k != l required");
    sel.kind = OperatorKind::Between;
    sel.l = *l;
  } else {
    sel.kind = OperatorKind::Fixed;
  }
  return sel;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("SIMPLAP_MAX_CARD")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(env, &used);
      if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
      cfg.max_card = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      err << "error: SIMPLAP_MAX_CARD must be a positive integer, got '" << env << "'\n";
      return 2;
    }
  }

  CLI::App app{"Hypergraph Laplacians on simplicial complexes", "simplap"};
  app.require_subcommand(1);

  auto* summary = app.add_subcommand("summary", "Simplex counts per dimension");
  add_common(summary, cfg);

  auto* inc = app.add_subcommand("incidence", "Incidence matrices D_{p,r}, D^q_{p,r} and aggregated");
  add_common(inc, cfg);
  inc->add_option("--p", cfg.p, "Lower dimension")->required();
  inc->add_option("--r", cfg.r, "Upper dimension")->required();
  auto* q_opt = inc->add_option("--q", cfg.q, "Mediating dimension");
  auto* all_opt = inc->add_flag("--all", cfg.all, "Sum over every mediating dimension");
  q_opt->excludes(all_opt);
  inc->add_flag("--oriented", cfg.oriented, "Signed boundary matrix (requires r = p + 1)");

  std::optional<int> lap_k, lap_l, lap_i;
  std::optional<std::string> lap_hodge;
  bool lap_full = false, lap_oriented = false;
  auto* lap = app.add_subcommand("laplacian", "L_k, L_{k,l}, the block Laplacian, or Hodge Laplacians");
  add_common(lap, cfg);
  auto* k_opt = lap->add_option("--k", lap_k, "Simplex dimension of L_k");
  lap->add_option("--l", lap_l, "Mediating dimension for L_{k,l}")->needs(k_opt);
  auto* full_opt = lap->add_flag("--full", lap_full, "Generalized block Laplacian");
  auto* hodge_opt = lap->add_option("--hodge", lap_hodge, "Hodge Laplacian kind")->check(CLI::IsMember({"up", "down", "full"}));
  lap->add_option("--i", lap_i, "Hodge dimension")->needs(hodge_opt);
  lap->add_flag("--oriented", lap_oriented, "Use signed boundary matrices")->needs(hodge_opt);
  k_opt->excludes(full_opt)->excludes(hodge_opt);
  full_opt->excludes(hodge_opt);

  auto* graph = app.add_subcommand("graph-laplacian", "L = D - A over the 1-skeleton");
  add_common(graph, cfg);

  std::string target;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Smallest eigenvalues of an operator");
  add_common(spectrum_cmd, cfg);
  spectrum_cmd->add_option("--target", target, "Operator selector")->required();
  spectrum_cmd->add_option("--count", cfg.count, "Number of smallest eigenvalues");

  auto* dif = app.add_subcommand("diffuse", "Linear diffusion on an operator");
  add_common(dif, cfg);
  dif->add_option("--target", target, "Operator selector")->required();
  dif->add_option("--init", cfg.init, "Initial state: file, 'uniform' or 'delta:<v1,v2,...>'")->required();
  dif->add_option("--t", cfg.t_end, "End time")->required();
  dif->add_option("--steps", cfg.steps, "Number of reported checkpoints");
  dif->add_option("--mode", cfg.mode, "raw or conservative");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream payload;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "laplacian") {
      const int chosen = (lap_k ? 1 : 0) + (lap_full ? 1 : 0) + (lap_hodge ? 1 : 0);
      if (chosen != 1) throw UsageError("laplacian needs exactly one of --k, --full, --hodge");
      if (lap_k) {
        cfg.target.kind = lap_l ? OperatorKind::Between : OperatorKind::Fixed;
        cfg.target.k = *lap_k;
        cfg.target.l = lap_l.value_or(0);
      } else if (lap_full) {
        cfg.target.kind = OperatorKind::Full;
      } else {
        if (!lap_i) throw UsageError("--hodge needs --i");
        cfg.target = {OperatorKind::Hodge, 0, 0, *lap_i, *lap_hodge, lap_oriented};
      }
    } else if (cfg.command == "graph-laplacian") {
      cfg.target.kind = OperatorKind::Graph;
    } else if (cfg.command == "spectrum" || cfg.command == "diffuse") {
      cfg.target = parse_target(target);
    }
    validate(cfg);
    execute(cfg, payload);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << *cfg.out << "'\n";
      return 1;
    }
    file << payload.str();
  } else {
    out << payload.str();
  }
  return 0;
}

}  // namespace simplap::cli
