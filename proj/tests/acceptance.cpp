// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.
#include <unsupported/Eigen/MatrixFunctions>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "simplap/diffusion.hpp"
#include "simplap/incidence.hpp"
#include "simplap/laplacian.hpp"
#include "simplap/matrix_io.hpp"
#include "simplap/spectrum.hpp"

using namespace simplap;
namespace t = simplap::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream why;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why << what;
    ok = ok && cond;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double min_eig(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

void exact_toy_incidence(Check& c) {
  const auto start = Clock::now();
  const auto toy = t::toy_complex();
  c.expect(incidence(toy, 0, 1).dense() == t::toy::D01(), "D_{0,1} mismatch; ");
  c.expect(incidence(toy, 0, 2).dense() == t::toy::D02(), "D_{0,2} mismatch; ");
  c.expect(incidence(toy, 1, 2).dense() == t::toy::D12(), "D_{1,2} mismatch; ");
  const double s = seconds_since(start);
  c.expect(s < 1.0, "runtime " + std::to_string(s) + " s; ");
}

void exact_toy_fixed(Check& c) {
  const auto start = Clock::now();
  const auto toy = t::toy_complex();
  c.expect(laplacian_between(toy, 0, 1).dense() == t::toy::L01(), "L_{0,1}; ");
  c.expect(laplacian_between(toy, 0, 2).dense() == t::toy::L02(), "L_{0,2}; ");
  c.expect(laplacian_between(toy, 1, 0).dense() == t::toy::L10(), "L_{1,0}; ");
  c.expect(laplacian_between(toy, 1, 2).dense() == t::toy::L12(), "L_{1,2}; ");
  c.expect(laplacian_between(toy, 2, 0).dense() == t::toy::L20(), "L_{2,0}; ");
  c.expect(laplacian_between(toy, 2, 1).dense() == t::toy::L21(), "L_{2,1}; ");
  const Eigen::MatrixXd l0 = laplacian_fixed(toy, 0).dense();
  c.expect(l0 == t::toy::L0(), "L_0; ");
  c.expect(l0(0, 0) == 5 && l0(0, 1) == 2 && l0(1, 0) == 2, "L_0(1,1)/L_0(1,2); ");
  c.expect(laplacian_fixed(toy, 1).dense() == t::toy::L1(), "L_1; ");
  c.expect(laplacian_fixed(toy, 2).dense() == t::toy::L2(), "L_2; ");
  c.expect(seconds_since(start) < 1.0, "runtime; ");
}

void exact_toy_general(Check& c) {
  const auto start = Clock::now();
  const auto toy = t::toy_complex();
  c.expect(incidence_through(toy, 0, 1, 2).dense() == t::toy::D01_through2(), "D^2_{0,1}; ");
  c.expect(incidence_through(toy, 0, 2, 1).dense() == t::toy::D02_through1(), "D^1_{0,2}; ");
  c.expect(incidence_through(toy, 1, 2, 0).dense() == t::toy::D12_through0(), "D^0_{1,2}; ");
  c.expect(incidence_all(toy, 0, 1).dense() == t::toy::D01_all(), "aggregated (0,1); ");
  c.expect(incidence_all(toy, 0, 2).dense() == t::toy::D02_all(), "aggregated (0,2); ");
  c.expect(incidence_all(toy, 1, 2).dense() == t::toy::D12_all(), "aggregated (1,2); ");
  c.expect(Eigen::MatrixXd(laplacian_general(toy).assemble()) == t::toy::LH(), "L_H; ");
  c.expect(seconds_since(start) < 1.0, "runtime; ");
}

void oracle_equivalence(Check& c) {
  const auto start = Clock::now();
  std::mt19937 rng(20240601);
  int complexes = 0;
  for (; complexes < 250 && c.ok; ++complexes) {
    const auto cx = SimplicialComplex::from_hyperedges(t::random_hyperedges(rng, 8, 4, 6));
    const int n = cx.max_dim();
    for (int k = 0; k <= n; ++k)
      c.expect(laplacian_fixed(cx, k).dense() == t::neighbor_count_laplacian(cx, k),
               "L_" + std::to_string(k) + " vs neighbour oracle on complex " + std::to_string(complexes) + "; ");
    for (int p = 0; p <= n; ++p)
      for (int r = p + 1; r <= n; ++r)
        for (int q = 0; q <= n; ++q)
          c.expect(incidence_through(cx, p, r, q).dense() == t::mediated_count(cx, p, r, q),
                   "D^q_{p,r} vs triple loop on complex " + std::to_string(complexes) + "; ");
  }
  c.expect(complexes >= 200, "fewer than 200 complexes; ");
  const double s = seconds_since(start);
  c.expect(s < 60.0, "runtime " + std::to_string(s) + " s; ");
}

void structural_properties(Check& c) {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    const auto cx = SimplicialComplex::from_hyperedges(t::random_hyperedges(rng, 8, 4, 6));
    const int n = cx.max_dim();
    const auto lh = laplacian_general(cx).assemble();
    c.expect(is_symmetric(lh), "L_H not symmetric; ");
    for (int k = 0; k <= n; ++k) {
      const auto lk = laplacian_fixed(cx, k);
      c.expect(min_eig(lk.dense()) >= -1e-9, "L_k not PSD; ");
      for (int l = 0; l <= n; ++l) {
        if (l == k) continue;
        c.expect(min_eig(laplacian_between(cx, k, l).dense()) >= -1e-9, "L_{k,l} not PSD; ");
      }
      c.expect(spectrum(lk).max_residual <= 1e-8, "L_k eigen-residual; ");
    }
    c.expect(spectrum(lh).max_residual <= 1e-8, "L_H eigen-residual; ");
  }
}

void hodge_baseline(Check& c) {
  std::mt19937 rng(31337);
  int graphs = 0;
  while (graphs < 60) {
    const auto cx = SimplicialComplex::from_hyperedges(t::random_graph(rng, 3 + graphs % 12, 0.35));
    if (cx.max_dim() < 1) continue;
    ++graphs;
    c.expect(hodge_up(cx, 0, true).dense() == graph_laplacian(cx).dense(), "oriented hodge_up(0) != graph Laplacian; ");
    c.expect(hodge_up(cx, 0, false).dense() == laplacian_between(cx, 0, 1).dense(), "unoriented hodge_up(0) != L_{0,1}; ");
  }
  c.expect(graphs >= 50, "fewer than 50 graphs; ");
}

void diffusion_checks(Check& c) {
  const auto toy = t::toy_complex();
  const auto lh = laplacian_general(toy).assemble();

  const Eigen::VectorXd delta = Eigen::VectorXd::Unit(lh.rows(), 0);
  const auto mass = diffuse(lh, delta, 2.0, 20, DiffusionMode::ConservativeGenerator);
  for (const auto& s : mass.states) c.expect(std::abs(s.sum() - 1.0) <= 1e-8, "mass not conserved; ");

  const auto l2 = laplacian_fixed(toy, 2).values;
  const Eigen::VectorXd x0 = (Eigen::VectorXd(2) << 1, 0).finished();
  for (double time : {0.1, 0.5, 1.0}) {
    const auto tr = diffuse(l2, x0, time, 1, DiffusionMode::ConservativeGenerator);
    const double expected = 0.5 + 0.5 * std::exp(-6.0 * time);
    c.expect(std::abs(tr.states.back()[0] - expected) <= 1e-6, "two-state closed form at t=" + std::to_string(time) + "; ");
  }

  for (auto mode : {DiffusionMode::ConservativeGenerator, DiffusionMode::RawExponential}) {
    const Eigen::MatrixXd op = mode == DiffusionMode::RawExponential ? Eigen::MatrixXd(lh) : Eigen::MatrixXd(diffusion_generator(lh));
    const auto tr = diffuse(lh, delta, 1.0, 10, mode);
    for (std::size_t k = 0; k < tr.times.size(); ++k) {
      const Eigen::VectorXd ref = Eigen::MatrixXd((-tr.times[k] * op).exp()) * delta;
      c.expect((tr.states[k] - ref).cwiseAbs().maxCoeff() <= 1e-6, std::string(mode_name(mode)) + " vs expm; ");
    }
  }
}

void scale_sanity(Check& c) {
  std::mt19937 rng(123456);
  std::uniform_int_distribution<int> vertex(0, 49);
  std::uniform_int_distribution<int> size(1, 4);
  std::vector<Hyperedge> edges;
  for (int e = 0; e < 200; ++e) {
    Hyperedge h;
    const int k = size(rng);
    while (static_cast<int>(h.labels.size()) < k) {
      const std::string l = "n" + std::to_string(vertex(rng));
      if (std::find(h.labels.begin(), h.labels.end(), l) == h.labels.end()) h.labels.push_back(l);
    }
    edges.push_back(std::move(h));
  }

  auto render = [&edges] {
    const auto cx = SimplicialComplex::from_hyperedges(edges);
    std::ostringstream out;
    write_matrix_market(out, laplacian_general(cx).assemble());
    return out.str();
  };
  const auto start = Clock::now();
  const std::string first = render();
  const double s = seconds_since(start);
  c.expect(s < 10.0, "assembly took " + std::to_string(s) + " s; ");
  c.expect(render() == first, "output differs between runs; ");
  std::reverse(edges.begin(), edges.end());
  c.expect(render() == first, "output depends on hyperedge order; ");
  std::ostringstream info;
  info << "(" << std::fixed << std::setprecision(3) << s << " s) ";
  c.why << info.str();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"1 exact D_{0,1}, D_{0,2}, D_{1,2}", exact_toy_incidence},
      {"2 exact L_{k,l} and L_0, L_1, L_2", exact_toy_fixed},
      {"3 exact D^q, aggregated incidences and 11x11 L_H", exact_toy_general},
      {"4 oracle equivalence on random complexes", oracle_equivalence},
      {"5 symmetry, PSD and eigen-residuals", structural_properties},
      {"6 Hodge baseline vs graph Laplacian", hodge_baseline},
      {"7 diffusion conservation, closed form and expm", diffusion_checks},
      {"8 scale sanity and determinism", scale_sanity},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Check check;
    try {
      run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.why << "exception: " << e.what();
    }
    std::cout << (check.ok ? "PASS " : "FAIL ") << name;
    if (!check.why.str().empty()) std::cout << "  " << check.why.str();
    std::cout << '\n';
    failed += check.ok ? 0 : 1;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all criteria passed"))
            << '\n';
  return failed ? 1 : 0;
}
