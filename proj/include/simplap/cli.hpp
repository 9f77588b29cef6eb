#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplap::cli {

/// Bad flag combination; exits with status 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class OperatorKind { Fixed, Between, Full, Hodge, Graph };

/// Which square operator a laplacian/spectrum/diffuse run works on.
struct OperatorSelector {
  OperatorKind kind = OperatorKind::Full;
  int k = 0;
  int l = 0;
  int i = 0;
  std::string hodge = "full";  // up | down | full
  bool oriented = false;
};

/// Parses a --target value: "full", "graph", "k=<k>", "k=<k>,l=<l>",
/// "hodge=<up|down|full>,i=<i>[,oriented]".
OperatorSelector parse_target(const std::string& text);

struct RunConfig {
  std::string command;
  std::string input;
  std::optional<std::string> weights;
  std::optional<std::string> out;
  std::optional<std::string> format;  // mm | csv | json
  std::size_t max_card = 16;

  // incidence
  std::optional<int> p, r, q;
  bool all = false;
  bool oriented = false;

  // laplacian / spectrum / diffuse
  OperatorSelector target;
  std::optional<long long> count;
  std::string init;
  double t_end = 1.0;
  long long steps = 10;
  std::string mode = "conservative";
};

/// Entry point behind the `simplap` executable. `args` includes the program
/// name. Returns 0 on success, 1 on data errors and 2 on usage errors; the
/// payload goes to `out` (or --out) only when the whole run succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simplap::cli
