#pragma once

#include <optional>
#include <string>
#include <vector>

#include "checks.hpp"
#include "principal.hpp"
#include "series.hpp"

namespace rrps {

enum class Command { character, exactness, recursion, hilbert, identities, all };

const char *command_name(Command c);
std::optional<Command> command_from_name(const std::string &s);

struct RunConfig {
  Command command = Command::all;
  Label module = Label::vacuum;  // which character a `character` run computes
  int max_charge = 4;
  int max_weight = 12;
  std::string format = "text";  // json | csv | text
  std::optional<std::string> out_path;
  std::optional<std::string> cache_dir;
  int jobs = 1;
};

// Outcome of a run.  Rendering is deterministic: for a fixed config and
// version the bytes agree across runs and jobs counts, except the elapsed_ms
// value (the config echo deliberately omits jobs and the render format).
struct Report {
  std::string command;
  Label module = Label::vacuum;
  int max_charge = 0;
  int max_weight = 0;
  std::optional<std::string> cache_dir;
  std::vector<CheckOutcome> checks;
  std::optional<BivariateSeries> series;  // character and hilbert runs
  long long elapsed_ms = 0;
  std::string version;

  bool passed() const { return all_pass(checks); }
  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
  std::string render(const std::string &format) const;
};

// Execute a command: warm the needed components (cfg.jobs ways in parallel),
// then assemble checks in a fixed order.  Throws std::invalid_argument on a
// bad config (unknown format, nonpositive jobs, negative window).
Report run(const RunConfig &cfg);

// operator identity sweeps shared by `exactness` and the tests; each sweeps
// every basis state of weight4 <= w4cap on its lattice domain
CheckOutcome check_square_zero(int w4cap);
CheckOutcome check_mode_translation(int w4cap, int m_lo, int m_hi);
CheckOutcome check_o_commutes(int w4cap, int m_lo, int m_hi);

}  // namespace rrps
