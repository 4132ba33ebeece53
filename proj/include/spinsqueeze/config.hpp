#pragma once

#include <string>

#include "spinsqueeze/dynamics.hpp"

namespace spinsq {

// Angle strings accept radians ("0.7853"), or multiples of pi ("0.25pi",
// "pi", "-0.5pi").  Throws ConfigError on anything else.
double parse_angle(const std::string& s);

// "two-axis:ZETA" | "one-axis:GAMMA" | "lipkin:G1,G2" | "lambda:EPS"
HamiltonianSpec parse_hamiltonian_flag(const std::string& s);

// Sweep config document (JSON).  Keys:
//   two_j            integer, or
//   j_range          {"start": j0, "stop": j1, "step": dj}  (inclusive, in units of j; steps of 1/2 allowed)
//   theta, phi       angle (number in radians or "..pi" string)
//   xi               real number; shorthand for theta = 2 atan|xi|, phi = 0 or pi
//   eta_grid         {"start", "stop", "steps"}  (half-open), or
//   hamiltonian      {"variant": "two-axis"|..., params..., "t_grid": {...}}
//   output           {"path": "-"|file, "format": "csv"|"json"}
//   columns          optional array of column names
//   workers          integer >= 1
struct OutputSpec {
  std::string path = "-";
  std::string format = "csv";
};
struct SweepConfig {
  SweepSpec spec;
  OutputSpec output;
};

SweepConfig parse_sweep_config(const std::string& json_text);
SweepConfig load_sweep_config(const std::string& path);

// Effective config (defaults filled in); re-parsing it reproduces the run.
std::string emit_sweep_config(const SweepConfig& cfg);

}  // namespace spinsq
