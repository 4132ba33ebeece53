#pragma once

#include <string>
#include <vector>

#include "spinsqueeze/dynamics.hpp"

namespace spinsq {

// Floats are rendered with 10 significant digits ("%.10g"); NaN renders as
// "nan" in CSV and null in JSON.  Rows terminate with LF.
std::string format_double(double v);

const std::vector<std::string>& sweep_default_columns();

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& columns);
std::string sweep_json(const std::vector<SweepRow>& rows, const std::vector<std::string>& columns);

}  // namespace spinsq
