#pragma once

#include <string>

#include "bws/scenario.hpp"

namespace bws {

/// Serializes the run summary (configuration echo, derived quantities,
/// diagnostics) as a JSON document.
std::string summary_json(const ScenarioResult& result);

/// Writes snapshots.csv (time,x,zeta in long form), solid.csv
/// (time,x,xdot), energy.csv (time,e_b,mass) and summary.json into `dir`.
/// The directory is created when missing. Numeric fields are printed with
/// round-trip precision so identical runs produce identical bytes.
void write_outputs(const ScenarioResult& result, const std::string& dir);

}  // namespace bws
