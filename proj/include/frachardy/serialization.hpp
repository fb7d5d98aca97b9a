#pragma once

#include "frachardy/criticality.hpp"
#include "frachardy/fractional_operator.hpp"
#include "frachardy/lattice_function.hpp"
#include "frachardy/riesz_kernel.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace frachardy {

using Json = nlohmann::json;

/// Shortest decimal form that reads back to the same double.
std::string format_double(double v);

/// {alpha, d, radius, mass?, entries: [[coords...], value]}
Json to_json(const KernelTable& t);
KernelTable kernel_table_from_json(const Json& j);

/// {d, entries: [[coords...], value]}
Json to_json(const LatticeFunction& f);
LatticeFunction lattice_function_from_json(const Json& j);

Json to_json(const QuadratureSpec& q);
QuadratureSpec quadrature_from_json(const Json& j);

Json to_json(const ScanReport& r);
ScanReport scan_report_from_json(const Json& j);

Json to_json(const NullEnergyReport& r);
Json to_json(const ResidualReport& r);

/// (alpha, radius, partial_sum) rows under '#'-prefixed provenance lines.
void write_scan_csv(std::ostream& os, const ScanReport& r);

} // namespace frachardy
