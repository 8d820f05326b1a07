#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "nlsup/cartesian.hpp"
#include "nlsup/functional.hpp"
#include "nlsup/oscillation.hpp"
#include "nlsup/set_ops.hpp"
#include "nlsup/supremand.hpp"

#include "json.hpp"

namespace nlsup::io {

using json = nlohmann::json;

// Point sets (finite / box union) as JSON:
//   {"kind":"finite","m":1,"tol":1e-9,"points":[[[xi...],[zeta...]],...]}
//   {"kind":"boxunion","m":1,"tol":1e-9,"generators":[...]}
setcore::SetHandle read_set_json(std::istream& in);
setcore::SetHandle read_set_json_file(const std::string& path);
void write_set_json(std::ostream& out, const setcore::SetHandle& s);
void write_set_json_file(const std::string& path, const setcore::SetHandle& s);

// Lattice grids as CSV: header line
//   "# m lo1 hi1 ... lo2m hi2m n1 ... n2m"
// followed by row-major 0/1 cell values.
setcore::LatticeGrid read_grid_csv(std::istream& in);
setcore::LatticeGrid read_grid_csv_file(const std::string& path);
void write_grid_csv(std::ostream& out, const setcore::LatticeGrid& g);
void write_grid_csv_file(const std::string& path, const setcore::LatticeGrid& g);

// Sampled supremands as CSV with the same header and row-major values at 17
// significant digits. "inf" is accepted only when allow_inf is set (envelope
// outputs); plain inputs must be finite.
supremand::SampledSupremand read_supremand_csv(std::istream& in,
                                               bool allow_inf);
supremand::SampledSupremand read_supremand_csv_file(const std::string& path,
                                                    bool allow_inf);
void write_supremand_csv(std::ostream& out,
                         const supremand::SampledSupremand& w);
void write_supremand_csv_file(const std::string& path,
                              const supremand::SampledSupremand& w);

// Simple functions: {"n":1,"cells":[{"a":0.0,"b":0.5,"value":[...]},...]}
functional::SimpleFunction read_simple_function_json(std::istream& in);
functional::SimpleFunction read_simple_function_json_file(
    const std::string& path);
void write_simple_function_json(std::ostream& out,
                                const functional::SimpleFunction& u);
void write_simple_function_json_file(const std::string& path,
                                     const functional::SimpleFunction& u);

// Cartesian families: {"bases":[[[...],[...]],...]}
cartesian::CartesianFamily read_cartesian_json(std::istream& in);
void write_cartesian_json(std::ostream& out,
                          const cartesian::CartesianFamily& f);
void write_cartesian_json_file(const std::string& path,
                               const cartesian::CartesianFamily& f);

// Report serializers. Keys are emitted in sorted order and doubles use
// shortest-round-trip formatting, so equal inputs give byte-identical files.
json hull_report_json(const hulls::HullResult& r);
json envelope_report_json(const supremand::EnvelopeReport& r);
json coercivity_report_json(const supremand::CoercivityReport& r);
json lsc_verdict_json(const functional::LscVerdict& v);
json oscillation_report_json(const oscillation::OscillationReport& r,
                             std::optional<unsigned> seed);

std::string dump(const json& j);  // 2-space indent + trailing newline
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nlsup::io
