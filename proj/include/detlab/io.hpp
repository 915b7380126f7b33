#pragma once

// Text formats shared by the CLI and the data/ directory.
//
//   .ideal   ring n=<vars> p=<char>      (p=0: rationals)
//            one polynomial per line
//   .mat     same header, then one row per line, entries separated by ';'
//
// Blank lines and lines starting with '#' are ignored.

#include <string>
#include <string_view>

#include "json.hpp"

#include "detlab/detcheck.hpp"
#include "detlab/hilbert.hpp"
#include "detlab/ideal.hpp"
#include "detlab/matrix.hpp"
#include "detlab/resolution.hpp"

namespace detlab {

inline constexpr int kSchemaVersion = 1;

/// Parses the header line; `field_override` (nonzero) replaces p.
Ring parse_ring_header(std::string_view line, std::size_t line_number = 1);

Ideal parse_ideal(std::string_view text, std::uint32_t field_override = 0);
PolyMatrix parse_matrix(std::string_view text, std::uint32_t field_override = 0);
Ideal read_ideal_file(const std::string& path, std::uint32_t field_override = 0);
PolyMatrix read_matrix_file(const std::string& path, std::uint32_t field_override = 0);

std::string ring_header(const Ring& ring);
std::string format_ideal(const Ideal& ideal);
std::string format_matrix(const PolyMatrix& m);

std::string field_name(const Field& field);

nlohmann::json to_json(const Ideal& ideal);
nlohmann::json to_json(const PolyMatrix& m);
nlohmann::json to_json(const HilbertSeries& hs);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const DegreeMatrix& u);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const RatPoly& p);

}  // namespace detlab
