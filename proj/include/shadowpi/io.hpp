#pragma once

#include <string>

#include <gmpxx.h>
#include <json.hpp>

#include "shadowpi/builders.hpp"
#include "shadowpi/cutting.hpp"
#include "shadowpi/finite_group.hpp"
#include "shadowpi/group.hpp"
#include "shadowpi/presentation.hpp"
#include "shadowpi/shadow.hpp"

namespace shadowpi {

using json = nlohmann::json;

// Rationals are [numerator, denominator] pairs of integers; values outside
// the 64-bit range are written as decimal strings.
json rational_to_json(const mpq_class& q);
mpq_class rational_from_json(const json& j);
json point_to_json(const Point& p);
Point point_from_json(const json& j);

json divide_input_to_json(const DivideInput& d);
DivideInput divide_input_from_json(const json& j);

json arrangement_to_json(const LineArrangement& a);
LineArrangement arrangement_from_json(const json& j);

json shadow_to_json(const ShadowedPolyhedron& s);
ShadowedPolyhedron shadow_from_json(const json& j);

json cutting_to_json(const DiskMap& map, const CuttingSystem& cs);
CuttingSystem cutting_from_json(const DiskMap& map, const json& j);

json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const json& j);

json fingerprint_to_json(const Fingerprint& f);
json abelian_to_json(const AbelianInvariants& a);

// Throws ParseError / SchemaMismatch.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace shadowpi
