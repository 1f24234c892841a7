#pragma once

#include <json.hpp>
#include <iosfwd>
#include <string>

#include "widthlab/body.hpp"
#include "widthlab/chebyshev.hpp"
#include "widthlab/experiments.hpp"
#include "widthlab/width.hpp"

namespace widthlab {

using Json = nlohmann::json;

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

/// Compact JSON with sorted keys and shortest round-trip numbers;
/// non-finite numbers are written as null.
std::string dump_json(const Json& j);

Json body_to_json(const Body& body);
/// Throws SchemaError carrying a JSON pointer to the offending field.
Body body_from_json(const Json& j);

Body load_body(const std::string& path);
void save_body(const Body& body, const std::string& path);

Json grid_to_json(const DirectionGrid& grid);
DirectionGrid grid_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Json to_json(const WidthReport& r);
Json to_json(const ChebyshevData& c);
Json to_json(const GramReport& g);

/// Columns theta_or_index,h(u),h(-u),w(u); the first column is the angle
/// for 2-D grids and the direction index otherwise.
void write_width_profile_csv(std::ostream& out, const Body& body, const DirectionGrid& grid);
/// Columns dir_index,u0..u{n-1},w(u) over one direction per antipodal pair.
void write_width_sweep_csv(std::ostream& out, const Body& body, const DirectionGrid& grid);
/// Columns index,sigma.
void write_singular_values_csv(std::ostream& out, const GramReport& g);

}  // namespace widthlab
