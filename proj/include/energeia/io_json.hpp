#pragma once

#include "energeia/energy.hpp"
#include "energeia/geometry.hpp"
#include "energeia/matrix.hpp"

#include <json.hpp>

#include <complex>
#include <string>

namespace energeia {

inline constexpr const char* kSchemaTag = "energeia/1";

std::string simplex_key(const Simplex& s); // "[1,2]"
Simplex simplex_from_key(const std::string& key);

nlohmann::json geometry_to_json(const Geometry& g);
Geometry geometry_from_json(const nlohmann::json& j);

nlohmann::json value_to_json(const RingValue& v);
RingValue value_from_json(RingId ring, const nlohmann::json& j);

nlohmann::json energy_to_json(const Geometry& g, const EnergyAssignment& h);
EnergyAssignment energy_from_json(const Geometry& g, const nlohmann::json& j);

nlohmann::json matrix_to_json(const SquareMatrix& m);
std::string matrix_to_csv(const SquareMatrix& m); // numeric/exact scalar cells

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// "0.5+2i", "1", "-3i", "i", "2-i"; whitespace tolerated.
std::complex<double> parse_complex(const std::string& text);

} // namespace energeia
