#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dskit/laurent.hpp"
#include "dskit/orbit.hpp"
#include "dskit/rootsys.hpp"
#include "dskit/unramified.hpp"

namespace dskit::json_io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "ds-kit/1";

/// Throws InputError unless doc["schema"] == "ds-kit/1".
void check_schema(const json& doc);

/// Accepts [re_num, re_den, im_num, im_den], an integer, or a string like "1/2-3i".
Scalar scalar_from_json(const json& j, const std::string& ptr);
json scalar_to_json(const Scalar& s);  // string form

Partition partition_from_json(const json& j, const std::string& ptr);
OrbitSpec orbit_from_json(const json& j, const std::string& ptr);
json orbit_to_json(const OrbitSpec& o);

LaurentMatrix laurent_from_json(const json& j, const std::string& ptr);
json laurent_to_json(const LaurentMatrix& m);

UnramFormalType unram_from_json(const json& j, const std::string& ptr);

json int_vector_to_json(const IntVector& v);
json def_vector_to_json(const DefVector& v);
std::string rational_to_string(const mpq_class& q);

}  // namespace dskit::json_io
