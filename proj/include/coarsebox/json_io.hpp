#pragma once

// JSON encoding of every wire type. Emission is canonical: object keys are
// sorted, cell lists are sorted lexicographically, explicit relations are
// emitted as their upper (x < y) pair lists. Readers validate structure and
// report the offending location.

#include <string>

#include <nlohmann/json.hpp>

#include "coarsebox/box.hpp"
#include "coarsebox/certify.hpp"
#include "coarsebox/coarse.hpp"
#include "coarsebox/dichotomy.hpp"

namespace coarsebox::io {

using nlohmann::json;

json to_json(const BoxShape& s);
BoxShape shape_from_json(const json& j, const std::string& where);

json to_json(const Cell& c);
Cell cell_from_json(const json& j, const std::string& where);

json to_json(const CellSet& a);
CellSet cellset_from_json(const json& j, const std::string& where);

json to_json(const Cover& cov);
Cover cover_from_json(const json& j, const std::string& where);

json to_json(const DichotomyCertificate& cert);
DichotomyCertificate certificate_from_json(const json& j, const BoxShape& shape,
                                           const std::string& where);

json to_json(const GroundSet& g);
GroundSet ground_from_json(const json& j, const std::string& where);

json to_json(const Entourage& e);
Entourage entourage_from_json(const json& j, const std::string& where);

json to_json(const AbstractCover& cov);
AbstractCover abstract_cover_from_json(const json& j, const GroundSet& ground,
                                       const std::string& where);

json to_json(const EBoxMap& f);
EBoxMap ebox_from_json(const json& j, const std::string& where);

json to_json(const Theorem1Verdict& v);
json to_json(const Theorem2Verdict& v);

// field accessors that raise InvalidInputError with a location
const json& field(const json& j, const std::string& key, const std::string& where);
int int_field(const json& j, const std::string& key, const std::string& where);

std::string canonical_dump(const json& j, bool pretty);
json parse_file(const std::string& path);
void write_file(const std::string& path, const json& j, bool pretty);

} // namespace coarsebox::io
