#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "braidrep/bratteli.hpp"
#include "braidrep/drinfeld.hpp"
#include "braidrep/extvariety.hpp"

namespace braidrep::io {

using json = nlohmann::json;

json to_json(const FieldElem& x);
json to_json(const Vec& v);
json to_json(const Matrix& m);
json to_json(const TruncSeries& s);
json to_json(const Associator& a);
json to_json(const SymRep& r);
json to_json(const InfRep& r);
json to_json(const HMatrix& m);
json to_json(const BraidRep& r);
json to_json(const VarietyPoint& p);
json to_json(const BratteliDiagram& d);

// all readers throw InputError on malformed input
FieldElem scalar_from_json(const json& j);
Vec vec_from_json(const json& j);
Matrix matrix_from_json(const json& j);
TruncSeries series_from_json(const json& j);
Associator associator_from_json(const json& j);
SymRep symrep_from_json(const json& j);
InfRep infrep_from_json(const json& j);
HMatrix hmatrix_from_json(const json& j);
BraidRep braidrep_from_json(const json& j);
VarietyPoint point_from_json(const json& j);
BratteliDiagram diagram_from_json(const json& j);

json read_json(const std::filesystem::path& p);
// write to a temporary file next to p, then rename over p
void write_atomic(const std::filesystem::path& p, const std::string& content);
void write_json(const std::filesystem::path& p, const json& j);

inline constexpr const char* kSolverVersion = "braidrep-assoc-1";

}  // namespace braidrep::io
