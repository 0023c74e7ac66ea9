#ifndef PETROV_JSONIO_HPP
#define PETROV_JSONIO_HPP

#include <json.hpp>

#include "canonical.hpp"
#include "catalog.hpp"
#include "classify.hpp"
#include "vfield.hpp"

namespace petrov {

// Insertion-ordered JSON keeps report field order stable across runs.
using Json = nlohmann::ordered_json;

Json json_qvec(const QVec& v);
QVec qvec_from_json(const Json& j);
Json json_qmat(const QMat& m);
Json json_form(const SymForm& f);
Json json_report(const ClassificationReport& r);
Json json_action_report(const ActionReport& r);
Json json_canonical(const CanonicalResult& r);

Json catalog_to_json(const Catalog& cat);
// Rebuilds a catalog from JSON on top of the built-in one: serialized tables
// replace their counterparts, code-backed data (pipelines, generators,
// vector-field expressions) is retained by key.
Catalog catalog_from_json(const Json& j);

std::string format_double(double d);

}  // namespace petrov

#endif
