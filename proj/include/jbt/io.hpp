#pragma once

#include <string>

#include "json.hpp"

#include "jbt/chains.hpp"

namespace jbt {

using Json = nlohmann::ordered_json;

// Element files look like
//   {"system": {"kind": "matrix", "rows": 2, "cols": 2}, "entries": [[[re,im],...],...]}
// with kind in {matrix, symmetric, antisymmetric, spin}; spin uses
// {"kind": "spin", "dim": n} and a flat entries list.
Json system_to_json(const TripleSystem& sys);
TripleSystem system_from_json(const Json& j, double tol);

Json element_to_json(const Element& x);
Element element_from_json(const Json& j, double tol);

Json certificate_to_json(const ChainCertificate& cert);
ChainCertificate certificate_from_json(const Json& j, double tol);

Json verdict_to_json(const RelationVerdict& v);

Element load_element_file(const std::string& path, double tol);
Json load_json_file(const std::string& path);

} // namespace jbt
