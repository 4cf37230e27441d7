#pragma once

// JSON serialization for complexes, chains, measure chains, certificates,
// and covers. Emission order is fixed so identical inputs always produce
// byte-identical artifacts. Rationals travel as strings "p/q" in lowest
// terms.

#include <json.hpp>

#include <string>

#include "l1hom/complex.hpp"
#include "l1hom/covering.hpp"
#include "l1hom/measure.hpp"
#include "l1hom/seminorm.hpp"

namespace l1hom {

using Json = nlohmann::ordered_json;

// Parses text, converting nlohmann's byte offset into line/column on
// failure (reported via MalformedInput).
Json parse_json(const std::string& text);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

// {"facets": [[v0, v1, ...], ...]}
Json complex_to_json(const SimplicialComplex& x);
SimplicialComplex complex_from_json(const Json& j);

// {"degree": k, "terms": [{"simplex": [...], "coeff": "p/q"}, ...]}
Json chain_to_json(const Chain& c);
// Validates degree and membership when a complex is supplied.
Chain chain_from_json(const Json& j, const SimplicialComplex* x = nullptr);

// Same shape with key "masses" instead of "terms".
Json measure_to_json(const MeasureChain& mu);
MeasureChain measure_from_json(const Json& j,
                               const SimplicialComplex* x = nullptr);

// {"degree": k, "values": [{"simplex": [...], "value": "p/q"}, ...],
//  "pairing": "1/1", "sup_norm": "p/q"}
Json certificate_to_json(const SimplicialComplex& x,
                         const DualCertificate& cert);
DualCertificate certificate_from_json(const Json& j,
                                      const SimplicialComplex& x);

// {"total": {complex}, "base": {complex}, "projection": [[tv, bv], ...]}
Json cover_to_json(const CoveringMap& cover);
CoveringMap cover_from_json(const Json& j);

Json section_to_json(const Section& s);

// FNV-1a 64-bit digest of raw bytes, lowercase hex. Used for input digests
// in run reports.
std::string digest_hex(const std::string& bytes);

}  // namespace l1hom
