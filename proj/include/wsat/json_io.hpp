#pragma once

#include <string>

#include "json.hpp"

#include "wsat/amalgamation.hpp"
#include "wsat/covering.hpp"
#include "wsat/percolation.hpp"
#include "wsat/search.hpp"

namespace wsat {

// ordered_json keeps insertion order, so dumps are byte-stable and fields
// appear in schema order.
using Json = nlohmann::ordered_json;

// { "initial": <hypergraph text>, "steps": [ { "edge": [..],
//   "embedding": { "1": img, ... }, "designated": [..] } ],
//   "final": "complete"|"closure" }
Json certificate_to_json(const PercolationCertificate& cert);
PercolationCertificate certificate_from_json(const Json& j);

// { "X": [..], "k": k, "t": t, "blocks": [[..],..], "delta": d,
//   "rodl_bound": value }
Json cover_to_json(const CoverFamily& c);
CoverFamily cover_from_json(const Json& j);

Json wsat_result_to_json(const WsatResult& r);

// Bundle: hypergraph texts, cover, placements, and the full certificate.
Json construction_to_json(const ConstructionResult& c, const PercolationCertificate& cert);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Json parse_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace wsat
