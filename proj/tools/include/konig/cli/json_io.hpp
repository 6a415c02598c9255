#pragma once

#include <stdexcept>

#include <json.hpp>

#include "konig/heritability.hpp"
#include "konig/hypergraph.hpp"
#include "konig/properties.hpp"
#include "konig/solvers.hpp"

namespace konig::cli {

using nlohmann::json;

/// A certificate document that is not shaped like any known certificate.
class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Certificate documents. Every kind carries the vertex and edge counts of the
// instance it was issued for; matchings are edge indices into the canonical
// edge list, every other set is a vertex-id array, all sorted ascending.
//
//   {"kind":"konig","vertex_count":n,"edge_count":m,"matching":[..],"cover":[..]}
//   {"kind":"weak_konig","vertex_count":n,"edge_count":m,"matching":[..],"cover":[..],"nu":k}
//   {"kind":"bipartition","vertex_count":n,"edge_count":m,"side":[..]}
//   {"kind":"exact_transversal","vertex_count":n,"edge_count":m,"choice":[..]}

json certificate_json(const Hypergraph& h, const KonigCertificate& cert);
/// Matching and minimum cover of equal size.
json certificate_json(const Hypergraph& h, const Matching& matching, const CoverSolution& cover);
json certificate_json(const Hypergraph& h, const Bipartition& b);
json certificate_json(const Hypergraph& h, const ExactTransversal& t);

/// Re-checks a certificate against `h` without running any solver. A weak
/// König certificate is accepted when its matching is valid, its cover is a
/// cover and both have size nu, which pins nu as the covering number.
/// Throws CertificateFormatError when the document is malformed.
Check verify_certificate(const Hypergraph& h, const json& doc);

json report_json(const HeritabilityReport& report);

json matching_json(const MatchingResult& r);
json cover_json(const CoverResult& r);
json bipartition_json(const BipartitionResult& r);
json transversal_json(const TransversalResult& r);

/// `kind` is "nonbipartite_core", "non_cp_core" or "cover_critical_core".
json core_json(std::string_view kind, const CoreResult& r);

/// Dumps compactly with a single trailing newline.
std::string to_line(const json& doc);

}  // namespace konig::cli
