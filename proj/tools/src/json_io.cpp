#include "konig/cli/json_io.hpp"

#include <limits>
#include <string>

#include "konig/rng.hpp"

namespace konig::cli {

namespace {

json header(std::string_view kind, const Hypergraph& h) {
  json doc;
  doc["kind"] = kind;
  doc["vertex_count"] = h.vertex_count();
  doc["edge_count"] = h.edge_count();
  return doc;
}

std::string_view status_text(SolveStatus s) {
  return s == SolveStatus::complete ? "complete" : "budget_exceeded";
}

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw CertificateFormatError(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t read_count(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw CertificateFormatError(std::string("field '") + name + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::vector<std::uint64_t> read_ids(const json& doc, const char* name) {
  const json& v = field(doc, name);
  if (!v.is_array()) throw CertificateFormatError(std::string("field '") + name + "' must be an array");
  std::vector<std::uint64_t> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<std::int64_t>() >= 0))
      throw CertificateFormatError(std::string("field '") + name + "' must hold non-negative integers");
    out.push_back(x.get<std::uint64_t>());
  }
  return out;
}

// Ids too large for a Vertex cannot name a vertex; report them as out of range.
Check read_vertices(const Hypergraph& h, const json& doc, const char* name, VertexList& out) {
  for (std::uint64_t id : read_ids(doc, name)) {
    if (id >= h.vertex_count())
      return Check{Fault::vertex_out_of_range, "vertex " + std::to_string(id) + " out of range"};
    out.push_back(static_cast<Vertex>(id));
  }
  return Check::ok();
}

Matching read_matching(const json& doc) {
  Matching m;
  for (std::uint64_t id : read_ids(doc, "matching")) m.edges.push_back(static_cast<EdgeIndex>(id));
  return m;
}

json optional_ids(const std::optional<VertexList>& ids) {
  return ids ? json(*ids) : json(nullptr);
}

}  // namespace

json certificate_json(const Hypergraph& h, const KonigCertificate& cert) {
  json doc = header("konig", h);
  doc["matching"] = cert.matching.edges;
  doc["cover"] = cert.cover;
  return doc;
}

json certificate_json(const Hypergraph& h, const Matching& matching, const CoverSolution& cover) {
  json doc = header("weak_konig", h);
  doc["matching"] = matching.edges;
  doc["cover"] = cover.cover;
  doc["nu"] = cover.nu;
  return doc;
}

json certificate_json(const Hypergraph& h, const Bipartition& b) {
  json doc = header("bipartition", h);
  doc["side"] = b.side;
  return doc;
}

json certificate_json(const Hypergraph& h, const ExactTransversal& t) {
  json doc = header("exact_transversal", h);
  doc["choice"] = t.choice;
  return doc;
}

Check verify_certificate(const Hypergraph& h, const json& doc) {
  if (!doc.is_object()) throw CertificateFormatError("certificate must be a JSON object");
  const json& kind_field = field(doc, "kind");
  if (!kind_field.is_string()) throw CertificateFormatError("field 'kind' must be a string");
  const std::string kind = kind_field.get<std::string>();

  const std::uint64_t n = read_count(doc, "vertex_count");
  const std::uint64_t m = read_count(doc, "edge_count");
  if (n != h.vertex_count() || m != h.edge_count())
    return Check{Fault::size_mismatch, "certificate was issued for " + std::to_string(n) + " vertices and " +
                                           std::to_string(m) + " edges"};

  if (kind == "konig") {
    KonigCertificate cert{read_matching(doc), {}};
    if (auto c = read_vertices(h, doc, "cover", cert.cover); !c) return c;
    return verify_konig_certificate(h, cert);
  }
  if (kind == "weak_konig") {
    const Matching matching = read_matching(doc);
    VertexList cover;
    if (auto c = read_vertices(h, doc, "cover", cover); !c) return c;
    const std::uint64_t nu = read_count(doc, "nu");
    if (auto c = verify_matching(h, matching); !c) return c;
    if (auto c = verify_cover(h, cover); !c) return c;
    if (matching.size() != nu || cover.size() != nu)
      return Check{Fault::size_mismatch, "matching size " + std::to_string(matching.size()) + ", cover size " +
                                             std::to_string(cover.size()) + ", nu " + std::to_string(nu)};
    return Check::ok();
  }
  if (kind == "bipartition") {
    Bipartition b;
    if (auto c = read_vertices(h, doc, "side", b.side); !c) return c;
    return verify_bipartition(h, b);
  }
  if (kind == "exact_transversal") {
    ExactTransversal t;
    if (auto c = read_vertices(h, doc, "choice", t.choice); !c) return c;
    return verify_exact_transversal(h, t);
  }
  throw CertificateFormatError("unknown certificate kind '" + kind + "'");
}

json report_json(const HeritabilityReport& r) {
  json doc;
  doc["property"] = to_string(r.property);
  doc["max_subset_size"] = r.max_subset_size;
  doc["mode"] = to_string(r.mode);
  doc["subsets_checked"] = r.subsets_checked;
  doc["all_small_hold"] = r.all_small_hold;
  doc["smallest_failing_subset"] =
      r.smallest_failing_subset ? json(r.smallest_failing_subset->indices) : json(nullptr);
  doc["whole_holds"] = r.whole_holds;
  doc["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  doc["prng"] = Rng::kAlgorithm;
  doc["indeterminate_subsets"] = r.indeterminate_subsets;
  doc["whole_indeterminate"] = r.whole_indeterminate;
  return doc;
}

json matching_json(const MatchingResult& r) {
  json doc;
  doc["kind"] = "matching";
  doc["status"] = status_text(r.status);
  doc["size"] = r.size();
  doc["matching"] = r.matching.edges;
  doc["nodes_explored"] = r.stats.nodes_explored;
  return doc;
}

json cover_json(const CoverResult& r) {
  json doc;
  doc["kind"] = "cover";
  doc["status"] = status_text(r.status);
  doc["nu"] = r.solution.nu;
  doc["cover"] = r.solution.cover;
  doc["nodes_explored"] = r.stats.nodes_explored;
  return doc;
}

json bipartition_json(const BipartitionResult& r) {
  json doc;
  doc["kind"] = "bipartition";
  doc["status"] = status_text(r.status);
  doc["exists"] = r.bipartition.has_value();
  doc["side"] = optional_ids(r.bipartition ? std::optional<VertexList>(r.bipartition->side) : std::nullopt);
  doc["nodes_explored"] = r.stats.nodes_explored;
  return doc;
}

json transversal_json(const TransversalResult& r) {
  json doc;
  doc["kind"] = "exact_transversal";
  doc["status"] = status_text(r.status);
  doc["exists"] = r.transversal.has_value();
  doc["choice"] = optional_ids(r.transversal ? std::optional<VertexList>(r.transversal->choice) : std::nullopt);
  doc["nodes_explored"] = r.stats.nodes_explored;
  return doc;
}

json core_json(std::string_view kind, const CoreResult& r) {
  json doc;
  doc["kind"] = kind;
  doc["status"] = r.truth == Truth::indeterminate ? "budget_exceeded" : "complete";
  doc["exists"] = r.core.has_value();
  doc["core"] = r.core ? json(r.core->indices) : json(nullptr);
  return doc;
}

std::string to_line(const json& doc) { return doc.dump() + "\n"; }

}  // namespace konig::cli
