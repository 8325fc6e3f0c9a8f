#include "drgforge/report.hpp"

#include <cmath>
#include <sstream>

namespace drgforge {

namespace {

std::string family_name(FamilyKind kind, int n) { return GroupFamily{kind, n}.name(); }

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

Json graph_json(const ConnectionSpec& spec, const CayleyGraph& graph) {
  Json j;
  j["family"] = spec.family.name();
  j["n"] = spec.family.n;
  j["R"] = spec.r.members();
  j["T"] = spec.t.members();
  j["order"] = graph.order();
  j["valency"] = graph.valency();
  return j;
}

Json array_json(const IntersectionArray& array) {
  Json j;
  j["text"] = array.to_string();
  j["b"] = array.b;
  j["c"] = array.c;
  return j;
}

Json structure_json(const StructureReport& report) {
  Json j;
  j["isDRG"] = report.is_drg;
  j["array"] = report.array ? Json(report.array->to_string()) : Json(nullptr);
  j["b"] = report.array ? Json(report.array->b) : Json(nullptr);
  j["c"] = report.array ? Json(report.array->c) : Json(nullptr);
  j["order"] = report.order;
  j["valency"] = report.valency;
  j["diameter"] = report.diameter;
  j["bipartite"] = report.bipartite;
  j["antipodal"] = report.antipodal;
  j["antipodalIndex"] = report.antipodal_index ? Json(*report.antipodal_index) : Json(nullptr);
  j["primitive"] = report.primitive;
  return j;
}

Json spectrum_json(const SpectrumReport& report) {
  Json j;
  std::vector<double> values;
  for (double v : report.eigenvalues) {
    const double r = std::round(v);
    values.push_back(std::abs(v - r) < 1e-9 ? r + 0.0 : v);
  }
  j["eigenvalues"] = values;
  j["multiplicities"] = report.multiplicities;
  return j;
}

Json named_json(const NamedGraph& named) {
  static constexpr const char* kinds[] = {"Complete", "Cycle", "CompleteBipartiteMinusMatching",
                                          "CompleteMultipartite", "ConferenceParameters", "Other"};
  Json j;
  j["kind"] = kinds[static_cast<int>(named.kind)];
  j["name"] = named.to_string();
  j["order"] = named.order;
  j["parts"] = named.parts;
  j["partSize"] = named.part_size;
  if (named.kind == NamedKind::ConferenceParameters) j["primeOrder"] = named.prime_order;
  return j;
}

Json design_json(const DesignReport& report) {
  Json j;
  const bool ds = report.kind == DesignKind::DifferenceSet;
  j["kind"] = ds ? "DifferenceSet" : "RelativeDifferenceSet";
  j["parameters"] = report.parameters();
  if (ds) {
    j["n"] = report.n;
    j["k"] = report.k;
    j["lambda"] = report.lambda;
  } else {
    j["m"] = report.m;
    j["r"] = report.r;
    j["k"] = report.k;
    j["mu"] = report.mu;
  }
  j["ambient"] = report.ambient;
  j["forbidden"] = optional_string(report.forbidden);
  j["symmetric"] = report.symmetric;
  j["trivial"] = report.trivial;
  return j;
}

Json equivalence_json(const EquivalenceReport& report) {
  Json j;
  j["graphSide"] = report.graph_side;
  j["designSide"] = report.design_side;
  j["array"] = report.array ? Json(report.array->to_string()) : Json(nullptr);
  j["subgroup"] = optional_string(report.subgroup);
  j["representative"] = report.representative ? Json(report.representative->index) : Json(nullptr);
  j["design"] = report.design ? design_json(*report.design) : Json(nullptr);
  j["closingClaim"] = report.closing_claim ? Json(*report.closing_claim) : Json(nullptr);
  return j;
}

Json certificate_json(const HadamardCertificate& cert) {
  Json j;
  j["family"] = family_name(cert.family, cert.n);
  j["n"] = cert.n;
  j["R"] = cert.r.members();
  j["T"] = cert.t.members();
  Json mu = Json::object();
  for (const auto& [i, v] : cert.mu_check) mu[std::to_string(i)] = v;
  j["muCheck"] = mu;
  j["accepted"] = cert.accepted;
  j["array"] = cert.array ? Json(cert.array->to_string()) : Json(nullptr);
  return j;
}

Json case_json(const TheoremCase& c) {
  Json j;
  j["case"] = to_string(c.kind);
  j["item"] = roman(c.kind).empty() ? Json(nullptr) : Json(roman(c.kind));
  j["structure"] = structure_json(c.structure);
  Json w = Json::object();
  if (c.named) w["named"] = named_json(*c.named);
  if (c.subgroup) w["subgroup"] = *c.subgroup;
  if (c.design) w["design"] = design_json(*c.design);
  if (c.certificate) w["certificate"] = certificate_json(*c.certificate);
  j["witness"] = w;
  return j;
}

Json search_json(const SearchResult& result) {
  Json j;
  j["family"] = family_name(result.family, result.n);
  j["n"] = result.n;
  j["pairCount"] = result.pairs.size();
  Json pairs = Json::array();
  for (const auto& [r, t] : result.pairs) {
    Json p;
    p["R"] = r.members();
    p["T"] = t.members();
    pairs.push_back(p);
  }
  j["pairs"] = pairs;
  j["candidatesExamined"] = result.candidates_examined;
  j["elapsedMs"] = result.elapsed_ms;
  return j;
}

namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_structured()) return false;
  }
  return true;
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(indent * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = j.is_object() ? it.key() : "-";
    const Json& v = it.value();
    if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
      out << pad << key << ":\n";
      render(v, indent + 1, out);
    } else if (v.is_string()) {
      out << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const Json& json) {
  std::ostringstream out;
  if (json.is_structured()) render(json, 0, out);
  else out << json.dump() << "\n";
  return out.str();
}

}  // namespace drgforge
