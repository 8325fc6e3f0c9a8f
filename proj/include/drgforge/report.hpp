#pragma once

#include <string>

#include <json.hpp>

#include "drgforge/classify.hpp"
#include "drgforge/design.hpp"
#include "drgforge/drg.hpp"
#include "drgforge/graph.hpp"

namespace drgforge {

using Json = nlohmann::ordered_json;

/// {family, n, R, T, order, valency}
Json graph_json(const ConnectionSpec& spec, const CayleyGraph& graph);
Json array_json(const IntersectionArray& array);
Json structure_json(const StructureReport& report);
Json spectrum_json(const SpectrumReport& report);
Json named_json(const NamedGraph& named);
Json design_json(const DesignReport& report);
Json equivalence_json(const EquivalenceReport& report);
Json certificate_json(const HadamardCertificate& cert);
Json case_json(const TheoremCase& c);
/// {family, n, pairCount, pairs, candidatesExamined, elapsedMs}
Json search_json(const SearchResult& result);

/// Indented "key: value" lines; arrays of scalars stay on one line.
std::string render_text(const Json& json);

}  // namespace drgforge
