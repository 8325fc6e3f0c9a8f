#include "drgforge/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "drgforge/acceptance.hpp"
#include "drgforge/classify.hpp"
#include "drgforge/design.hpp"
#include "drgforge/drg.hpp"
#include "drgforge/error.hpp"
#include "drgforge/report.hpp"

namespace drgforge {

namespace {

struct Options {
  std::string family = "sd";
  int n = 8;
  std::string r;
  std::string t;
  std::string output = "text";
  int threads = 0;
  bool full = false;
  int k = -1;
  std::string array;
  std::string subgroup;
};

int resolve_threads(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("DRGFORGE_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 0;
}

ConnectionSpec spec_from(const Options& o) {
  const GroupFamily family = GroupFamily::parse(o.family, o.n);
  const int m = rho_modulus(family);
  ConnectionSpec spec{family, ResidueSet::parse(m, o.r), ResidueSet::parse(m, o.t)};
  validate(spec);
  return spec;
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.output == "json") out << j.dump(2) << "\n";
  else out << render_text(j);
}

Json verify(const Options& o) {
  const auto spec = spec_from(o);
  const auto graph = build_from_spec(spec);
  Json j;
  j["graph"] = graph_json(spec, graph);
  if (!is_connected(graph)) {
    j["connected"] = false;
    j["structure"] = nullptr;
    return j;
  }
  j["connected"] = true;
  const auto report =
      check_distance_regular(graph, o.full ? BaseMode::All : BaseMode::Single, resolve_threads(o));
  const bool oracle = distance_module_oracle(graph);
  if (oracle != report.is_drg) {
    throw Error(ErrorCode::Internal, "distance-module oracle disagrees with the layer check");
  }
  j["structure"] = structure_json(report);
  j["named"] = named_json(recognize_named(graph.graph()));
  j["distanceModule"] = oracle;
  return j;
}

Json classify_cmd(const Options& o) {
  const auto spec = spec_from(o);
  const auto graph = build_from_spec(spec);
  const TheoremCase c = classify(spec);
  Json j;
  j["graph"] = graph_json(spec, graph);
  j["classification"] = case_json(c);
  const auto canon = canonicalize(spec);
  j["canonical"] = {{"R", canon.first.members()}, {"T", canon.second.members()}};
  if (is_connected(graph)) {
    j["equivalence"] = {{"bipartiteDiameter3", equivalence_json(check_bipartite_d3_equivalence(graph, o.full))},
                        {"antipodalDiameter4", equivalence_json(check_antipodal_d4_equivalence(graph, o.full))}};
  }
  return j;
}

Json spectrum_cmd(const Options& o) {
  Json j;
  IntersectionArray array;
  if (!o.array.empty()) {
    array = IntersectionArray::parse(o.array);
  } else {
    const auto spec = spec_from(o);
    const auto graph = build_from_spec(spec);
    j["graph"] = graph_json(spec, graph);
    const auto report = check_distance_regular(graph);
    if (!report.is_drg) {
      j["structure"] = structure_json(report);
      j["spectrum"] = nullptr;
      return j;
    }
    array = *report.array;
  }
  j["array"] = array_json(array);
  j["spectrum"] = spectrum_json(intersection_matrix_spectrum(array, array.vertex_count()));
  return j;
}

Json quotient_cmd(const Options& o) {
  const auto spec = spec_from(o);
  const auto graph = build_from_spec(spec);
  const auto q = antipodal_quotient(graph.graph());
  Json j;
  j["graph"] = graph_json(spec, graph);
  j["classCount"] = q.classes.size();
  j["classSize"] = q.classes.front().size();
  j["quotient"] = structure_json(check_distance_regular(q.graph, BaseMode::All, resolve_threads(o)));
  j["named"] = named_json(recognize_named(q.graph));
  // The class of the identity is a subgroup B; compare with Cay(G/B, S/B).
  const Group& group = graph.group();
  std::vector<Element> block;
  for (int v : q.classes.front()) block.push_back({v});
  if (is_subgroup(group, block)) {
    const Subgroup b(group, block, "B");
    if (b.is_normal()) j["matchesCosetQuotient"] = coset_quotient(graph, b) == q.graph;
  }
  return j;
}

Json halve_cmd(const Options& o) {
  const auto spec = spec_from(o);
  const auto graph = build_from_spec(spec);
  const auto h = halved_graphs(graph.graph());
  const int threads = resolve_threads(o);
  Json j;
  j["graph"] = graph_json(spec, graph);
  j["first"] = {{"vertices", h.first_vertices.size()},
                {"structure", structure_json(check_distance_regular(h.first, BaseMode::All, threads))},
                {"named", named_json(recognize_named(h.first))}};
  j["second"] = {{"vertices", h.second_vertices.size()},
                 {"structure", structure_json(check_distance_regular(h.second, BaseMode::All, threads))},
                 {"named", named_json(recognize_named(h.second))}};
  return j;
}

Json search_hadamard_cmd(const Options& o) {
  const GroupFamily family = GroupFamily::parse(o.family, o.n);
  return search_json(search_hadamard_pairs(family.kind, o.n, resolve_threads(o)));
}

Json search_ds_cmd(const Options& o) {
  const Group group(GroupFamily::parse(o.family, o.n));
  std::optional<Subgroup> ambient;
  if (o.subgroup.empty()) {
    ambient = whole_group(group);
  } else {
    for (const auto& h : index2_subgroups(group)) {
      if (h.label() == o.subgroup) ambient = h;
    }
    if (!ambient) throw Error(ErrorCode::InvalidParameter, "no index-2 subgroup labelled " + o.subgroup);
  }
  if (o.k < 0) throw Error(ErrorCode::InvalidParameter, "--k is required");
  const auto sets = search_difference_sets(*ambient, o.k, resolve_threads(o));
  Json j;
  j["family"] = group.family().name();
  j["n"] = o.n;
  j["ambient"] = ambient->label() == "G" ? Json(group.family().name()) : Json(ambient->label());
  j["order"] = ambient->order();
  j["k"] = o.k;
  j["count"] = sets.size();
  Json list = Json::array();
  for (const auto& d : sets) {
    std::vector<int> idx;
    for (Element g : d) idx.push_back(g.index);
    list.push_back(idx);
  }
  j["sets"] = list;
  return j;
}

bool is_validation(ErrorCode code) { return code != ErrorCode::Internal; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-regular Cayley graphs over 2-groups with a cyclic index-2 subgroup", "drgforge"};
  app.require_subcommand(1);
  Options o;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "cyclic, cyclic-x-z2, dihedral, dicyclic, sd, psd")->required();
    sub->add_option("--n", o.n, "family parameter")->required();
    sub->add_option("--R", o.r, "residues of the rho part, e.g. 5,7,9,11");
    sub->add_option("--T", o.t, "residues of the tau part");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--threads", o.threads, "worker threads (default: DRGFORGE_THREADS or all cores)");
  };

  auto* verify_sub = app.add_subcommand("verify", "distance-regularity and intersection array");
  add_spec(verify_sub);
  add_common(verify_sub);
  verify_sub->add_flag("--full", o.full, "check every base vertex");

  auto* classify_sub = app.add_subcommand("classify", "classification case for sd/psd");
  add_spec(classify_sub);
  add_common(classify_sub);
  classify_sub->add_flag("--full", o.full, "check every coset representative");

  auto* spectrum_sub = app.add_subcommand("spectrum", "eigenvalues and multiplicities");
  spectrum_sub->add_option("--family", o.family);
  spectrum_sub->add_option("--n", o.n);
  spectrum_sub->add_option("--R", o.r);
  spectrum_sub->add_option("--T", o.t);
  spectrum_sub->add_option("--array", o.array, "intersection array, e.g. {8,7,4,1;1,4,7,8}");
  add_common(spectrum_sub);

  auto* quotient_sub = app.add_subcommand("quotient", "antipodal quotient");
  add_spec(quotient_sub);
  add_common(quotient_sub);

  auto* halve_sub = app.add_subcommand("halve", "halved graphs");
  add_spec(halve_sub);
  add_common(halve_sub);

  auto* hadamard_sub = app.add_subcommand("search-hadamard", "exhaustive Hadamard pair search");
  hadamard_sub->add_option("--family", o.family)->required();
  hadamard_sub->add_option("--n", o.n)->required();
  add_common(hadamard_sub);

  auto* ds_sub = app.add_subcommand("search-ds", "difference sets in a group or index-2 subgroup");
  ds_sub->add_option("--family", o.family)->required();
  ds_sub->add_option("--n", o.n)->required();
  ds_sub->add_option("--k", o.k, "set size")->required();
  ds_sub->add_option("--subgroup", o.subgroup, "index-2 subgroup label, e.g. \"<rho^2,tau>\"");
  add_common(ds_sub);

  auto* selfcheck_sub = app.add_subcommand("selfcheck", "run the acceptance checks");
  selfcheck_sub->add_option("--threads", o.threads);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (selfcheck_sub->parsed()) {
      AcceptanceOptions options;
      options.threads = resolve_threads(o);
      bool ok = true;
      for (const auto& r : run_acceptance(options)) {
        out << format_result(r) << "\n";
        ok &= r.pass;
      }
      return ok ? kExitOk : kExitInternal;
    }
    Json j;
    if (verify_sub->parsed()) j = verify(o);
    else if (classify_sub->parsed()) j = classify_cmd(o);
    else if (spectrum_sub->parsed()) j = spectrum_cmd(o);
    else if (quotient_sub->parsed()) j = quotient_cmd(o);
    else if (halve_sub->parsed()) j = halve_cmd(o);
    else if (hadamard_sub->parsed()) j = search_hadamard_cmd(o);
    else if (ds_sub->parsed()) j = search_ds_cmd(o);
    emit(j, o, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_validation(e.code()) ? kExitValidation : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace drgforge
