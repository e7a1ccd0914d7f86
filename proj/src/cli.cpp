#include "thinpos/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thinpos/complex.hpp"
#include "thinpos/json_io.hpp"
#include "thinpos/oracle.hpp"
#include "thinpos/ordering.hpp"
#include "thinpos/surface.hpp"
#include "thinpos/thinning.hpp"

namespace thinpos {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

BrickComplex load_complex(const std::string& path) {
  return parse_complex(read_file(path));
}

// --budget beats THINPOS_BUDGET beats the built-in default.
std::uint64_t effective_budget(const CLI::Option* flag, std::uint64_t value,
                               std::uint64_t fallback) {
  if (flag->count() > 0) return value;
  const char* env = std::getenv("THINPOS_BUDGET");
  if (!env) return fallback;
  const std::string text(env);
  try {
    std::size_t used = 0;
    const unsigned long long parsed = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return parsed;
  } catch (const std::exception&) {
    throw Error("THINPOS_BUDGET must be a non-negative integer");
  }
}

json width_json(const Width& w) {
  json list = json::array();
  for (const auto& term : w.terms) list.push_back(format_rational(term));
  return list;
}

json profile_json(const LambdaProfile& p) {
  json list = json::array();
  for (const auto& value : p.values) list.push_back(format_rational(value));
  return list;
}

json ordering_json(const BrickComplex& m, const Ordering& o) {
  return json(ordering_ids(m, o));
}

json surface_json(const BrickComplex& m, const Surface& s) {
  json list = json::array();
  for (int f : s.facets) list.push_back(m.facet_ids[f]);
  return list;
}

json partition_json(const BrickComplex& m, const Partition& p) {
  json sides;
  for (int which = 0; which < 2; ++which) {
    json list = json::array();
    for (int b : p.side_bricks(which)) list.push_back(m.brick_ids[b]);
    sides[which == 0 ? "A" : "B"] = std::move(list);
  }
  return sides;
}

json extremum_json(const Extremum& e) {
  json obj;
  obj["type"] = e.kind == Extremum::Kind::Maximum ? "maximum" : "minimum";
  obj["t"] = e.t;
  obj["plateau"] = json::array({e.plateau_lo, e.plateau_hi});
  obj["extremal"] = e.extremal;
  obj["value"] = format_rational(e.value);
  return obj;
}

json moves_json(const std::vector<MoveRecord>& moves) {
  json list = json::array();
  for (const auto& move : moves) {
    json obj;
    obj["kind"] = move_kind_name(move.kind);
    obj["i"] = move.i;
    if (move.kind != MoveRecord::Kind::Swap) obj["j"] = move.j;
    obj["width_before"] = width_json(move.width_before);
    obj["width_after"] = width_json(move.width_after);
    list.push_back(std::move(obj));
  }
  return list;
}

json complex_json(const BrickComplex& m) {
  return json::parse(serialize_complex(m));
}

json sum_report_json(const SumReport& report) {
  json obj;
  obj["width_lower"] = check_status_name(report.width_lower_ok);
  obj["width_upper"] = check_status_name(report.width_upper_ok);
  obj["trunk_equal"] = check_status_name(report.trunk_equal_ok);
  obj["w1"] = width_json(report.w1);
  obj["w2"] = width_json(report.w2);
  obj["w1_optimal"] = report.w1_optimal;
  obj["w2_optimal"] = report.w2_optimal;
  if (report.sum_width) {
    obj["sum_width"] = width_json(*report.sum_width);
  } else {
    obj["sum_width"] = nullptr;
  }
  obj["sum_width_optimal"] = report.sum_width_optimal;
  obj["constructed_width"] = width_json(report.constructed_width);
  obj["union_width"] = width_json(report.union_width);
  if (report.trunks_exact) {
    obj["tr1"] = format_rational(report.tr1);
    obj["tr2"] = format_rational(report.tr2);
    obj["tr_sum"] = format_rational(report.tr_sum);
  }
  obj["trunks_exact"] = report.trunks_exact;
  obj["notes"] = report.notes;
  return obj;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

CommandResult execute(const std::vector<std::string>& args) {
  CommandResult result;

  CLI::App app{"exact thin position engine for weighted brick complexes", "thinpos"};
  app.require_subcommand(1);

  // Option storage, one block per subcommand.
  std::string file, ordering_file, surface_file, vertex_map_file;
  std::string file_b, brick_a, brick_b, brick_id, catalog_name;
  std::uint64_t budget = 0;
  unsigned long long seed = 0;
  bool use_bnb = false;
  bool verify = false;

  auto* cmd_validate = app.add_subcommand("validate", "report structural flags");
  cmd_validate->add_option("file", file, "complex document")->required();

  auto* cmd_info = app.add_subcommand("info", "sizes, kind and structural flags");
  cmd_info->add_option("file", file, "complex document")->required();

  auto* cmd_profile = app.add_subcommand("profile", "interface weight profile of an ordering");
  cmd_profile->add_option("file", file, "complex document")->required();
  cmd_profile->add_option("--ordering", ordering_file, "ordering document")->required();

  auto* cmd_width = app.add_subcommand("width", "width and trunk of an ordering");
  cmd_width->add_option("file", file, "complex document")->required();
  cmd_width->add_option("--ordering", ordering_file, "ordering document")->required();

  auto* cmd_thin = app.add_subcommand("thin", "width descent from an ordering");
  cmd_thin->add_option("file", file, "complex document")->required();
  cmd_thin->add_option("--ordering", ordering_file, "ordering document")->required();
  auto* thin_budget = cmd_thin->add_option("--budget", budget, "orderings to examine");
  cmd_thin->add_option("--seed", seed, "plateau shuffle seed");

  auto* cmd_certify = app.add_subcommand("certify", "locally thin certificate");
  cmd_certify->add_option("file", file, "complex document")->required();
  cmd_certify->add_option("--ordering", ordering_file, "ordering document")->required();
  auto* certify_budget = cmd_certify->add_option("--budget", budget, "orderings to examine");

  auto* cmd_surfaces = app.add_subcommand("surfaces", "extract and classify level surfaces");
  cmd_surfaces->add_option("file", file, "complex document")->required();
  cmd_surfaces->add_option("--ordering", ordering_file, "ordering document")->required();

  auto* cmd_classify = app.add_subcommand("classify", "classify one surface");
  cmd_classify->add_option("file", file, "complex document")->required();
  cmd_classify->add_option("--surface", surface_file, "surface document")->required();

  auto* cmd_oracle_width = app.add_subcommand("oracle-width", "exact minimum width");
  cmd_oracle_width->add_option("file", file, "complex document")->required();
  cmd_oracle_width->add_flag("--bnb", use_bnb, "branch and bound instead of exhaustion");
  auto* oracle_budget = cmd_oracle_width->add_option("--budget", budget, "node budget");

  auto* cmd_oracle_trunk = app.add_subcommand("oracle-trunk", "exact minimum trunk");
  cmd_oracle_trunk->add_option("file", file, "complex document")->required();

  auto* cmd_sum = app.add_subcommand("connect-sum", "connected sum of two complexes");
  cmd_sum->add_option("file_a", file, "first complex document")->required();
  cmd_sum->add_option("file_b", file_b, "second complex document")->required();
  cmd_sum->add_option("--brick-a", brick_a, "brick removed from the first complex")->required();
  cmd_sum->add_option("--brick-b", brick_b, "brick removed from the second complex")->required();
  cmd_sum->add_option("--vertex-map", vertex_map_file, "vertex bijection document")->required();
  cmd_sum->add_flag("--verify", verify, "check the width and trunk bounds");
  auto* sum_budget = cmd_sum->add_option("--budget", budget, "verification search budget");

  auto* cmd_stabilize = app.add_subcommand("stabilize", "cone a brick from a fresh vertex");
  cmd_stabilize->add_option("file", file, "complex document")->required();
  cmd_stabilize->add_option("--brick", brick_id, "brick to replace")->required();

  auto* cmd_catalog = app.add_subcommand("catalog", "emit a named fixture");
  cmd_catalog->add_option("name", catalog_name, "fixture name")->required();

  auto* cmd_gprofile = app.add_subcommand("generalized-profile",
                                          "degree-weighted profile of an ordering");
  cmd_gprofile->add_option("file", file, "complex document")->required();
  cmd_gprofile->add_option("--ordering", ordering_file, "ordering document")->required();

  auto* cmd_dot = app.add_subcommand("dot", "dual graph in DOT form");
  cmd_dot->add_option("file", file, "complex document")->required();
  cmd_dot->add_option("--surface", surface_file, "surface to highlight");
  cmd_dot->add_option("--ordering", ordering_file, "ordering for height labels");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    result.out = parsed.empty() ? app.help() : parsed.front()->help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  try {
    if (*cmd_validate) {
      const BrickComplex m = load_complex(file);
      const auto report = validate(m);
      json doc;
      doc["pure"] = report.pure;
      doc["strongly_connected"] = report.strongly_connected;
      doc["closed"] = report.closed;
      doc["dimension_even"] = report.dimension_even;
      result.out = dump(doc);
    } else if (*cmd_info) {
      const BrickComplex m = load_complex(file);
      const auto report = validate(m);
      int boundary = 0;
      Rational total(0);
      for (int f = 0; f < m.facet_count(); ++f) {
        if (m.boundary_facet(f)) ++boundary;
        total += m.facet_weights[f];
      }
      json doc;
      doc["dimension"] = m.dimension;
      doc["kind"] = kind_name(m.kind);
      doc["bricks"] = m.brick_count();
      doc["facets"] = m.facet_count();
      doc["ridges"] = m.ridge_count();
      doc["boundary_facets"] = boundary;
      doc["simplicial"] = m.simplicial;
      doc["total_weight"] = format_rational(total);
      doc["pure"] = report.pure;
      doc["strongly_connected"] = report.strongly_connected;
      doc["closed"] = report.closed;
      doc["dimension_even"] = report.dimension_even;
      result.out = dump(doc);
    } else if (*cmd_profile) {
      const BrickComplex m = load_complex(file);
      const Ordering o = parse_ordering(m, read_file(ordering_file));
      const LambdaProfile p = lambda_profile(m, o);
      json doc;
      doc["profile"] = profile_json(p);
      json level_extrema = json::array();
      for (const auto& e : extrema(p)) level_extrema.push_back(extremum_json(e));
      doc["extrema"] = std::move(level_extrema);
      result.out = dump(doc);
    } else if (*cmd_width) {
      const BrickComplex m = load_complex(file);
      const Ordering o = parse_ordering(m, read_file(ordering_file));
      json doc;
      doc["width"] = width_json(width_of(m, o));
      doc["trunk"] = format_rational(trunk_of(m, o));
      result.out = dump(doc);
    } else if (*cmd_thin) {
      const BrickComplex m = load_complex(file);
      const Ordering o = parse_ordering(m, read_file(ordering_file));
      const std::uint64_t b = effective_budget(thin_budget, budget, 1000000);
      const ThinResult thin = thin_search(m, o, b, seed);
      json doc;
      doc["ordering"] = ordering_json(m, thin.ordering);
      doc["width"] = width_json(thin.width);
      doc["explored"] = thin.explored;
      doc["moves"] = moves_json(thin.moves);
      result.out = dump(doc);
    } else if (*cmd_certify) {
      const BrickComplex m = load_complex(file);
      const Ordering o = parse_ordering(m, read_file(ordering_file));
      const std::uint64_t b = effective_budget(certify_budget, budget, 1000000);
      const ThinCertificate cert = certify_locally_thin(m, o, b);
      json doc;
      doc["status"] = certificate_status_name(cert.status);
      doc["witness"] = cert.witness;
      doc["explored"] = cert.explored;
      doc["budget"] = cert.budget;
      result.out = dump(doc);
    } else if (*cmd_surfaces) {
      const BrickComplex m = load_complex(file);
      const Ordering o = parse_ordering(m, read_file(ordering_file));
      json list = json::array();
      for (const auto& extracted : extract_minimal_surfaces(m, o)) {
        json obj = extremum_json(extracted.extremum);
        obj["facets"] = surface_json(m, extracted.surface);
        obj["weight"] = format_rational(surface_weight(m, extracted.surface));
        obj["classification"] = surface_class_name(extracted.classification);
        if (extracted.partition) {
          obj["partition"] = partition_json(m, *extracted.partition);
        }
        obj["conforms"] = extracted.conforms;
        list.push_back(std::move(obj));
      }
      json doc;
      doc["surfaces"] = std::move(list);
      result.out = dump(doc);
    } else if (*cmd_classify) {
      const BrickComplex m = load_complex(file);
      const Surface s = parse_surface(m, read_file(surface_file));
      json doc;
      doc["weight"] = format_rational(surface_weight(m, s));
      doc["proper"] = is_proper(m, s);
      doc["embedded"] = is_embedded(m, s);
      doc["separating"] = is_separating(m, s);
      if (is_proper(m, s)) {
        json moves = json::array();
        for (const auto& move : shortening_moves(m, s)) {
          json entry;
          entry["brick"] = m.brick_ids[move.brick];
          entry["sigma"] = format_rational(move.sigma);
          entry["strict"] = move.strict;
          moves.push_back(std::move(entry));
        }
        doc["shortening_moves"] = std::move(moves);
        doc["stable"] = is_stable_minimal(m, s);
        const UnstableSearch search = find_unstable_partition(m, s);
        json unstable;
        unstable["status"] = search.status == UnstableSearch::Status::Found
                                 ? "found"
                                 : search.status == UnstableSearch::Status::None
                                       ? "none"
                                       : "undetermined";
        if (search.partition) {
          unstable["partition"] = partition_json(m, *search.partition);
        }
        doc["unstable"] = std::move(unstable);
        doc["index"] = index_name(topological_index01(m, s));
      }
      result.out = dump(doc);
    } else if (*cmd_oracle_width) {
      const BrickComplex m = load_complex(file);
      WidthResult best;
      if (use_bnb) {
        const std::uint64_t b = effective_budget(oracle_budget, budget, 20000000);
        best = min_width_bnb(m, b);
      } else {
        best = min_width_exhaustive(m);
      }
      json doc;
      doc["mode"] = use_bnb ? "branch-and-bound" : "exhaustive";
      doc["width"] = width_json(best.width);
      doc["ordering"] = ordering_json(m, best.witness);
      doc["optimal"] = best.optimal;
      doc["explored"] = best.explored;
      result.out = dump(doc);
    } else if (*cmd_oracle_trunk) {
      const BrickComplex m = load_complex(file);
      const TrunkResult best = min_trunk(m);
      json doc;
      doc["trunk"] = format_rational(best.trunk);
      doc["ordering"] = ordering_json(m, best.witness);
      result.out = dump(doc);
    } else if (*cmd_sum) {
      const BrickComplex m1 = load_complex(file);
      const BrickComplex m2 = load_complex(file_b);
      const auto vmap = parse_vertex_map(read_file(vertex_map_file));
      const SumResult sum = connected_sum_simplicial(m1, m2, brick_a, brick_b, vmap);
      json doc = complex_json(sum.complex);
      json seam = json::array();
      for (int f : sum.seam) seam.push_back(sum.complex.facet_ids[f]);
      doc["seam"] = std::move(seam);
      doc["brick_map_1"] = sum.brick_map_1;
      doc["brick_map_2"] = sum.brick_map_2;
      if (verify) {
        const std::uint64_t b = effective_budget(sum_budget, budget, 20000000);
        doc["verify"] = sum_report_json(verify_sum_bounds(m1, m2, brick_a, brick_b, vmap, b));
      }
      result.out = dump(doc);
    } else if (*cmd_stabilize) {
      const BrickComplex m = load_complex(file);
      const StabilizeResult st = stabilize(m, brick_id);
      json doc = complex_json(st.complex);
      json fresh = json::array();
      for (int b : st.new_bricks) fresh.push_back(st.complex.brick_ids[b]);
      doc["new_bricks"] = std::move(fresh);
      result.out = dump(doc);
    } else if (*cmd_catalog) {
      result.out = serialize_complex(catalog(catalog_name));
    } else if (*cmd_gprofile) {
      const BrickComplex m = load_complex(file);
      const Ordering o = parse_ordering(m, read_file(ordering_file));
      const LambdaProfile p = generalized_profile(m, o);
      json doc;
      doc["profile"] = profile_json(p);
      doc["width"] = width_json(width_from_profile(p));
      doc["trunk"] = format_rational(*std::max_element(p.values.begin(), p.values.end()));
      result.out = dump(doc);
    } else if (*cmd_dot) {
      const BrickComplex m = load_complex(file);
      std::optional<Surface> s;
      std::optional<Ordering> o;
      if (!surface_file.empty()) s = parse_surface(m, read_file(surface_file));
      if (!ordering_file.empty()) o = parse_ordering(m, read_file(ordering_file));
      result.out = export_dot(m, s ? &*s : nullptr, o ? &*o : nullptr);
    }
  } catch (const Error& e) {
    result.exit_code = 1;
    result.err = std::string(e.what()) + "\n";
    result.out.clear();
  } catch (const std::exception& e) {
    result.exit_code = 1;
    result.err = std::string("internal error: ") + e.what() + "\n";
    result.out.clear();
  }
  return result;
}

}  // namespace thinpos
