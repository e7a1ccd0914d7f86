#include "thinpos/json_io.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace thinpos {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw Error("malformed JSON document");
  return doc;
}

long long take_int(const json& value, const std::string& what) {
  if (!value.is_number_integer()) {
    if (value.is_number_float()) {
      throw Error(what + " must be an exact integer, not a float");
    }
    throw Error(what + " must be an integer");
  }
  return value.get<long long>();
}

std::string take_string(const json& value, const std::string& what) {
  if (!value.is_string()) throw Error(what + " must be a string");
  return value.get<std::string>();
}

Weight take_weight(const json& value, const std::string& what) {
  if (value.is_number_integer()) return Weight(value.get<long long>());
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_float()) {
    throw Error(what + " must be exact: give an integer or a \"p/q\" string");
  }
  throw Error(what + " must be an integer or a \"p/q\" string");
}

const json& require_key(const json& doc, const std::string& key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw Error("missing required key \"" + key + "\"");
  return *it;
}

BrickComplex complex_from_parts(const json& doc, int dimension, Kind kind) {
  BrickComplex m;
  m.dimension = dimension;
  m.kind = kind;

  const json& facets = require_key(doc, "facets");
  if (!facets.is_array()) throw Error("\"facets\" must be an array");
  std::map<std::string, int> facet_index;
  std::map<std::string, int> ridge_index;
  std::vector<std::vector<std::string>> facet_ridge_ids;
  for (const json& entry : facets) {
    if (!entry.is_object()) throw Error("facet entries must be objects");
    const std::string id = take_string(require_key(entry, "id"), "facet id");
    if (!facet_index.emplace(id, m.facet_count()).second) {
      throw Error("duplicate facet id \"" + id + "\"");
    }
    m.facet_ids.push_back(id);
    Weight w(1);
    if (entry.contains("weight")) {
      w = take_weight(entry["weight"], "facet weight");
    }
    if (w < 0) throw Error("facet \"" + id + "\" has negative weight");
    m.facet_weights.push_back(w);
    std::vector<std::string> ridges;
    if (entry.contains("ridges")) {
      if (!entry["ridges"].is_array()) throw Error("facet \"ridges\" must be an array");
      for (const json& r : entry["ridges"]) {
        ridges.push_back(take_string(r, "ridge id"));
      }
    }
    facet_ridge_ids.push_back(std::move(ridges));
  }
  for (const auto& ridges : facet_ridge_ids) {
    std::vector<int> indices;
    for (const std::string& id : ridges) {
      auto [it, inserted] = ridge_index.emplace(id, m.ridge_count());
      if (inserted) m.ridge_ids.push_back(id);
      indices.push_back(it->second);
    }
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
      throw Error("a facet lists the same ridge twice");
    }
    m.facet_ridges.push_back(std::move(indices));
  }

  const json& bricks = require_key(doc, "bricks");
  if (!bricks.is_array()) throw Error("\"bricks\" must be an array");
  std::set<std::string> brick_ids;
  m.facet_bricks.assign(m.facet_count(), {});
  for (const json& entry : bricks) {
    if (!entry.is_object()) throw Error("brick entries must be objects");
    const std::string id = take_string(require_key(entry, "id"), "brick id");
    if (!brick_ids.insert(id).second) {
      throw Error("duplicate brick id \"" + id + "\"");
    }
    const int b = m.brick_count();
    m.brick_ids.push_back(id);
    const json& facet_list = require_key(entry, "facets");
    if (!facet_list.is_array()) throw Error("brick \"facets\" must be an array");
    std::vector<int> indices;
    for (const json& f : facet_list) {
      const std::string fid = take_string(f, "facet reference");
      const auto it = facet_index.find(fid);
      if (it == facet_index.end()) {
        throw Error("brick \"" + id + "\" references unknown facet \"" + fid + "\"");
      }
      indices.push_back(it->second);
    }
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
      throw Error("brick \"" + id + "\" lists the same facet twice");
    }
    for (int f : indices) m.facet_bricks[f].push_back(b);
    m.brick_facets.push_back(std::move(indices));
  }
  if (kind == Kind::BrickComplex) {
    for (int f = 0; f < m.facet_count(); ++f) {
      if (m.facet_bricks[f].size() > 2) {
        throw Error("facet \"" + m.facet_ids[f] + "\" lies on " +
                    std::to_string(m.facet_bricks[f].size()) +
                    " bricks; a brick complex allows at most two");
      }
    }
  }
  return m;
}

}  // namespace

BrickComplex parse_complex(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw Error("complex document must be a JSON object");
  const std::string format = take_string(require_key(doc, "format"), "\"format\"");
  if (format != "brickcplx-v1") {
    throw Error("unsupported format \"" + format + "\"; expected \"brickcplx-v1\"");
  }
  const long long dimension = take_int(require_key(doc, "dimension"), "\"dimension\"");
  if (dimension < 1) throw Error("\"dimension\" must be at least 1");
  Kind kind = Kind::BrickComplex;
  if (doc.contains("kind")) {
    kind = kind_from_name(take_string(doc["kind"], "\"kind\""));
  }

  const bool has_simplices = doc.contains("simplices");
  const bool has_parts = doc.contains("bricks") || doc.contains("facets");
  if (has_simplices && has_parts) {
    throw Error("give either \"simplices\" or \"bricks\"/\"facets\", not both");
  }
  if (!has_simplices && !has_parts) {
    throw Error("complex document needs \"simplices\" or \"bricks\"/\"facets\"");
  }

  if (has_simplices) {
    const json& simplices = doc["simplices"];
    if (!simplices.is_array()) throw Error("\"simplices\" must be an array");
    std::vector<std::vector<long long>> tuples;
    for (const json& s : simplices) {
      if (!s.is_array()) throw Error("each simplex must be an array of vertices");
      std::vector<long long> tuple;
      for (const json& v : s) tuple.push_back(take_int(v, "vertex label"));
      tuples.push_back(std::move(tuple));
    }
    std::map<std::vector<long long>, Weight> weights;
    if (doc.contains("weights")) {
      const json& table = doc["weights"];
      if (!table.is_object()) throw Error("\"weights\" must be an object");
      for (const auto& [key, value] : table.items()) {
        std::vector<long long> tuple = parse_vertex_tuple(key);
        std::sort(tuple.begin(), tuple.end());
        const Weight w = take_weight(value, "weight of \"" + key + "\"");
        if (!weights.emplace(std::move(tuple), w).second) {
          throw Error("duplicate weight entry for \"" + key + "\"");
        }
      }
    }
    BrickComplex m = from_simplices(tuples, weights, kind);
    if (m.dimension != dimension) {
      throw Error("\"dimension\" is " + std::to_string(dimension) +
                  " but the simplices have dimension " + std::to_string(m.dimension));
    }
    return m;
  }
  return complex_from_parts(doc, static_cast<int>(dimension), kind);
}

std::string serialize_complex(const BrickComplex& m) {
  json doc;
  doc["format"] = "brickcplx-v1";
  doc["dimension"] = m.dimension;
  doc["kind"] = kind_name(m.kind);
  if (m.simplicial) {
    json simplices = json::array();
    for (const auto& tuple : m.brick_vertices) simplices.push_back(tuple);
    doc["simplices"] = std::move(simplices);
    const bool all_unit = std::all_of(m.facet_weights.begin(), m.facet_weights.end(),
                                      [](const Weight& w) { return w == 1; });
    if (!all_unit) {
      json table = json::object();
      for (int f = 0; f < m.facet_count(); ++f) {
        table[m.facet_ids[f]] = format_rational(m.facet_weights[f]);
      }
      doc["weights"] = std::move(table);
    }
  } else {
    json bricks = json::array();
    for (int b = 0; b < m.brick_count(); ++b) {
      json entry;
      entry["id"] = m.brick_ids[b];
      json facets = json::array();
      for (int f : m.brick_facets[b]) facets.push_back(m.facet_ids[f]);
      entry["facets"] = std::move(facets);
      bricks.push_back(std::move(entry));
    }
    doc["bricks"] = std::move(bricks);
    json facets = json::array();
    for (int f = 0; f < m.facet_count(); ++f) {
      json entry;
      entry["id"] = m.facet_ids[f];
      json ridges = json::array();
      for (int r : m.facet_ridges[f]) ridges.push_back(m.ridge_ids[r]);
      entry["ridges"] = std::move(ridges);
      entry["weight"] = format_rational(m.facet_weights[f]);
      facets.push_back(std::move(entry));
    }
    doc["facets"] = std::move(facets);
  }
  return doc.dump(2) + "\n";
}

Ordering parse_ordering(const BrickComplex& m, const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw Error("ordering document must be a JSON object");
  const json& list = require_key(doc, "ordering");
  if (!list.is_array()) throw Error("\"ordering\" must be an array of brick ids");
  std::vector<std::string> ids;
  for (const json& entry : list) ids.push_back(take_string(entry, "ordering entry"));
  return ordering_from_ids(m, ids);
}

std::string serialize_ordering(const BrickComplex& m, const Ordering& o) {
  json doc;
  doc["ordering"] = ordering_ids(m, o);
  return doc.dump(2) + "\n";
}

Surface parse_surface(const BrickComplex& m, const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw Error("surface document must be a JSON object");
  const json& list = require_key(doc, "facets");
  if (!list.is_array()) throw Error("\"facets\" must be an array of facet ids");
  std::vector<std::string> ids;
  for (const json& entry : list) ids.push_back(take_string(entry, "facet entry"));
  return surface_from_ids(m, ids);
}

std::string serialize_surface(const BrickComplex& m, const Surface& s) {
  json doc;
  std::vector<std::string> ids;
  for (int f : s.facets) ids.push_back(m.facet_ids[f]);
  doc["facets"] = ids;
  return doc.dump(2) + "\n";
}

std::map<long long, long long> parse_vertex_map(const std::string& text) {
  const json doc = parse_text(text);
  if (!doc.is_object()) throw Error("vertex map document must be a JSON object");
  const json& table = require_key(doc, "map");
  if (!table.is_object()) throw Error("\"map\" must be an object");
  std::map<long long, long long> result;
  for (const auto& [key, value] : table.items()) {
    long long from = 0;
    try {
      std::size_t used = 0;
      from = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error("vertex map key \"" + key + "\" is not an integer");
    }
    long long to;
    if (value.is_number_integer()) {
      to = value.get<long long>();
    } else if (value.is_string()) {
      const std::string v = value.get<std::string>();
      try {
        std::size_t used = 0;
        to = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
      } catch (const std::exception&) {
        throw Error("vertex map value \"" + v + "\" is not an integer");
      }
    } else {
      throw Error("vertex map values must be integers");
    }
    if (!result.emplace(from, to).second) {
      throw Error("duplicate vertex map key \"" + key + "\"");
    }
  }
  return result;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string export_dot(const BrickComplex& m, const Surface* s, const Ordering* o) {
  const DualGraph g = dual_graph(m);
  std::vector<int> height(m.brick_count(), 0);
  if (o) {
    check_ordering(m, *o);
    for (int k = 0; k < o->size(); ++k) height[o->bricks[k]] = k + 1;
  }
  std::string out = "graph dual {\n";
  for (int b = 0; b < m.brick_count(); ++b) {
    out += "  b" + std::to_string(b) + " [label=\"" + dot_escape(m.brick_ids[b]);
    if (o) out += "\\nh=" + std::to_string(height[b]);
    out += "\"];\n";
  }
  for (const auto& edge : g.edges) {
    out += "  b" + std::to_string(edge.u) + " -- b" + std::to_string(edge.v) +
           " [label=\"" + dot_escape(m.facet_ids[edge.facet]) + "\"";
    if (s && s->contains(edge.facet)) {
      out += ", color=red, penwidth=2";
    }
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace thinpos
