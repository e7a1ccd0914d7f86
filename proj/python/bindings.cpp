#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "thinpos/complex.hpp"
#include "thinpos/json_io.hpp"
#include "thinpos/oracle.hpp"
#include "thinpos/ordering.hpp"
#include "thinpos/surface.hpp"
#include "thinpos/thinning.hpp"

namespace py = pybind11;

namespace {

using thinpos::BrickComplex;

std::vector<std::string> width_terms(const thinpos::Width& w) {
  std::vector<std::string> out;
  for (const auto& term : w.terms) out.push_back(thinpos::format_rational(term));
  return out;
}

std::vector<std::string> profile_values(const thinpos::LambdaProfile& p) {
  std::vector<std::string> out;
  for (const auto& value : p.values) out.push_back(thinpos::format_rational(value));
  return out;
}

thinpos::Ordering to_ordering(const BrickComplex& m, const std::vector<std::string>& ids) {
  return thinpos::ordering_from_ids(m, ids);
}

py::dict partition_dict(const BrickComplex& m, const thinpos::Partition& p) {
  py::list a, b;
  for (int brick : p.side_bricks(0)) a.append(m.brick_ids[brick]);
  for (int brick : p.side_bricks(1)) b.append(m.brick_ids[brick]);
  py::dict out;
  out["A"] = std::move(a);
  out["B"] = std::move(b);
  return out;
}

}  // namespace

PYBIND11_MODULE(thinpos_py, mod) {
  mod.doc() = "exact thin position engine for weighted brick complexes";

  py::register_exception<thinpos::Error>(mod, "EngineError", PyExc_ValueError);

  py::class_<BrickComplex>(mod, "BrickComplex")
      .def_readonly("dimension", &BrickComplex::dimension)
      .def_property_readonly("kind",
                             [](const BrickComplex& m) { return thinpos::kind_name(m.kind); })
      .def_readonly("brick_ids", &BrickComplex::brick_ids)
      .def_readonly("facet_ids", &BrickComplex::facet_ids)
      .def("__repr__", [](const BrickComplex& m) {
        return "<BrickComplex " + std::to_string(m.brick_count()) + " bricks, " +
               std::to_string(m.facet_count()) + " facets>";
      });

  mod.def("catalog", &thinpos::catalog, py::arg("name"));
  mod.def("parse", &thinpos::parse_complex, py::arg("text"));
  mod.def("serialize", &thinpos::serialize_complex, py::arg("complex"));

  mod.def("validate", [](const BrickComplex& m) {
    const auto report = thinpos::validate(m);
    py::dict out;
    out["pure"] = report.pure;
    out["strongly_connected"] = report.strongly_connected;
    out["closed"] = report.closed;
    out["dimension_even"] = report.dimension_even;
    return out;
  });

  mod.def("profile", [](const BrickComplex& m, const std::vector<std::string>& ordering) {
    return profile_values(thinpos::lambda_profile(m, to_ordering(m, ordering)));
  });

  mod.def("width", [](const BrickComplex& m, const std::vector<std::string>& ordering) {
    return width_terms(thinpos::width_of(m, to_ordering(m, ordering)));
  });

  mod.def("trunk", [](const BrickComplex& m, const std::vector<std::string>& ordering) {
    return thinpos::format_rational(thinpos::trunk_of(m, to_ordering(m, ordering)));
  });

  mod.def(
      "thin",
      [](const BrickComplex& m, const std::vector<std::string>& ordering,
         std::uint64_t budget, unsigned long long seed) {
        const auto result = thinpos::thin_search(m, to_ordering(m, ordering), budget, seed);
        py::dict out;
        out["ordering"] = thinpos::ordering_ids(m, result.ordering);
        out["width"] = width_terms(result.width);
        out["explored"] = result.explored;
        return out;
      },
      py::arg("complex"), py::arg("ordering"), py::arg("budget") = 1000000,
      py::arg("seed") = 0);

  mod.def(
      "certify",
      [](const BrickComplex& m, const std::vector<std::string>& ordering,
         std::uint64_t budget) {
        const auto cert = thinpos::certify_locally_thin(m, to_ordering(m, ordering), budget);
        py::dict out;
        out["status"] = thinpos::certificate_status_name(cert.status);
        out["witness"] = cert.witness;
        out["explored"] = cert.explored;
        return out;
      },
      py::arg("complex"), py::arg("ordering"), py::arg("budget") = 1000000);

  mod.def("surfaces", [](const BrickComplex& m, const std::vector<std::string>& ordering) {
    py::list out;
    for (const auto& e : thinpos::extract_minimal_surfaces(m, to_ordering(m, ordering))) {
      py::dict entry;
      entry["type"] =
          e.extremum.kind == thinpos::Extremum::Kind::Maximum ? "maximum" : "minimum";
      entry["t"] = e.extremum.t;
      entry["value"] = thinpos::format_rational(e.extremum.value);
      std::vector<std::string> facets;
      for (int f : e.surface.facets) facets.push_back(m.facet_ids[f]);
      entry["facets"] = facets;
      entry["classification"] = thinpos::surface_class_name(e.classification);
      entry["partition"] = e.partition ? py::object(partition_dict(m, *e.partition))
                                       : py::object(py::none());
      entry["conforms"] = e.conforms;
      out.append(std::move(entry));
    }
    return out;
  });

  mod.def("classify", [](const BrickComplex& m, const std::vector<std::string>& facets) {
    const thinpos::Surface s = thinpos::surface_from_ids(m, facets);
    py::dict out;
    out["weight"] = thinpos::format_rational(thinpos::surface_weight(m, s));
    out["proper"] = thinpos::is_proper(m, s);
    out["embedded"] = thinpos::is_embedded(m, s);
    out["separating"] = thinpos::is_separating(m, s);
    if (thinpos::is_proper(m, s)) {
      out["stable"] = thinpos::is_stable_minimal(m, s);
      out["index"] = thinpos::index_name(thinpos::topological_index01(m, s));
      const auto search = thinpos::find_unstable_partition(m, s);
      out["unstable"] = search.status == thinpos::UnstableSearch::Status::Found
                            ? "found"
                            : search.status == thinpos::UnstableSearch::Status::None
                                  ? "none"
                                  : "undetermined";
      out["partition"] = search.partition ? py::object(partition_dict(m, *search.partition))
                                          : py::object(py::none());
    }
    return out;
  });

  mod.def(
      "min_width",
      [](const BrickComplex& m, bool bnb, std::uint64_t budget) {
        const auto result =
            bnb ? thinpos::min_width_bnb(m, budget) : thinpos::min_width_exhaustive(m);
        py::dict out;
        out["width"] = width_terms(result.width);
        out["ordering"] = thinpos::ordering_ids(m, result.witness);
        out["optimal"] = result.optimal;
        return out;
      },
      py::arg("complex"), py::arg("bnb") = false, py::arg("budget") = 20000000);

  mod.def("min_trunk", [](const BrickComplex& m) {
    const auto result = thinpos::min_trunk(m);
    py::dict out;
    out["trunk"] = thinpos::format_rational(result.trunk);
    out["ordering"] = thinpos::ordering_ids(m, result.witness);
    return out;
  });

  mod.def(
      "connected_sum",
      [](const BrickComplex& m1, const BrickComplex& m2, const std::string& c1,
         const std::string& c2, const std::map<long long, long long>& vertex_map) {
        const auto sum = thinpos::connected_sum_simplicial(m1, m2, c1, c2, vertex_map);
        py::dict out;
        out["complex"] = sum.complex;
        std::vector<std::string> seam;
        for (int f : sum.seam) seam.push_back(sum.complex.facet_ids[f]);
        out["seam"] = seam;
        out["brick_map_1"] = sum.brick_map_1;
        out["brick_map_2"] = sum.brick_map_2;
        return out;
      },
      py::arg("complex_1"), py::arg("complex_2"), py::arg("brick_1"), py::arg("brick_2"),
      py::arg("vertex_map"));

  mod.def(
      "stabilize",
      [](const BrickComplex& m, const std::string& brick) {
        const auto result = thinpos::stabilize(m, brick);
        py::dict out;
        out["complex"] = result.complex;
        std::vector<std::string> fresh;
        for (int b : result.new_bricks) fresh.push_back(result.complex.brick_ids[b]);
        out["new_bricks"] = fresh;
        return out;
      },
      py::arg("complex"), py::arg("brick"));

  mod.def("generalized_profile",
          [](const BrickComplex& m, const std::vector<std::string>& ordering) {
            return profile_values(thinpos::generalized_profile(m, to_ordering(m, ordering)));
          });
}
