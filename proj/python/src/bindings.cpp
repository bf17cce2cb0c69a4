// Copyright 2026 The nilaut Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Python bindings. Exact values cross the boundary as Python ints and
// fractions.Fraction; reports are returned as dicts built from the JSON
// serializers so both interfaces share one schema.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nilaut/admissibility.hpp"
#include "nilaut/curve.hpp"
#include "nilaut/errors.hpp"
#include "nilaut/examples.hpp"
#include "nilaut/hurwitz.hpp"
#include "nilaut/ladder.hpp"
#include "nilaut/report_json.hpp"
#include "nilaut/search.hpp"

namespace py = pybind11;

namespace {

using nilaut::BigInt;
using nilaut::Characteristic;
using nilaut::Rational;

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(const_cast<char*>(v.str().c_str()), nullptr, 10));
}

py::object to_py(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_py(r.num()), to_py(r.den()));
}

py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

// (e,) or (e, d) tuples; a bare int means the minimal different exponent.
std::vector<nilaut::RamifiedPlace> parse_places(const py::list& places, Characteristic p) {
  std::vector<nilaut::RamifiedPlace> out;
  for (const auto& item : places) {
    if (py::isinstance<py::int_>(item)) {
      out.push_back(nilaut::RamifiedPlace::minimal(item.cast<std::int64_t>(), p));
      continue;
    }
    const auto t = item.cast<py::sequence>();
    const auto e = t[0].cast<std::int64_t>();
    if (t.size() == 1 || t[1].is_none()) {
      out.push_back(nilaut::RamifiedPlace::unknown(e, p));
    } else {
      out.push_back(nilaut::RamifiedPlace::make(e, t[1].cast<std::int64_t>(), p));
    }
  }
  return out;
}

nilaut::SearchConfig make_config(int r_min, int r_max, std::int64_t max_index,
                                 const std::vector<std::int64_t>& chars,
                                 std::int64_t max_order, unsigned workers) {
  nilaut::SearchConfig cfg;
  cfg.r_min = r_min;
  cfg.r_max = r_max;
  cfg.max_index = max_index;
  cfg.max_order = max_order;
  cfg.workers = workers;
  cfg.characteristics.clear();
  for (auto p : chars) cfg.characteristics.emplace_back(p);
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_nilaut, m) {
  m.doc() = "Exact genus and group-order bounds for nilpotent Galois covers";
  m.attr("JSON_SCHEMA") = nilaut::kJsonSchema;

  // Translators registered later are tried first, so the base class goes first.
  const auto base = py::register_exception<nilaut::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<nilaut::InconsistentTower>(m, "InconsistentTower", base.ptr());
  py::register_exception<nilaut::TooLarge>(m, "TooLarge", base.ptr());
  py::register_exception<nilaut::CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<nilaut::ClaimMismatch>(m, "ClaimMismatch", base.ptr());

  m.def("min_different_exponent",
        [](std::int64_t e, std::int64_t p) {
          return nilaut::min_different_exponent(e, Characteristic(p));
        },
        py::arg("e"), py::arg("p") = 0);

  m.def("hurwitz_two_g_minus_2",
        [](std::int64_t order, std::int64_t base_genus, const py::list& places, std::int64_t p) {
          const auto pl = parse_places(places, Characteristic(p));
          return to_py(nilaut::hurwitz_two_g_minus_2(order, base_genus, pl));
        },
        py::arg("order"), py::arg("base_genus"), py::arg("places"), py::arg("p") = 0,
        "N(2g0 - 2 + sum d/e). Places are ints (minimal d) or (e, d) pairs.");

  m.def("solve_genus",
        [](std::int64_t order, std::int64_t base_genus, const py::list& places, std::int64_t p) {
          const auto res =
              nilaut::solve_genus(order, base_genus, parse_places(places, Characteristic(p)));
          py::dict d;
          d["two_g_minus_2"] = to_py(res.two_g_minus_2);
          d["genus"] = res.genus ? to_py(*res.genus) : py::none();
          d["feasible"] = res.feasible();
          d["status"] = res.status_text();
          return d;
        },
        py::arg("order"), py::arg("base_genus"), py::arg("places"), py::arg("p") = 0);

  m.def("back_solve_different",
        [](std::int64_t order, std::int64_t base_genus, std::int64_t genus,
           const py::list& places, std::int64_t p) {
          const Characteristic c(p);
          return nilaut::back_solve_different(order, base_genus, genus, parse_places(places, c), c);
        },
        py::arg("order"), py::arg("base_genus"), py::arg("genus"), py::arg("places"),
        py::arg("p") = 0, "Places are ints, (e, d) pairs, or one (e, None) for the unknown.");

  m.def("admissible",
        [](const std::vector<std::int64_t>& indices, std::int64_t p,
           std::optional<std::int64_t> order) {
          return to_py(nilaut::to_json(
              nilaut::admissible(nilaut::Signature(Characteristic(p), indices, order))));
        },
        py::arg("indices"), py::arg("p") = 0, py::arg("order") = py::none());

  m.def("admissible_orders",
        [](const std::vector<std::int64_t>& indices, std::int64_t p, std::int64_t max_order) {
          return nilaut::admissible_orders(nilaut::Signature(Characteristic(p), indices),
                                           max_order);
        },
        py::arg("indices"), py::arg("p") = 0, py::arg("max_order") = nilaut::kDefaultMaxOrder);

  m.def("ratio_sup",
        [](const std::vector<std::int64_t>& indices, std::int64_t p,
           std::optional<std::int64_t> order) {
          std::vector<std::int64_t> orders;
          if (order) orders.push_back(*order);
          return to_py(nilaut::to_json(
              nilaut::ratio_sup(nilaut::Signature(Characteristic(p), indices, order), orders)));
        },
        py::arg("indices"), py::arg("p") = 0, py::arg("order") = py::none());

  m.def("theorem_bound", [](int r) { return to_py(nilaut::theorem_bound(r)); }, py::arg("r"));

  m.def("sweep",
        [](int r_min, int r_max, std::int64_t max_index, const std::vector<std::int64_t>& chars,
           std::int64_t max_order, const py::object& threshold, unsigned workers) {
          auto cfg = make_config(r_min, r_max, max_index, chars, max_order, workers);
          const auto frac = py::module_::import("fractions").attr("Fraction")(threshold);
          cfg.threshold = Rational(BigInt(py::str(frac.attr("numerator")).cast<std::string>()),
                                   BigInt(py::str(frac.attr("denominator")).cast<std::string>()));
          nilaut::SweepResult res;
          {
            py::gil_scoped_release release;
            res = nilaut::sweep(cfg);
          }
          nlohmann::json reports = nlohmann::json::array(), notes = nlohmann::json::array();
          for (const auto& r : res.reports) reports.push_back(nilaut::to_json(r));
          for (const auto& n : res.notes) notes.push_back(nilaut::to_json(n));
          return to_py(nlohmann::json{{"schema", nilaut::kJsonSchema},
                                      {"reports", reports},
                                      {"notes", notes},
                                      {"leaves", res.stats.leaves}});
        },
        py::arg("r_min") = 2, py::arg("r_max") = 8, py::arg("max_index") = 64,
        py::arg("chars") = std::vector<std::int64_t>{0, 2, 3, 5, 7},
        py::arg("max_order") = nilaut::kDefaultMaxOrder, py::arg("threshold") = 4,
        py::arg("workers") = 0u);

  m.def("theorem_certificate",
        [](int r, std::int64_t max_index, const std::vector<std::int64_t>& chars,
           std::int64_t max_order, unsigned workers) {
          const auto cfg = make_config(r, r, max_index, chars, max_order, workers);
          nilaut::Certificate cert{};
          {
            py::gil_scoped_release release;
            cert = nilaut::theorem_certificate(r, cfg);
          }
          return to_py(nilaut::document("certificate", nilaut::to_json(cert)));
        },
        py::arg("r"), py::arg("max_index") = 64,
        py::arg("chars") = std::vector<std::int64_t>{0, 2, 3, 5, 7},
        py::arg("max_order") = nilaut::kDefaultMaxOrder, py::arg("workers") = 0u);

  m.def("r1_bound", [](std::int64_t p, std::int64_t g) { return to_py(nilaut::r1_bound(p, g)); },
        py::arg("p"), py::arg("g"));

  m.def("count_r1",
        [](std::int64_t p, int n) {
          const auto c = nilaut::count_r1_automorphisms(p, n);
          py::dict d;
          d["count"] = c.count;
          d["translations"] = c.translations;
          d["field_size"] = c.field->size();
          return d;
        },
        py::arg("p"), py::arg("n") = 1);

  m.def("genus_ladder",
        [](std::int64_t g1, std::int64_t degree, std::size_t steps) {
          nlohmann::json rows = nlohmann::json::array();
          for (const auto& row : nilaut::genus_ladder(g1, degree, steps)) {
            rows.push_back(nilaut::to_json(row));
          }
          return to_py(rows);
        },
        py::arg("g1") = 2, py::arg("degree") = 16, py::arg("steps") = 3);

  m.def("example_ids", &nilaut::example_ids);

  m.def("verify_example",
        [](const std::string& id, std::optional<std::int64_t> p, int n) {
          nilaut::ExampleParams params;
          params.p = p;
          params.n = n;
          return to_py(nilaut::to_json(nilaut::verify_example(id, params)));
        },
        py::arg("example_id"), py::arg("p") = py::none(), py::arg("n") = 1);

  m.def("example_group",
        [](const std::string& id, std::optional<std::int64_t> p, int n) {
          nilaut::ExampleParams params;
          params.p = p;
          params.n = n;
          const auto g = nilaut::example_group(id, params);
          auto j = nilaut::group_json(g.table);
          j["generators"] = g.generators;
          return to_py(j);
        },
        py::arg("example_id"), py::arg("p") = py::none(), py::arg("n") = 1);
}
