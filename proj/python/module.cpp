// Python bindings for the core operations: transformation arithmetic in the
// variant, idempotent data, classification lists and the verification report.
// Composite results are returned as plain dicts / lists via the JSON layer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sandwich/classification.hpp"
#include "sandwich/idempotents.hpp"
#include "sandwich/json_io.hpp"
#include "sandwich/oracle.hpp"
#include "sandwich/variants.hpp"

namespace py = pybind11;
using namespace sandwich;

namespace {

Transformation parse_transformation(const std::string& text) {
  return Transformation::parse(text);
}

py::object json_to_py(const Json& value) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(value.dump());
}

Guards make_guards(std::uint64_t max_scan, int max_subset_idempotents, bool pruned) {
  Guards g;
  g.max_scan = max_scan;
  g.max_subset_idempotents = max_subset_idempotents;
  g.pruned_search = pruned;
  return g;
}

}  // namespace

PYBIND11_MODULE(sandwich_tn, m) {
  m.doc() = "variants (T_n, *_alpha) of the full transformation semigroup: "
            "sandwich arithmetic, idempotents, isolated-subsemigroup classification "
            "and brute-force verification";

  py::class_<Transformation>(m, "Transformation")
      .def(py::init(&parse_transformation), py::arg("text"))
      .def_static("identity", &Transformation::identity)
      .def_static("constant", &Transformation::constant)
      .def("degree", &Transformation::degree)
      .def("__call__", [](const Transformation& t, int x) { return t(x); })
      .def("__str__", &Transformation::to_string)
      .def("__repr__", &Transformation::to_string)
      .def("__eq__", [](const Transformation& a, const Transformation& b) { return a == b; })
      .def("images",
           [](const Transformation& t) {
             return std::vector<int>(t.images().begin(), t.images().end());
           });

  py::class_<SandwichContext>(m, "SandwichContext")
      .def_static("from_idempotent", &SandwichContext::from_idempotent)
      .def("degree", &SandwichContext::degree)
      .def("sandwich_rank", &SandwichContext::sandwich_rank)
      .def("alpha", &SandwichContext::alpha)
      .def("product", &SandwichContext::product)
      .def("__repr__", [](const SandwichContext& ctx) {
        return "SandwichContext(" + ctx.alpha().to_string() + ")";
      });

  m.def("compose", &compose, "left-to-right composition: result(x) = gamma(beta(x))");
  m.def("kernel", [](const Transformation& t) { return kernel(t).to_string(); });
  m.def("image", [](const Transformation& t) {
    auto im = image(t);
    return std::vector<int>(im.begin(), im.end());
  });
  m.def("rank", [](const Transformation& t) { return rank(t); });
  m.def("kernel_type", &kernel_type);
  m.def("variants_isomorphic", &variants_isomorphic);
  m.def("normalize_sandwich", [](const Transformation& alpha) {
    NormalizedSandwich result = normalize_sandwich(alpha);
    return py::make_tuple(result.context, result.changed);
  });

  m.def("idempotent_power", [](const SandwichContext& ctx, const Transformation& beta) {
    IdempotentPower p = idempotent_power(ctx, beta);
    return py::make_tuple(p.element, p.exponent);
  });
  m.def("stable_data", [](const SandwichContext& ctx, const Transformation& beta) {
    StableData d = stable_data(ctx, beta);
    return py::make_tuple(d.stable_rank, d.stable_kernel.to_string(),
                          std::vector<int>(d.stable_image.begin(), d.stable_image.end()));
  });
  m.def("is_variant_idempotent", &is_variant_idempotent);
  m.def("count_idempotents_formula", [](const SandwichContext& ctx) {
    return count_idempotents_formula(ctx).str();
  });
  m.def(
      "enumerate_idempotents",
      [](const SandwichContext& ctx, std::uint64_t max_scan) {
        Guards guards = make_guards(max_scan, 22, false);
        py::list out;
        for (const auto& info : enumerate_idempotents(ctx, guards)) {
          out.append(json_to_py(idempotent_info_json(info)));
        }
        return out;
      },
      py::arg("ctx"), py::arg("max_scan") = 3125);
  m.def("phi_l", &phi_l);
  m.def("phi_r", &phi_r);
  m.def("phi_bar", &phi_bar);

  m.def(
      "classify",
      [](const SandwichContext& ctx, std::uint64_t max_scan) {
        Guards guards = make_guards(max_scan, 22, false);
        Json out;
        auto render = [&](const std::vector<ClassifiedFamily>& families) {
          Json list = Json::array();
          for (const auto& fam : families) {
            list.push_back(family_json(fam, false));
          }
          return list;
        };
        out["context"] = context_json(ctx);
        out["isolated"] = render(enumerate_isolated(ctx, guards));
        out["completely_isolated"] = render(enumerate_completely_isolated(ctx, guards));
        out["left_convex"] = render(enumerate_one_sided_convex(ctx, Side::Left, guards));
        out["right_convex"] = render(enumerate_one_sided_convex(ctx, Side::Right, guards));
        out["convex"] = render(enumerate_convex(ctx, guards));
        out["counts"] = count_formulas_json(isolated_count_formulas(ctx));
        return json_to_py(out);
      },
      py::arg("ctx"), py::arg("max_scan") = 3125);

  m.def(
      "verify",
      [](const SandwichContext& ctx, std::uint64_t max_scan, int max_subsets, bool pruned) {
        Guards guards = make_guards(max_scan, max_subsets, pruned);
        return json_to_py(report_json(oracle::verify_classification(ctx, guards), false));
      },
      py::arg("ctx"), py::arg("max_scan") = 3125, py::arg("max_subsets") = 22,
      py::arg("pruned") = false);
}
