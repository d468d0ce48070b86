#include <pybind11/pybind11.h>

#include "fulcrum/classify.hpp"
#include "fulcrum/io.hpp"
#include "fulcrum/jordan.hpp"

namespace py = pybind11;
using namespace fulcrum;

namespace {
  // Results cross the boundary as JSON text; the Python side decodes them.
  std::string certify_json(std::string const& lambda, std::string const& mu,
                           bool galois) {
    py::gil_scoped_release release;
    return dump(to_json(certify_pair(lambda, mu, {galois})));
  }

  std::string classify_json(std::string const& group) {
    py::gil_scoped_release release;
    auto const c = partition_classes(enumerate_pairs(parse_lambda_mode(group)));
    return emit_table(c, TableFormat::json);
  }

  std::string complete_json(std::string const& presentation) {
    auto sys = parse_presentation(presentation);
    py::gil_scoped_release release;
    return dump(to_json(complete(std::move(sys))));
  }

  std::string jordan_json(std::size_t max_len) {
    py::gil_scoped_release release;
    json out = json::object();
    for (auto f : {JordanFlavor::bosonization, JordanFlavor::u_jordan,
                   JordanFlavor::u_prime}) {
      out[to_string(f)] = to_json(verify_pbw(build_jordan(f, max_len)));
    }
    return dump(out);
  }
}  // namespace

PYBIND11_MODULE(_fulcrum, m) {
  m.doc() = "Rewriting and lifting certificates for pointed Hopf algebras";
  m.def("nichols_dimension", &nichols_dimension);
  m.def("certify_json", &certify_json, py::arg("lambda_bits"), py::arg("mu_bits"),
        py::arg("galois") = false);
  m.def("classify_json", &classify_json, py::arg("group") = "gx");
  m.def("complete_json", &complete_json, py::arg("presentation"));
  m.def("jordan_json", &jordan_json, py::arg("max_len") = 6);
}
