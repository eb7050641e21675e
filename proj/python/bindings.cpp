#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hiicheck/errors.hpp"
#include "hiicheck/hii.hpp"
#include "hiicheck/io.hpp"

namespace py = pybind11;

namespace {

using Handler = hii::io::json (*)(const hii::io::json&);

std::string call_json(Handler f, const std::string& text) {
  hii::io::json in;
  try {
    in = hii::io::json::parse(text);
  } catch (const hii::io::json::exception& e) {
    throw hii::InvalidInput(e.what());
  }
  return f(in).dump();
}

std::string verify(int max_rank, const std::vector<std::string>& lattices, int trials, unsigned long long seed,
                   bool parallel) {
  hii::VerifyOptions opt;
  opt.max_rank = max_rank;
  opt.lattices = lattices;
  opt.trials = trials;
  opt.seed = seed;
  opt.parallel = parallel;
  return hii::io::to_json(hii::verify_suite(opt)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "JSON-in, JSON-out bindings; see hiicheck/__init__.py";
  auto err = py::register_exception<hii::Error>(m, "HiiError", PyExc_RuntimeError);
  (void)err;

  m.def("analyze", [](const std::string& s) { return call_json(hii::io::analyze_json, s); }, py::arg("block"));
  m.def("gamma", [](const std::string& s) { return call_json(hii::io::gamma_json, s); }, py::arg("parameter"));
  m.def("hii_rhs", [](const std::string& s) { return call_json(hii::io::hii_rhs_json, s); }, py::arg("block"));
  m.def("chain", [](const std::string& s) { return call_json(hii::io::chain_json, s); }, py::arg("block"));
  m.def("verify", &verify, py::arg("max_rank") = 2, py::arg("lattices") = std::vector<std::string>{"sc", "ad"},
        py::arg("trials") = 50, py::arg("seed") = 7ULL, py::arg("parallel") = true,
        py::call_guard<py::gil_scoped_release>());
}
