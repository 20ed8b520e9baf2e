#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chaincode/io.hpp"

namespace py = pybind11;

namespace {

// (exit code, stdout, stderr) for a command line without the program name.
py::tuple cli(const std::vector<std::string>& args) {
    std::vector<std::string> all{"chaincode"};
    all.insert(all.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : all) argv.push_back(a.data());
    std::ostringstream out, err;
    int rc;
    {
        py::gil_scoped_release release;
        rc = chaincode::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(rc, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_chaincode, m) {
    m.doc() = "Repeated-root constacyclic codes over finite chain rings";
    m.def("cli", &cli, py::arg("args"), "Run the command line front end; returns (exit code, stdout, stderr).");
    m.def("binom_valuation", &chaincode::binom_valuation, py::arg("p"), py::arg("l"), py::arg("b"));
    m.def("rt_weight_distribution",
          [](long long nu, int e, int p, int s, int n, int mdeg) {
              std::vector<std::string> out;
              for (const auto& x : chaincode::rt_wdist_unit(nu, e, p, s, n, mdeg)) out.push_back(x.get_str());
              return out;
          },
          py::arg("nu"), py::arg("e"), py::arg("p"), py::arg("s"), py::arg("n"), py::arg("m"),
          "RT weight distribution of <f^nu> in the chain case, as decimal strings.");
}
