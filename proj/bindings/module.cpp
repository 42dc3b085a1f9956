#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "leuven/cli.hpp"
#include "leuven/equality.hpp"
#include "leuven/kernel.hpp"
#include "leuven/oracle.hpp"
#include "leuven/preprocess.hpp"

namespace py = pybind11;

namespace {

py::dict report_to_dict(const leuven::cli::RunReport& r, bool include_timing) {
  py::dict d;
  d["distance"] = r.distance;
  d["mode"] = r.mode;
  d["half_width"] = r.half_width;
  d["visited_cells"] = r.visited_cells;
  d["pbs_total"] = r.pbs_total;
  d["pbs_equality"] = r.pbs_equality;
  d["pbs_kernel"] = r.pbs_kernel;
  d["refresh_count"] = r.refresh_count;
  d["preprocessing_pbs"] = r.preprocessing_pbs;
  d["max_key_variance"] = r.max_key_variance;
  if (include_timing) d["wall_time_ms"] = r.wall_time_ms;
  return d;
}

leuven::equality::EqTechnique technique_from(const std::string& name) {
  using leuven::equality::EqTechnique;
  if (name == "standard_2bit") return EqTechnique::standard_2bit;
  if (name == "ours_4bit") return EqTechnique::ours_4bit;
  if (name == "combined") return EqTechnique::combined;
  throw leuven::InvalidParams("unknown equality technique '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "encrypted edit distance (simulated 5-bit scheme) with one "
            "bootstrap per cell";

  m.def(
      "wf_distance",
      [](const std::string& a, const std::string& b) {
        return leuven::oracle::wf_distance(a, b).distance;
      },
      py::arg("a"), py::arg("b"),
      "Plaintext dynamic-programming edit distance.");

  m.def(
      "banded_distance",
      [](const std::string& a, const std::string& b, std::size_t half_width) {
        return leuven::oracle::banded_distance(a, b, half_width);
      },
      py::arg("a"), py::arg("b"), py::arg("half_width"),
      "Plaintext banded edit distance (upper bound outside the band).");

  m.def(
      "compute",
      [](const std::string& a, const std::string& b, const std::string& mode,
         std::optional<std::size_t> ell, const std::string& encoding, double budget,
         const std::string& key_encoding, bool preprocess, bool include_timing) {
        leuven::cli::ComputeConfig config;
        config.a = a;
        config.b = b;
        config.mode = mode;
        if (ell) {
          config.ell = *ell;
          config.has_ell = true;
        }
        config.encoding = encoding;
        config.budget = budget;
        config.key_encoding = key_encoding;
        config.preprocess = preprocess;
        return report_to_dict(leuven::cli::compute_report(config), include_timing);
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "exact",
      py::arg("ell") = std::nullopt, py::arg("encoding") = "ascii7",
      py::arg("budget") = 4000.0, py::arg("key_encoding") = "negated",
      py::arg("preprocess") = false, py::arg("include_timing") = false,
      "Runs the encrypted pipeline and returns the report as a dict.");

  m.def(
      "eq_cost",
      [](const std::string& technique, int bits) {
        return leuven::equality::eq_cost(technique_from(technique), bits);
      },
      py::arg("technique"), py::arg("bits"),
      "Bootstrap count of one character equality "
      "(standard_2bit | ours_4bit | combined).");

  m.def(
      "lut_dump",
      [](const std::string& which) {
        std::ostringstream out, err;
        const int rc = leuven::cli::run({"table", which}, out, err);
        if (rc != 0) throw leuven::InvalidParams(err.str());
        return out.str();
      },
      py::arg("which"),
      "Table dump (minlut-original | minlut-negated | eqlut | eqlut9).");

  m.def("band_cell_count", &leuven::kernel::band_cell_count, py::arg("m"),
        py::arg("ell"), "Cells within half-width ell of an m-by-m diagonal.");

  m.attr("__version__") = "0.1.0";
}
