// Python bindings for the main operations.  Partitions cross the boundary
// as plain lists of ints; exact dimensions become Python ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grasshodge/bwb.hpp"
#include "grasshodge/classifiers.hpp"
#include "grasshodge/enumeration.hpp"
#include "grasshodge/output.hpp"
#include "grasshodge/tcore.hpp"
#include "grasshodge/verify.hpp"
#include "grasshodge/version.hpp"

namespace py = pybind11;
using namespace grasshodge;

namespace {

using Parts = std::vector<std::int64_t>;

Partition toPartition(const Parts& parts) {
    return Partition(parts);
}

py::object toPyInt(const BigInt& value) {
    return py::module_::import("builtins").attr("int")(value.str());
}

std::vector<Parts> toLists(const std::vector<Partition>& ps) {
    std::vector<Parts> out;
    out.reserve(ps.size());
    for (const Partition& p : ps) out.push_back(p.parts());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact twisted Hodge numbers of Grassmannians via t-core partitions";
    m.attr("__version__") = kVersion;

    py::register_exception<LimitExceeded>(m, "LimitExceeded", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    // Partition basics.
    m.def("make_partition",
          [](const Parts& parts) { return toPartition(parts).parts(); },
          py::arg("parts"),
          "Canonical form: strips trailing zeros, rejects invalid input.");
    m.def("conjugate",
          [](const Parts& p) { return toPartition(p).conjugate().parts(); },
          py::arg("parts"));
    m.def("hook_length",
          [](const Parts& p, std::int64_t row, std::int64_t col) {
              return toPartition(p).hookLength({row, col});
          },
          py::arg("parts"), py::arg("row"), py::arg("col"));
    m.def("semiperimeter",
          [](const Parts& p) { return toPartition(p).semiperimeter(); },
          py::arg("parts"));
    m.def("complement",
          [](const Parts& p, std::int64_t width, std::int64_t height) {
              return toPartition(p).complement(Rectangle(width, height)).parts();
          },
          py::arg("parts"), py::arg("width"), py::arg("height"));
    m.def("is_bounded",
          [](const Parts& p, std::int64_t width, std::int64_t height) {
              return toPartition(p).isBounded(Rectangle(width, height));
          },
          py::arg("parts"), py::arg("width"), py::arg("height"));

    // t-core structure.
    m.def("is_t_core",
          [](const Parts& p, std::int64_t t) { return is_t_core(toPartition(p), t); },
          py::arg("parts"), py::arg("t"));
    m.def("t_interior",
          [](const Parts& p, std::int64_t t) {
              const InteriorSplit split = t_interior(toPartition(p), t);
              return py::make_tuple(split.interior.parts(), split.boundarySize);
          },
          py::arg("parts"), py::arg("t"),
          "Returns (interior parts, boundary size).");
    m.def("boundary_partition",
          [](const Parts& p, std::int64_t t) {
              return boundary_partition(toPartition(p), t).parts();
          },
          py::arg("parts"), py::arg("t"));
    m.def("skew_inverse",
          [](const Parts& mu, std::int64_t t) {
              return skew_inverse(toPartition(mu), t).parts();
          },
          py::arg("mu"), py::arg("t"));
    m.def("coarsen",
          [](const Parts& p) {
              const Coarsening c = coarsen(toPartition(p));
              return py::make_tuple(c.rowMults, c.colMults);
          },
          py::arg("parts"), "Returns (row multiplicities, column multiplicities).");

    // Enumeration.
    m.def("bounded_partitions",
          [](std::int64_t width, std::int64_t height) {
              return toLists(list_bounded(Rectangle(width, height)));
          },
          py::arg("width"), py::arg("height"));
    m.def("tcore_bounded_partitions",
          [](std::int64_t width, std::int64_t height, std::int64_t t) {
              return toLists(list_tcore_bounded(Rectangle(width, height), t));
          },
          py::arg("width"), py::arg("height"), py::arg("t"));
    m.def("knijt_witnesses",
          [](std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j,
             std::int64_t t, std::int64_t limit) {
              return toLists(knijt_witnesses({k, n, i, j, t}, limit));
          },
          py::arg("k"), py::arg("n"), py::arg("i"), py::arg("j"), py::arg("t"),
          py::arg("limit") = 100);
    m.def("count_tcore_of_size", [](std::int64_t t, std::int64_t j) {
        return count_tcore_of_size(t, j);
    }, py::arg("t"), py::arg("j"));
    m.def("core_count_series", [](std::int64_t t, std::int64_t max_n) {
        return core_count_series(t, max_n).coeffs;
    }, py::arg("t"), py::arg("max_n"));

    // Borel-Weil-Bott pipeline.
    m.def("alpha_sequence",
          [](const Parts& p, std::int64_t k, std::int64_t n, std::int64_t t) {
              return alpha_sequence(toPartition(p), k, n, t);
          },
          py::arg("parts"), py::arg("k"), py::arg("n"), py::arg("t"));
    m.def("bwb_outcome",
          [](const WeightSeq& alpha, std::int64_t n) -> py::object {
              const BwbOutcome outcome = bwb_outcome(alpha, n);
              if (!outcome) return py::none();
              return py::make_tuple(outcome->degree, outcome->beta,
                                    toPyInt(outcome->dim));
          },
          py::arg("alpha"), py::arg("n"),
          "None when the cohomology vanishes; otherwise (degree, beta, dim).");
    m.def("schur_dim",
          [](const WeightSeq& beta, std::int64_t n) {
              return toPyInt(schur_dim(beta, n));
          },
          py::arg("beta"), py::arg("n"));
    m.def("hodge_number",
          [](std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j,
             std::int64_t t) { return toPyInt(hodge_number(k, n, i, j, t)); },
          py::arg("k"), py::arg("n"), py::arg("i"), py::arg("j"), py::arg("t"));
    m.def("hodge_table",
          [](std::int64_t k, std::int64_t n, std::int64_t t) {
              py::dict out;
              for (const auto& [cell, dim] : hodge_table(k, n, t).entries) {
                  out[py::make_tuple(cell.first, cell.second)] = toPyInt(dim);
              }
              return out;
          },
          py::arg("k"), py::arg("n"), py::arg("t"),
          "Dict mapping (i, j) to the exact dimension; missing cells are zero.");

    // Classifiers.
    m.def("necessary_battery",
          [](std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j,
             std::int64_t t) {
              py::list out;
              for (const Verdict& v : necessary_battery({k, n, i, j, t})) {
                  py::dict entry;
                  entry["name"] = v.name;
                  entry["applicable"] = v.applicable;
                  entry["holds"] = v.holds;
                  entry["lhs"] = v.lhs;
                  entry["rhs"] = v.rhs;
                  out.append(entry);
              }
              return out;
          },
          py::arg("k"), py::arg("n"), py::arg("i"), py::arg("j"), py::arg("t"));
    m.def("classify_small_t",
          [](std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j,
             std::int64_t t) -> py::object {
              const auto result = classify_small_t({k, n, i, j, t});
              if (!result) return py::none();
              return py::bool_(*result);
          },
          py::arg("k"), py::arg("n"), py::arg("i"), py::arg("j"), py::arg("t"));
    m.def("t3_nonvanishing",
          [](std::int64_t k, std::int64_t n, std::int64_t i, std::int64_t j) {
              const auto [ok, cert] = t3_nonvanishing(k, n, i, j);
              py::dict detail;
              detail["b"] = cert.b;
              detail["delta"] = cert.delta;
              detail["sqrt_delta"] =
                  cert.sqrtDelta ? py::cast(*cert.sqrtDelta) : py::none();
              detail["x"] = cert.x ? py::cast(*cert.x) : py::none();
              detail["y"] = cert.y ? py::cast(*cert.y) : py::none();
              return py::make_tuple(ok, detail);
          },
          py::arg("k"), py::arg("n"), py::arg("i"), py::arg("j"));
    m.def("j_form_excluded", &j_form_excluded, py::arg("j"));
    m.def("i_form_excluded", &i_form_excluded, py::arg("i"));
    m.def("classify_extremal_n",
          [](std::int64_t k, std::int64_t n, std::int64_t t) -> py::object {
              const auto cell = classify_extremal_N(k, n, t);
              if (!cell) return py::none();
              return py::make_tuple(cell->first, cell->second);
          },
          py::arg("k"), py::arg("n"), py::arg("t"));
    m.def("classify_extremal_n_minus_1", &classify_extremal_N_minus_1,
          py::arg("k"), py::arg("n"), py::arg("i"), py::arg("j"), py::arg("t"));

    // Verification suites.
    m.def("run_suite",
          [](const std::string& name, std::int64_t kmax, std::int64_t nmax,
             std::int64_t tmax) {
              verify::VerifyOptions opt;
              opt.kmax = kmax;
              opt.nmax = nmax;
              opt.tmax = tmax;
              py::list out;
              for (const auto& report : verify::run_suites(name, opt)) {
                  py::dict entry;
                  entry["suite"] = report.suite;
                  entry["passed"] = report.passed;
                  entry["checks"] = report.checks;
                  entry["failures"] = report.failures;
                  out.append(entry);
              }
              return out;
          },
          py::arg("name") = "all", py::arg("kmax") = 0, py::arg("nmax") = 0,
          py::arg("tmax") = 0);
}
