// Python bindings for the main operations. Arbitrary-precision values cross
// the boundary as Python ints (via their decimal form), so nothing is ever
// truncated.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "flowface/counts.hpp"
#include "flowface/facecount.hpp"
#include "flowface/fishburn.hpp"
#include "flowface/genfunc.hpp"
#include "flowface/oracle.hpp"

namespace py = pybind11;
using namespace flowface;

namespace {

py::int_ to_py(const BigInt& value) {
  std::ostringstream os;
  os << value;
  return py::int_(py::str(os.str()));
}

py::list fvector_list(const FVector& f) {
  py::list out;
  for (const BigInt& e : f.entries) out.append(to_py(e));
  return out;
}

py::dict poly_dict(const LaurentPoly& p) {
  py::dict out;
  for (const auto& [e, c] : p.terms()) out[py::int_(e)] = to_py(c);
  return out;
}

NetflowVector netflow_arg(const std::vector<long long>& entries) {
  return NetflowVector::from_entries(entries);
}

}  // namespace

PYBIND11_MODULE(_flowface, m) {
  m.doc() = "Exact f-vectors of flow polytopes of complete graphs";

  m.def(
      "fvector",
      [](const std::vector<long long>& a) {
        return fvector_list(FVector::from_poly(fpoly(netflow_arg(a))));
      },
      py::arg("netflow"),
      "f-vector of Flow_n(a) from dimension -1 upward, by formula");

  m.def(
      "primitive_fvector",
      [](const std::vector<long long>& a) {
        return fvector_list(FVector::from_poly(primitive_fpoly(netflow_arg(a))));
      },
      py::arg("netflow"));

  m.def(
      "cry_fvector",
      [](int n) { return fvector_list(FVector::from_poly(cry_fpoly(n))); },
      py::arg("n"));

  m.def(
      "cry_primitive_fvector",
      [](int n) { return fvector_list(FVector::from_poly(cry_primitive_fpoly(n))); },
      py::arg("n"));

  m.def(
      "oracle_fvector",
      [](const std::vector<long long>& a, int max_n, int jobs) {
        return fvector_list(enumerate_fvector(netflow_arg(a), EnumerationOptions{max_n, jobs}));
      },
      py::arg("netflow"), py::arg("max_n") = 6, py::arg("jobs") = 1,
      "f-vector by exhaustive subgraph enumeration");

  m.def(
      "oracle_primitive_fvector",
      [](const std::vector<long long>& a, int max_n, int jobs) {
        return fvector_list(
            enumerate_primitive_fvector(netflow_arg(a), EnumerationOptions{max_n, jobs}));
      },
      py::arg("netflow"), py::arg("max_n") = 6, py::arg("jobs") = 1);

  m.def(
      "vertex_tuples",
      [](const std::vector<long long>& a, int max_n) {
        return vertex_tuples(netflow_arg(a), EnumerationOptions{max_n, 1});
      },
      py::arg("netflow"), py::arg("max_n") = 6);

  m.def(
      "flow_vertex_count",
      [](const std::vector<long long>& a) { return to_py(flow_vertex_count(netflow_arg(a))); },
      py::arg("netflow"));

  m.def(
      "cry_vertex_count", [](int n) { return to_py(cry_vertex_count(n)); }, py::arg("n"));
  m.def(
      "cry_edge_count", [](int n) { return to_py(cry_edge_count(n)); }, py::arg("n"));

  m.def(
      "low_codim_face_count",
      [](int n, int d) { return to_py(low_codim_face_count(n, d)); }, py::arg("n"),
      py::arg("d"));

  m.def(
      "cry_face_series",
      [](int order) {
        const TruncatedSeries s = cry_face_series(order);
        py::list out;
        for (int k = 0; k <= s.order(); ++k) out.append(poly_dict(s.coeff(k)));
        return out;
      },
      py::arg("order"),
      "coefficients of F(t, x) as {x-exponent: count} dicts, one per power of t");

  m.def(
      "fishburn_series",
      [](int order) {
        const LaurentPoly x = LaurentPoly::variable();
        const TruncatedSeries s = jelinek_series(SeriesRequest{order, x, x, x, x});
        py::list out;
        for (int k = 0; k <= s.order(); ++k) out.append(poly_dict(s.coeff(k)));
        return out;
      },
      py::arg("order"));

  m.def("product_identity_check", &product_identity_check, py::arg("n"));
  m.def("product_identity_alt_check", &product_identity_alt_check, py::arg("n"));

  m.def(
      "fishburn_count", [](int n) { return all_fishburn_matrices(n).size(); }, py::arg("n"));

  m.def(
      "fishburn_matrices",
      [](int n) {
        py::list out;
        for (const FishburnMatrix& fm : all_fishburn_matrices(n)) {
          py::list cells;
          for (std::uint8_t c : fm.upper_cells()) cells.append(static_cast<int>(c));
          out.append(cells);
        }
        return out;
      },
      py::arg("n"), "upper-triangle cells, row-major, one list per matrix");
}
