#include "flowface/emit.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace flowface {

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "tex") return Format::tex;
  if (name == "dot") return Format::dot;
  throw std::invalid_argument("unknown format: " + name);
}

std::string fvector_json_object(const FVector& f) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < f.entries.size(); ++k) {
    if (k) os << ",";
    os << "\"" << static_cast<int>(k) - 1 << "\":" << f.entries[k];
  }
  os << "}";
  return os.str();
}

namespace {

std::string fvector_tuple(const FVector& f) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < f.entries.size(); ++k) {
    if (k) os << ", ";
    os << f.entries[k];
  }
  os << ")";
  return os.str();
}

void csv_row(std::ostream& os, int n, const FVector& f) {
  os << n;
  for (const BigInt& e : f.entries) os << "," << e;
  os << "\n";
}

void tex_table(std::ostream& os, std::span<const std::pair<int, FVector>> rows,
               const std::string& label) {
  os << "\\begin{tabular}{c p{15cm}}\n\\hline\n$n$ & " << label << "\\\\\n\\hline\n";
  for (const auto& [n, f] : rows) os << "$" << n << "$ & $" << fvector_tuple(f) << "$\\\\\n";
  os << "\\hline\n\\end{tabular}\n";
}

}  // namespace

void emit_fvector_row(std::ostream& os, Format format, int n, const FVector& f,
                      const std::string& json_key) {
  switch (format) {
    case Format::plain:
      os << fvector_tuple(f) << "\n";
      return;
    case Format::json:
      os << "{\"n\":" << n << ",\"" << json_key << "\":" << fvector_json_object(f) << "}\n";
      return;
    case Format::csv:
      csv_row(os, n, f);
      return;
    case Format::tex: {
      const std::pair<int, FVector> row{n, f};
      tex_table(os, {&row, 1},
                json_key == "primitive_fvector" ? "primitive $f$-vector" : "$f$-vector");
      return;
    }
    case Format::dot:
      throw std::invalid_argument("f-vectors have no dot representation");
  }
}

void emit_table(std::ostream& os, Format format,
                std::span<const std::pair<int, FVector>> rows, const std::string& label) {
  switch (format) {
    case Format::plain:
      for (const auto& [n, f] : rows) os << "n=" << n << ": " << fvector_tuple(f) << "\n";
      return;
    case Format::json: {
      os << "{\"which\":\"" << label << "\",\"rows\":[";
      bool first = true;
      for (const auto& [n, f] : rows) {
        if (!first) os << ",";
        os << "{\"n\":" << n << ",\"fvector\":" << fvector_json_object(f) << "}";
        first = false;
      }
      os << "]}\n";
      return;
    }
    case Format::csv:
      for (const auto& [n, f] : rows) csv_row(os, n, f);
      return;
    case Format::tex:
      tex_table(os, rows, label == "primitive" ? "primitive $f$-vector" : "$f$-vector");
      return;
    case Format::dot:
      throw std::invalid_argument("tables have no dot representation");
  }
}

std::string poly_plain(const LaurentPoly& p) { return p.str(); }

void emit_series(std::ostream& os, Format format, const TruncatedSeries& series,
                 const std::string& which) {
  switch (format) {
    case Format::plain:
      for (int k = 0; k <= series.order(); ++k)
        os << "t^" << k << ": " << poly_plain(series.coeff(k)) << "\n";
      return;
    case Format::json: {
      os << "{\"which\":\"" << which << "\",\"order\":" << series.order()
         << ",\"coefficients\":[";
      for (int k = 0; k <= series.order(); ++k) {
        if (k) os << ",";
        os << "{";
        bool first = true;
        for (const auto& [e, c] : series.coeff(k).terms()) {
          if (!first) os << ",";
          os << "\"" << e << "\":" << c;
          first = false;
        }
        os << "}";
      }
      os << "]}\n";
      return;
    }
    case Format::csv:
      // one row per (t-power, x-exponent, coefficient)
      for (int k = 0; k <= series.order(); ++k)
        for (const auto& [e, c] : series.coeff(k).terms())
          os << k << "," << e << "," << c << "\n";
      return;
    default:
      throw std::invalid_argument("series support plain, json and csv output");
  }
}

void emit_subgraphs_dot(std::ostream& os, std::span<const Subgraph> graphs) {
  std::size_t idx = 0;
  for (const Subgraph& h : graphs) {
    os << "digraph H" << idx++ << " {\n";
    for (int v = 1; v <= h.n + 1; ++v) os << "  v" << v << ";\n";
    for (int k = 0; k < edge_slots(h.n); ++k)
      if ((h.edges >> k) & 1u) {
        auto [i, j] = edge_endpoints(h.n, k);
        os << "  v" << i << " -> v" << j << ";\n";
      }
    os << "}\n";
  }
}

void emit_matrices(std::ostream& os, Format format, int n,
                   std::span<const FishburnMatrix> matrices, bool list) {
  switch (format) {
    case Format::json: {
      os << "{\"n\":" << n << ",\"count\":" << matrices.size();
      if (list) {
        os << ",\"matrices\":[";
        bool first_m = true;
        for (const FishburnMatrix& m : matrices) {
          if (!first_m) os << ",";
          os << "[";
          for (std::size_t k = 0; k < m.upper_cells().size(); ++k) {
            if (k) os << ",";
            os << static_cast<int>(m.upper_cells()[k]);
          }
          os << "]";
          first_m = false;
        }
        os << "]";
      }
      os << "}\n";
      return;
    }
    case Format::plain:
      os << matrices.size() << "\n";
      if (list)
        for (const FishburnMatrix& m : matrices) {
          for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) os << (j < i ? '.' : (m.cell(i, j) ? '1' : '0'));
            os << "\n";
          }
          os << "\n";
        }
      return;
    case Format::csv:
      for (const FishburnMatrix& m : matrices) {
        os << n;
        for (std::uint8_t c : m.upper_cells()) os << "," << static_cast<int>(c);
        os << "\n";
      }
      return;
    case Format::dot: {
      std::vector<Subgraph> graphs;
      graphs.reserve(matrices.size());
      for (const FishburnMatrix& m : matrices) graphs.push_back(matrix_to_graph(m));
      emit_subgraphs_dot(os, graphs);
      return;
    }
    default:
      throw std::invalid_argument("matrices have no tex representation");
  }
}

}  // namespace flowface
