// flowface: exact f-vectors and primitive f-vectors of flow polytopes of
// complete graphs, with a brute-force enumeration oracle for verification.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flowface/counts.hpp"
#include "flowface/emit.hpp"
#include "flowface/facecount.hpp"
#include "flowface/fishburn.hpp"
#include "flowface/genfunc.hpp"
#include "flowface/oracle.hpp"

namespace {

using namespace flowface;

std::vector<long long> parse_entries(const std::string& text) {
  std::vector<long long> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long value = std::stoll(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad netflow entry: " + item);
    entries.push_back(value);
  }
  if (entries.empty()) throw std::invalid_argument("empty netflow");
  return entries;
}

NetflowVector parse_netflow(const std::string& text, bool strict) {
  const std::vector<long long> entries = parse_entries(text);
  bool binary = true;
  for (long long e : entries) binary = binary && (e == 0 || e == 1);
  if (!binary) {
    if (strict) throw std::invalid_argument("--strict requires a binary netflow");
    NetflowVector a = NetflowVector::from_entries(entries);
    std::cerr << "note: netflow canonicalized to its support (";
    for (int i = 0; i < a.size(); ++i)
      std::cerr << (i ? "," : "") << a.bits()[static_cast<std::size_t>(i)];
    std::cerr << ")\n";
    return a;
  }
  return NetflowVector::from_entries(entries);
}

struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int run(int argc, char** argv) {
  CLI::App app{"exact f-vectors of flow polytopes Flow_n(a) of complete graphs"};
  app.require_subcommand(1);

  std::string format_name = "plain";
  int jobs = 1;
  int max_oracle_n = 6;
  bool strict = false;
  app.add_option("--format", format_name, "output format: plain|json|csv|tex|dot")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "worker threads for enumeration")->capture_default_str();
  app.add_option("--max-oracle-n", max_oracle_n, "cap on exhaustive enumeration order")
      ->envname("FLOWFACE_MAX_ORACLE_N")
      ->capture_default_str();
  app.add_flag("--strict", strict, "reject non-binary netflow entries instead of canonicalizing");

  std::string netflow_text;
  int n_value = 0;
  int d_value = 0;
  int order = 8;
  bool primitive = false;
  bool verify = false;
  bool list_matrices = false;
  bool tuples = false;
  bool allow_n0 = false;
  std::string which = "f";

  CLI::App* cmd_fvector = app.add_subcommand("fvector", "f-vector of Flow_n(a) by formula");
  cmd_fvector->add_option("--netflow", netflow_text, "comma-separated entries, a_1 != 0")
      ->required();
  cmd_fvector->fallthrough();

  CLI::App* cmd_primitive =
      app.add_subcommand("primitive", "primitive f-vector of Flow_n(a) by formula");
  cmd_primitive->add_option("--netflow", netflow_text)->required();
  cmd_primitive->fallthrough();

  CLI::App* cmd_cry = app.add_subcommand("cry", "f-vector of CRY_n = Flow_n(1,0,...,0)");
  cmd_cry->add_option("--n", n_value)->required();
  cmd_cry->add_flag("--primitive", primitive, "primitive f-vector instead");
  cmd_cry->add_flag("--allow-n0", allow_n0,
                    "accept n=0 and report the conventional value (1, 1)");
  cmd_cry->fallthrough();

  CLI::App* cmd_oracle =
      app.add_subcommand("oracle", "brute-force enumeration over all subgraphs");
  cmd_oracle->add_option("--netflow", netflow_text)->required();
  cmd_oracle->add_flag("--primitive", primitive, "tally primitive subgraphs instead");
  cmd_oracle->add_flag("--verify", verify, "compare against the formulas; exit 1 on mismatch");
  cmd_oracle->fallthrough();

  CLI::App* cmd_vertices = app.add_subcommand("vertices", "vertex count of Flow_n(a)");
  cmd_vertices->add_option("--netflow", netflow_text)->required();
  cmd_vertices->add_flag("--tuples", tuples, "also list the enumerated vertex tuples");
  cmd_vertices->fallthrough();

  CLI::App* cmd_codim =
      app.add_subcommand("codim", "low-codimension face count of CRY_n (1 <= d <= n-1)");
  cmd_codim->add_option("--n", n_value)->required();
  cmd_codim->add_option("--d", d_value)->required();
  cmd_codim->fallthrough();

  CLI::App* cmd_series = app.add_subcommand("series", "truncated generating function");
  cmd_series->add_option("--order", order)->capture_default_str();
  cmd_series->add_option("--which", which, "F (faces of CRY) or G (Fishburn, all-x)");
  cmd_series->fallthrough();

  CLI::App* cmd_fishburn = app.add_subcommand("fishburn", "primitive Fishburn matrices");
  cmd_fishburn->add_option("--n", n_value)->required();
  cmd_fishburn->add_flag("--list", list_matrices);
  cmd_fishburn->fallthrough();

  CLI::App* cmd_table = app.add_subcommand("table", "f-vectors for n = 1..max-n");
  cmd_table->add_option("--max-n", n_value)->required();
  cmd_table->add_option("--which", which, "f or primitive");
  cmd_table->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  const Format format = parse_format(format_name);
  std::ostream& os = std::cout;

  if (cmd_fvector->parsed()) {
    const NetflowVector a = parse_netflow(netflow_text, strict);
    emit_fvector_row(os, format, a.size(), FVector::from_poly(fpoly(a)), "fvector");
    return 0;
  }

  if (cmd_primitive->parsed()) {
    const NetflowVector a = parse_netflow(netflow_text, strict);
    emit_fvector_row(os, format, a.size(), FVector::from_poly(primitive_fpoly(a)),
                     "primitive_fvector");
    return 0;
  }

  if (cmd_cry->parsed()) {
    if (n_value == 0 && allow_n0 && !primitive) {
      // conventional degenerate value: the empty face plus the point itself
      emit_fvector_row(os, format, 0, FVector({BigInt(1), BigInt(1)}), "fvector");
      return 0;
    }
    const LaurentPoly p = primitive ? cry_primitive_fpoly(n_value) : cry_fpoly(n_value);
    emit_fvector_row(os, format, n_value, FVector::from_poly(p),
                     primitive ? "primitive_fvector" : "fvector");
    return 0;
  }

  if (cmd_oracle->parsed()) {
    const NetflowVector a = parse_netflow(netflow_text, strict);
    const EnumerationOptions opts{max_oracle_n, jobs};
    if (verify) {
      if (enumerate_fvector(a, opts) != FVector::from_poly(fpoly(a)))
        throw VerifyFailure("enumerated f-vector disagrees with the formula");
      if (enumerate_primitive_fvector(a, opts) != FVector::from_poly(primitive_fpoly(a)))
        throw VerifyFailure("enumerated primitive f-vector disagrees with the formula");
      std::cerr << "verified: enumeration matches the formulas for n=" << a.size() << "\n";
    }
    if (format == Format::dot) {
      const auto graphs =
          primitive ? primitive_valid_subgraphs(a, opts) : valid_subgraphs(a, opts);
      emit_subgraphs_dot(os, graphs);
      return 0;
    }
    const FVector tallied =
        primitive ? enumerate_primitive_fvector(a, opts) : enumerate_fvector(a, opts);
    emit_fvector_row(os, format, a.size(), tallied,
                     primitive ? "primitive_fvector" : "fvector");
    return 0;
  }

  if (cmd_vertices->parsed()) {
    const NetflowVector a = parse_netflow(netflow_text, strict);
    const BigInt count = flow_vertex_count(a);
    if (format == Format::json) {
      os << "{\"n\":" << a.size() << ",\"vertices\":" << count;
      if (tuples) {
        os << ",\"tuples\":[";
        bool first = true;
        for (const auto& tup : vertex_tuples(a, EnumerationOptions{max_oracle_n, jobs})) {
          if (!first) os << ",";
          os << "[";
          for (std::size_t k = 0; k < tup.size(); ++k) os << (k ? "," : "") << tup[k];
          os << "]";
          first = false;
        }
        os << "]";
      }
      os << "}\n";
    } else if (format == Format::plain || format == Format::csv) {
      if (format == Format::csv)
        os << a.size() << "," << count << "\n";
      else
        os << count << "\n";
      if (tuples)
        for (const auto& tup : vertex_tuples(a, EnumerationOptions{max_oracle_n, jobs})) {
          for (std::size_t k = 0; k < tup.size(); ++k) os << (k ? "," : "") << tup[k];
          os << "\n";
        }
    } else {
      throw std::invalid_argument("vertices support plain, json and csv output");
    }
    return 0;
  }

  if (cmd_codim->parsed()) {
    const BigInt count = low_codim_face_count(n_value, d_value);
    if (format == Format::json)
      os << "{\"n\":" << n_value << ",\"d\":" << d_value << ",\"count\":" << count << "}\n";
    else if (format == Format::csv)
      os << n_value << "," << d_value << "," << count << "\n";
    else if (format == Format::plain)
      os << count << "\n";
    else
      throw std::invalid_argument("codim supports plain, json and csv output");
    return 0;
  }

  if (cmd_series->parsed()) {
    if (which != "f" && which != "F" && which != "g" && which != "G")
      throw std::invalid_argument("series --which must be F or G");
    if (which == "f" || which == "F") {
      emit_series(os, format, cry_face_series(order), "F");
    } else {
      const LaurentPoly x = LaurentPoly::variable();
      emit_series(os, format, jelinek_series(SeriesRequest{order, x, x, x, x}), "G");
    }
    return 0;
  }

  if (cmd_fishburn->parsed()) {
    const auto matrices = all_fishburn_matrices(n_value);
    emit_matrices(os, format, n_value, matrices, list_matrices);
    return 0;
  }

  if (cmd_table->parsed()) {
    if (which != "f" && which != "primitive")
      throw std::invalid_argument("table --which must be f or primitive");
    std::vector<std::pair<int, FVector>> rows;
    rows.reserve(static_cast<std::size_t>(n_value));
    for (int n = 1; n <= n_value; ++n) {
      const LaurentPoly p = (which == "primitive") ? cry_primitive_fpoly(n) : cry_fpoly(n);
      rows.emplace_back(n, FVector::from_poly(p));
    }
    emit_table(os, format, rows, which);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const VerifyFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
