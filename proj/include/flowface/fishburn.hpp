#pragma once

#include <cstdint>
#include <vector>

#include "flowface/oracle.hpp"

namespace flowface {

/// Upper-triangular 0/1 matrix of size n with no all-zero row and no
/// all-zero column. Only the upper triangle (cells (i, j) with i <= j) is
/// stored, row-major.
class FishburnMatrix {
 public:
  /// Cells row-major over the upper triangle: (1,1)..(1,n),(2,2)..,(n,n).
  /// Rejects entries outside {0,1} and matrices with a zero row or column.
  FishburnMatrix(int n, std::vector<std::uint8_t> upper_cells);

  int size() const { return n_; }
  int cell(int i, int j) const;  // 1-based, requires i <= j
  int ones() const;
  const std::vector<std::uint8_t>& upper_cells() const { return cells_; }

  auto operator<=>(const FishburnMatrix&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> cells_;
};

/// The matrix whose cell (i, j) records edge (v_i, v_{j+1}) of H. This is
/// the indexing that sends the full path v_1 -> ... -> v_{n+1} to the
/// identity-diagonal matrix. Requires H to be primitive and valid for the
/// unit netflow (1, 0, ..., 0); rejects anything else.
FishburnMatrix graph_to_matrix(const Subgraph& h);

/// Inverse map: edge (v_i, v_{j+1}) for every 1-cell (i, j).
Subgraph matrix_to_graph(const FishburnMatrix& m);

/// All size-n matrices satisfying the invariants, in lexicographic order of
/// their upper-triangle cells.
std::vector<FishburnMatrix> all_fishburn_matrices(int n);

}  // namespace flowface
