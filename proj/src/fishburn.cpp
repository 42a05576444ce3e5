#include "flowface/fishburn.hpp"

#include <algorithm>
#include <stdexcept>

namespace flowface {

namespace {

int upper_cell_index(int n, int i, int j) {
  // row i holds n - i + 1 cells, starting at column i
  return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

bool covers_rows_and_columns(int n, const std::vector<std::uint8_t>& cells) {
  for (int i = 1; i <= n; ++i) {
    bool row = false, col = false;
    for (int j = i; j <= n && !row; ++j)
      row = cells[static_cast<std::size_t>(upper_cell_index(n, i, j))];
    for (int j = 1; j <= i && !col; ++j)
      col = cells[static_cast<std::size_t>(upper_cell_index(n, j, i))];
    if (!row || !col) return false;
  }
  return true;
}

}  // namespace

FishburnMatrix::FishburnMatrix(int n, std::vector<std::uint8_t> upper_cells)
    : n_(n), cells_(std::move(upper_cells)) {
  if (n_ < 1) throw std::invalid_argument("matrix size must be >= 1");
  if (static_cast<int>(cells_.size()) != n_ * (n_ + 1) / 2)
    throw std::invalid_argument("wrong number of upper-triangle cells");
  for (std::uint8_t c : cells_)
    if (c > 1) throw std::invalid_argument("matrix entries must be 0 or 1");
  if (!covers_rows_and_columns(n_, cells_))
    throw std::invalid_argument("zero row or column in matrix");
}

int FishburnMatrix::cell(int i, int j) const {
  if (!(1 <= i && i <= j && j <= n_))
    throw std::invalid_argument("cell outside the upper triangle");
  return cells_[static_cast<std::size_t>(upper_cell_index(n_, i, j))];
}

int FishburnMatrix::ones() const {
  int total = 0;
  for (std::uint8_t c : cells_) total += c;
  return total;
}

FishburnMatrix graph_to_matrix(const Subgraph& h) {
  const int n = h.n;
  std::vector<int> unit_bits(static_cast<std::size_t>(n), 0);
  unit_bits[0] = 1;
  const NetflowVector unit(std::move(unit_bits));
  if (!is_primitive(h) || !is_valid(h, unit))
    throw std::invalid_argument("subgraph is not a primitive valid graph");

  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n * (n + 1) / 2), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j)
      if ((h.edges >> edge_index(n, i, j)) & 1u)
        cells[static_cast<std::size_t>(upper_cell_index(n, i, j - 1))] = 1;
  return FishburnMatrix(n, std::move(cells));
}

Subgraph matrix_to_graph(const FishburnMatrix& m) {
  const int n = m.size();
  Subgraph h{n, 0};
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (m.cell(i, j)) h.edges |= 1u << edge_index(n, i, j + 1);
  return h;
}

std::vector<FishburnMatrix> all_fishburn_matrices(int n) {
  if (n < 1) throw std::invalid_argument("matrix size must be >= 1");
  const int slots = n * (n + 1) / 2;
  if (slots > 28) throw std::domain_error("matrix enumeration limited to n <= 7");
  std::vector<FishburnMatrix> out;
  for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
    std::vector<std::uint8_t> cells(static_cast<std::size_t>(slots));
    for (int k = 0; k < slots; ++k) cells[static_cast<std::size_t>(k)] = (mask >> k) & 1u;
    if (covers_rows_and_columns(n, cells)) out.emplace_back(n, std::move(cells));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flowface
