#include "bianchi/abelian.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bianchi::fp {

namespace {

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

std::string AbelianInvariants::to_string() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const Integer& d : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + d.get_str();
  }
  return out.empty() ? "0" : out;
}

std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;

  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : m) std::swap(row[a], row[b]);
  };
  // Moves the smallest nonzero entry of the trailing block to (t, t).
  auto bring_min_to = [&](std::size_t t, bool row_col_only) {
    std::size_t bi = rows, bj = cols;
    Integer best = 0;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (row_col_only && i != t && j != t) continue;
        if (m[i][j] == 0) continue;
        const Integer a = abs_value(m[i][j]);
        if (bi == rows || a < best) {
          best = a;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == rows) return false;
    std::swap(m[t], m[bi]);
    swap_cols(t, bj);
    return true;
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!bring_min_to(t, false)) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Integer q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Integer q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        bring_min_to(t, true);
        continue;
      }
      // Enforce pivot | every trailing entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    diag.push_back(abs_value(m[t][t]));
  }
  return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
  validate(p);
  const std::size_t gens = p.generator_count();
  std::vector<std::map<int, Integer>> rows;
  std::vector<std::set<int>> col_rows(gens);
  for (const Letters& r : p.relators) {
    std::map<int, Integer> row;
    for (int x : r) row[generator_of(x)] += x > 0 ? 1 : -1;
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    if (row.empty()) continue;
    const int id = static_cast<int>(rows.size());
    for (const auto& [c, v] : row) col_rows[static_cast<std::size_t>(c)].insert(id);
    rows.push_back(std::move(row));
  }

  // Sparse elimination of unit pivots: each removes one generator and one
  // relation without changing the group.
  std::vector<bool> col_alive(gens, true);
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto& row = rows[r];
      int pivot = -1;
      std::size_t pivot_fill = 0;
      for (const auto& [c, v] : row) {
        if (v != 1 && v != -1) continue;
        const std::size_t fill = col_rows[static_cast<std::size_t>(c)].size();
        if (pivot < 0 || fill < pivot_fill) {
          pivot = c;
          pivot_fill = fill;
        }
      }
      if (pivot < 0) continue;
      const Integer unit = row.at(pivot);
      const std::map<int, Integer> pivot_row = row;
      const std::set<int> holders = col_rows[static_cast<std::size_t>(pivot)];
      for (int other : holders) {
        if (other == static_cast<int>(r)) continue;
        auto& target = rows[static_cast<std::size_t>(other)];
        const Integer factor = target.at(pivot) * unit;
        for (const auto& [c, v] : pivot_row) {
          Integer& slot = target[c];
          const bool was_zero = slot == 0;
          slot -= factor * v;
          if (slot == 0) {
            target.erase(c);
            col_rows[static_cast<std::size_t>(c)].erase(other);
          } else if (was_zero) {
            col_rows[static_cast<std::size_t>(c)].insert(other);
          }
        }
      }
      for (const auto& [c, v] : pivot_row) col_rows[static_cast<std::size_t>(c)].erase(static_cast<int>(r));
      row.clear();
      col_alive[static_cast<std::size_t>(pivot)] = false;
      progress = true;
    }
  }

  std::vector<int> dense_col(gens, -1);
  std::size_t live_cols = 0;
  for (std::size_t c = 0; c < gens; ++c) {
    if (col_alive[c]) dense_col[c] = static_cast<int>(live_cols++);
  }
  std::vector<std::vector<Integer>> dense;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    std::vector<Integer> d(live_cols, 0);
    for (const auto& [c, v] : row) d[static_cast<std::size_t>(dense_col[static_cast<std::size_t>(c)])] = v;
    dense.push_back(std::move(d));
  }
  AbelianInvariants out;
  const std::vector<Integer> diag = live_cols == 0 ? std::vector<Integer>{} : smith_diagonal(std::move(dense));
  out.free_rank = live_cols - diag.size();
  for (const Integer& d : diag) {
    if (d > 1) out.torsion.push_back(d);
  }
  return out;
}

}  // namespace bianchi::fp
