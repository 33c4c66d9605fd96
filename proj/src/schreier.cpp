#include "bianchi/schreier.hpp"

namespace bianchi::fp {

RewritingMap::RewritingMap(CosetTable table, std::vector<int> schreier_index)
    : table_(std::move(table)), index_(std::move(schreier_index)) {}

Letters RewritingMap::rewrite_from(int coset, const Letters& w, int* end) const {
  Letters out;
  for (int x : w) {
    const int g = generator_of(x);
    if (x > 0) {
      const int s = schreier_generator(coset, g);
      if (s >= 0) out.push_back(s + 1);
      coset = table_.act(coset, x);
    } else {
      coset = table_.act(coset, x);
      const int s = schreier_generator(coset, g);
      if (s >= 0) out.push_back(-(s + 1));
    }
  }
  free_reduce(out);
  if (end != nullptr) *end = coset;
  return out;
}

Letters RewritingMap::rewrite(const Letters& w) const {
  int end = 0;
  Letters out = rewrite_from(0, w, &end);
  if (end != 0) throw NotInSubgroup("word ends at coset " + std::to_string(end + 1) + ", not in the subgroup");
  return out;
}

SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  validate(p);
  if (auto err = check_table(t, p)) throw std::invalid_argument("reidemeister_schreier: " + *err);
  const int n = t.size();
  const int gens = static_cast<int>(p.generator_count());

  // Breadth-first spanning tree: tree_col[c] is the column through which c
  // was first reached.
  std::vector<int> parent(static_cast<std::size_t>(n), -1), tree_col(static_cast<std::size_t>(n), -1);
  std::vector<int> order{0};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int col = 0; col < t.column_count(); ++col) {
      const int next = t.entry(order[k], col);
      if (!seen[static_cast<std::size_t>(next)]) {
        seen[static_cast<std::size_t>(next)] = true;
        parent[static_cast<std::size_t>(next)] = order[k];
        tree_col[static_cast<std::size_t>(next)] = col;
        order.push_back(next);
      }
    }
  }

  SubgroupPresentation out;
  std::vector<int> index(static_cast<std::size_t>(n) * static_cast<std::size_t>(gens), -1);
  for (int c = 0; c < n; ++c) {
    for (int g = 0; g < gens; ++g) {
      const int target = t.entry(c, 2 * g);
      const bool forward_tree = parent[static_cast<std::size_t>(target)] == c && tree_col[static_cast<std::size_t>(target)] == 2 * g;
      const bool backward_tree = parent[static_cast<std::size_t>(c)] == target && tree_col[static_cast<std::size_t>(c)] == 2 * g + 1;
      if (forward_tree || backward_tree) continue;
      index[static_cast<std::size_t>(c) * static_cast<std::size_t>(gens) + static_cast<std::size_t>(g)] =
          static_cast<int>(out.presentation.generators.size());
      out.presentation.generators.push_back(p.generators[static_cast<std::size_t>(g)] + "_" + std::to_string(c + 1));
    }
  }
  out.rewriting = RewritingMap(t, std::move(index));
  out.presentation.relators.reserve(static_cast<std::size_t>(n) * p.relators.size());
  for (int c = 0; c < n; ++c) {
    for (const Letters& r : p.relators) out.presentation.relators.push_back(out.rewriting.rewrite_from(c, r));
  }
  return out;
}

}  // namespace bianchi::fp
