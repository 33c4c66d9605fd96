#include "bianchi/coset.hpp"

#include <deque>

namespace bianchi::fp {

CosetTable::CosetTable(int cosets, int generators, std::vector<int> entries)
    : n_(cosets), gens_(generators), data_(std::move(entries)) {
  if (data_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(2 * gens_)) {
    throw std::invalid_argument("coset table size mismatch");
  }
}

int CosetTable::act(int coset, const Letters& w) const {
  for (int x : w) coset = act(coset, x);
  return coset;
}

CosetTable CosetTable::standardized() const {
  if (n_ == 0) return *this;
  const int cols = column_count();
  std::vector<int> order{0};
  std::vector<int> renum(static_cast<std::size_t>(n_), -1);
  renum[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int col = 0; col < cols; ++col) {
      const int next = entry(order[k], col);
      if (next >= 0 && renum[static_cast<std::size_t>(next)] < 0) {
        renum[static_cast<std::size_t>(next)] = static_cast<int>(order.size());
        order.push_back(next);
      }
    }
  }
  std::vector<int> data(order.size() * static_cast<std::size_t>(cols));
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (int col = 0; col < cols; ++col) {
      const int e = entry(order[k], col);
      data[k * static_cast<std::size_t>(cols) + static_cast<std::size_t>(col)] = e < 0 ? -1 : renum[static_cast<std::size_t>(e)];
    }
  }
  return CosetTable(static_cast<int>(order.size()), gens_, std::move(data));
}

std::vector<int> CosetTable::permutation(int generator) const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (int c = 0; c < n_; ++c) out[static_cast<std::size_t>(c)] = entry(c, 2 * generator) + 1;
  return out;
}

std::optional<std::string> check_table(const CosetTable& table, const Presentation& p,
                                       const std::vector<Letters>& subgroup) {
  const int n = table.size();
  if (n == 0) return "empty table";
  if (table.generator_count() != static_cast<int>(p.generator_count())) return "generator count mismatch";
  for (int c = 0; c < n; ++c) {
    for (int col = 0; col < table.column_count(); ++col) {
      const int e = table.entry(c, col);
      if (e < 0 || e >= n) return "incomplete entry at coset " + std::to_string(c + 1);
      if (table.entry(e, col ^ 1) != c) return "inverse mismatch at coset " + std::to_string(c + 1);
    }
  }
  if (table.standardized().size() != n) return "table is not transitive";
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (int c = 0; c < n; ++c) {
      if (table.act(c, p.relators[r]) != c) {
        return "relator " + std::to_string(r + 1) + " moves coset " + std::to_string(c + 1);
      }
    }
  }
  for (std::size_t s = 0; s < subgroup.size(); ++s) {
    if (table.act(0, subgroup[s]) != 0) return "subgroup generator " + std::to_string(s + 1) + " moves coset 1";
  }
  return std::nullopt;
}

namespace {

class Enumerator {
 public:
  Enumerator(int generators, std::size_t limit) : cols_(2 * generators), limit_(limit) { add_coset(); }

  void run(const std::vector<std::vector<int>>& relators, const std::vector<std::vector<int>>& subgroup) {
    for (const auto& w : subgroup) scan_and_fill(0, w);
    for (int alpha = 0; alpha < count_; ++alpha) {
      for (const auto& r : relators) {
        if (!live(alpha)) break;
        scan_and_fill(alpha, r);
      }
      if (!live(alpha)) continue;
      for (int col = 0; col < cols_; ++col) {
        if (at(alpha, col) < 0) define(alpha, col);
      }
    }
  }

  CosetTable table(int generators) {
    // Live cosets only reference live cosets once coincidences are processed.
    std::vector<int> renum(static_cast<std::size_t>(count_), -1);
    int n = 0;
    for (int c = 0; c < count_; ++c) {
      if (live(c)) renum[static_cast<std::size_t>(c)] = n++;
    }
    std::vector<int> data(static_cast<std::size_t>(n) * static_cast<std::size_t>(cols_));
    for (int c = 0; c < count_; ++c) {
      if (!live(c)) continue;
      for (int col = 0; col < cols_; ++col) {
        data[static_cast<std::size_t>(renum[static_cast<std::size_t>(c)]) * static_cast<std::size_t>(cols_) +
             static_cast<std::size_t>(col)] = renum[static_cast<std::size_t>(at(c, col))];
      }
    }
    return CosetTable(n, generators, std::move(data)).standardized();
  }

 private:
  int& at(int coset, int col) {
    return tab_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(col)];
  }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int add_coset() {
    if (static_cast<std::size_t>(count_) >= limit_) {
      throw CosetLimitExceeded("coset enumeration exceeded the limit of " + std::to_string(limit_) + " cosets");
    }
    tab_.resize(tab_.size() + static_cast<std::size_t>(cols_), -1);
    parent_.push_back(count_);
    return count_++;
  }

  void define(int coset, int col) {
    const int fresh = add_coset();
    at(coset, col) = fresh;
    at(fresh, col ^ 1) = coset;
  }

  int rep(int c) {
    int root = c;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(c)] != root) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(int k, int l) {
    const int phi = rep(k), psi = rep(l);
    if (phi == psi) return;
    const int keep = std::min(phi, psi), drop = std::max(phi, psi);
    parent_[static_cast<std::size_t>(drop)] = keep;
    queue_.push_back(drop);
  }

  void coincidence(int alpha, int beta) {
    queue_.clear();
    merge(alpha, beta);
    for (std::size_t i = 0; i < queue_.size(); ++i) {
      const int gamma = queue_[i];
      for (int col = 0; col < cols_; ++col) {
        const int delta = at(gamma, col);
        if (delta < 0) continue;
        at(delta, col ^ 1) = -1;
        const int mu = rep(gamma), nu = rep(delta);
        if (at(mu, col) >= 0) {
          merge(nu, at(mu, col));
        } else if (at(nu, col ^ 1) >= 0) {
          merge(mu, at(nu, col ^ 1));
        } else {
          at(mu, col) = nu;
          at(nu, col ^ 1) = mu;
        }
      }
    }
  }

  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    int f = alpha, b = alpha;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = at(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  int cols_;
  std::size_t limit_;
  int count_ = 0;
  std::vector<int> tab_;
  std::vector<int> parent_;
  std::vector<int> queue_;
};

std::vector<int> as_columns(const Letters& w) {
  std::vector<int> out;
  out.reserve(w.size());
  for (int x : w) out.push_back(CosetTable::column_of(x));
  return out;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Letters>& subgroup, std::size_t limit) {
  validate(p);
  const int gens = static_cast<int>(p.generator_count());
  std::vector<std::vector<int>> relators, subgens;
  for (const Letters& r : p.relators) {
    Letters w = r;
    cyclic_reduce(w);
    relators.push_back(as_columns(w));
  }
  for (const Letters& s : subgroup) {
    Letters w = s;
    free_reduce(w);
    subgens.push_back(as_columns(w));
  }
  if (gens == 0) return CosetTable(1, 0, {});
  Enumerator e(gens, limit);
  e.run(relators, subgens);
  return e.table(gens);
}

CosetTable coset_table_from_hom(const Presentation& p, const FiniteGroup& target, const std::vector<int>& images) {
  validate(p);
  if (images.size() != p.generator_count()) throw std::invalid_argument("one image per generator is required");
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    if (target.eval(p.relators[r], images) != target.identity()) {
      throw RelatorViolation("relator " + std::to_string(r + 1) + " is not trivial in " + target.name(), r);
    }
  }
  const int gens = static_cast<int>(p.generator_count());
  const int cols = 2 * gens;
  std::vector<int> col_image(static_cast<std::size_t>(cols));
  for (int g = 0; g < gens; ++g) {
    col_image[static_cast<std::size_t>(2 * g)] = images[static_cast<std::size_t>(g)];
    col_image[static_cast<std::size_t>(2 * g + 1)] = target.inverse(images[static_cast<std::size_t>(g)]);
  }
  // Breadth-first discovery numbering coincides with standardization.
  std::vector<int> element_of{target.identity()};
  std::vector<int> coset_of(static_cast<std::size_t>(target.order()), -1);
  coset_of[static_cast<std::size_t>(target.identity())] = 0;
  std::vector<int> data;
  for (std::size_t k = 0; k < element_of.size(); ++k) {
    for (int col = 0; col < cols; ++col) {
      const int next = target.mul(element_of[k], col_image[static_cast<std::size_t>(col)]);
      int& slot = coset_of[static_cast<std::size_t>(next)];
      if (slot < 0) {
        slot = static_cast<int>(element_of.size());
        element_of.push_back(next);
      }
      data.push_back(slot);
    }
  }
  return CosetTable(static_cast<int>(element_of.size()), gens, std::move(data));
}

}  // namespace bianchi::fp
