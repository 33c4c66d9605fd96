#include "bianchi/finite_group.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bianchi::fp {

Perm perm_mul(const Perm& p, const Perm& q) {
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = q[static_cast<std::size_t>(p[x])];
  return out;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return out;
}

Perm perm_identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] != static_cast<int>(x)) return false;
  }
  return true;
}

Perm perm_eval(const Letters& w, const std::vector<Perm>& images, int degree) {
  Perm out = perm_identity(degree);
  for (int x : w) {
    const Perm& g = images.at(static_cast<std::size_t>(generator_of(x)));
    Perm next(out.size());
    if (x > 0) {
      for (std::size_t k = 0; k < out.size(); ++k) next[k] = g[static_cast<std::size_t>(out[k])];
    } else {
      const Perm inv = perm_inverse(g);
      for (std::size_t k = 0; k < out.size(); ++k) next[k] = inv[static_cast<std::size_t>(out[k])];
    }
    out = std::move(next);
  }
  return out;
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm p = perm_identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  std::size_t pos = 0;
  auto bad = [&](const std::string& msg) { return std::invalid_argument("cycle notation '" + text + "': " + msg); };
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw bad("expected '('");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip();
      if (pos >= text.size()) throw bad("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t used_chars = 0;
      int point = 0;
      try {
        point = std::stoi(text.substr(pos), &used_chars);
      } catch (const std::exception&) {
        throw bad("expected a point");
      }
      pos += used_chars;
      if (point < 1 || point > degree) throw bad("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (used[static_cast<std::size_t>(point - 1)]) throw bad("point " + std::to_string(point) + " repeated");
      used[static_cast<std::size_t>(point - 1)] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
    }
    skip();
  }
  return p;
}

std::string cycles_to_string(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(p[x])) {
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

FiniteGroup::FiniteGroup(std::string name, int order, std::vector<int> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)), inverse_(static_cast<std::size_t>(order), -1) {
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) {
      if (mul(i, j) == 0) {
        inverse_[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
  }
}

FiniteGroup FiniteGroup::from_permutations(std::string name, const std::vector<Perm>& generators,
                                           std::size_t max_order) {
  const int degree = generators.empty() ? 0 : static_cast<int>(generators.front().size());
  std::vector<Perm> elements{perm_identity(degree)};
  std::map<Perm, int> index{{elements.front(), 0}};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const Perm& g : generators) {
      Perm next = perm_mul(elements[k], g);
      if (index.emplace(next, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(next));
        if (elements.size() > max_order) throw std::length_error("permutation group exceeds max order");
      }
    }
  }
  const auto n = static_cast<int>(elements.size());
  std::vector<int> table(elements.size() * elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      table[i * elements.size() + j] = index.at(perm_mul(elements[i], elements[j]));
    }
  }
  return FiniteGroup(std::move(name), n, std::move(table));
}

FiniteGroup FiniteGroup::from_matrix_group(std::string name, const FiniteMatrixGroup& g, std::size_t max_order) {
  if (g.order() > max_order) throw std::length_error("matrix group of order " + std::to_string(g.order()) + " too large for a dense table");
  // Reorder so the identity is element 0.
  const auto n = static_cast<int>(g.order());
  std::vector<int> to_local(g.order()), to_global(g.order());
  std::iota(to_global.begin(), to_global.end(), 0);
  std::swap(to_global[0], to_global[static_cast<std::size_t>(g.identity())]);
  for (int k = 0; k < n; ++k) to_local[static_cast<std::size_t>(to_global[static_cast<std::size_t>(k)])] = k;
  std::vector<int> table(g.order() * g.order());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int prod = g.mul(to_global[static_cast<std::size_t>(i)], to_global[static_cast<std::size_t>(j)]);
      table[static_cast<std::size_t>(i) * g.order() + static_cast<std::size_t>(j)] = to_local[static_cast<std::size_t>(prod)];
    }
  }
  return FiniteGroup(std::move(name), n, std::move(table));
}

int FiniteGroup::matrix_element_index(const FiniteMatrixGroup& g, int k) {
  // from_matrix_group swaps the identity with element 0.
  if (k == g.identity()) return 0;
  return k == 0 ? g.identity() : k;
}

FiniteGroup FiniteGroup::trivial() { return FiniteGroup("1", 1, {0}); }

FiniteGroup FiniteGroup::cyclic(int n) {
  Perm c = perm_identity(n);
  for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = (k + 1) % n;
  return from_permutations("C" + std::to_string(n), {c});
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 2) return trivial();
  Perm swap = perm_identity(n), cycle = perm_identity(n);
  std::swap(swap[0], swap[1]);
  for (int k = 0; k < n; ++k) cycle[static_cast<std::size_t>(k)] = (k + 1) % n;
  return from_permutations("S" + std::to_string(n), {swap, cycle});
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 3) return trivial();
  // 3-cycles (0 1 k) generate A_n.
  std::vector<Perm> gens;
  for (int k = 2; k < n; ++k) {
    Perm c = perm_identity(n);
    c[0] = 1;
    c[1] = k;
    c[static_cast<std::size_t>(k)] = 0;
    gens.push_back(c);
  }
  return from_permutations("A" + std::to_string(n), gens);
}

FiniteGroup FiniteGroup::psl2(int p) {
  // Points 0..p-1 of F_p plus infinity = p.
  const int inf = p;
  Perm shift(static_cast<std::size_t>(p + 1)), invert(static_cast<std::size_t>(p + 1));
  for (int z = 0; z < p; ++z) shift[static_cast<std::size_t>(z)] = (z + 1) % p;
  shift[static_cast<std::size_t>(inf)] = inf;
  invert[0] = inf;
  invert[static_cast<std::size_t>(inf)] = 0;
  for (int z = 1; z < p; ++z) {
    int inv = 1;
    while ((inv * z) % p != 1) ++inv;
    invert[static_cast<std::size_t>(z)] = (p - inv) % p;
  }
  return from_permutations("PSL2(" + std::to_string(p) + ")", {shift, invert});
}

int FiniteGroup::eval(const Letters& w, const std::vector<int>& images) const {
  int acc = 0;
  for (int x : w) {
    const int g = images[static_cast<std::size_t>(generator_of(x))];
    acc = mul(acc, x > 0 ? g : inverse(g));
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order_; ++i) {
    for (int j = i + 1; j < order_; ++j) {
      if (mul(i, j) != mul(j, i)) return false;
    }
  }
  return true;
}

}  // namespace bianchi::fp
