#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bianchi/fp_presentation.hpp"
#include "bianchi/matgroup.hpp"

namespace bianchi::fp {

/// Permutation of {0, ..., n-1}; p[x] is the image of x.
using Perm = std::vector<int>;

/// Right action: x^(p*q) = (x^p)^q, i.e. apply p first.
Perm perm_mul(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
Perm perm_identity(int n);
bool perm_is_identity(const Perm& p);
/// Image of a word under generator permutations `images`.
Perm perm_eval(const Letters& w, const std::vector<Perm>& images, int degree);
/// Parses cycle notation over 1-based points, e.g. `(1 2 3)(4 5)` or `()`.
Perm parse_cycles(const std::string& text, int degree);
std::string cycles_to_string(const Perm& p);
/// Cycle lengths in order of smallest point, fixed points included.
std::vector<int> cycle_type(const Perm& p);

/// Finite group with a dense multiplication table over element indices.
class FiniteGroup {
 public:
  /// Closure of the given permutations. Throws std::length_error past max_order.
  static FiniteGroup from_permutations(std::string name, const std::vector<Perm>& generators,
                                       std::size_t max_order = 20000);
  /// Throws std::length_error when the group has more than max_order elements.
  static FiniteGroup from_matrix_group(std::string name, const FiniteMatrixGroup& g, std::size_t max_order = 5000);
  /// Index in from_matrix_group(g) of element k of g.
  static int matrix_element_index(const FiniteMatrixGroup& g, int k);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);
  static FiniteGroup alternating(int n);
  /// PSL_2(F_p) acting on the projective line.
  static FiniteGroup psl2(int p);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int i, int j) const { return table_[static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(j)]; }
  int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
  /// Element reached by a letter word, given images of the generators.
  int eval(const Letters& w, const std::vector<int>& images) const;
  bool is_abelian() const;

 private:
  FiniteGroup(std::string name, int order, std::vector<int> table);

  std::string name_;
  int order_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
};

}  // namespace bianchi::fp
