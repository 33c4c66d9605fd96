#pragma once

#include <stdexcept>
#include <vector>

#include "bianchi/coset.hpp"

namespace bianchi::fp {

class NotInSubgroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rewrites words of the parent group that lie in the subgroup as words in
/// the Schreier generators.
class RewritingMap {
 public:
  RewritingMap() = default;
  RewritingMap(CosetTable table, std::vector<int> schreier_index);

  /// Throws NotInSubgroup when w does not return to coset 0.
  Letters rewrite(const Letters& w) const;
  /// Rewrite of w read from `coset`, together with the coset it ends at.
  Letters rewrite_from(int coset, const Letters& w, int* end = nullptr) const;

  const CosetTable& table() const { return table_; }
  /// Schreier generator index (0-based) of (coset, generator), or -1 for a
  /// spanning-tree edge.
  int schreier_generator(int coset, int generator) const {
    return index_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(table_.generator_count()) +
                  static_cast<std::size_t>(generator)];
  }

 private:
  CosetTable table_;
  std::vector<int> index_;
};

struct SubgroupPresentation {
  Presentation presentation;
  RewritingMap rewriting;
};

/// Reidemeister-Schreier: presentation of the subgroup with coset table `t`
/// on n*|gens| - (n-1) Schreier generators named `<gen>_<coset>` (1-based
/// coset), with the n*|relators| rewritten conjugates of the relators, in
/// coset-major order. Rewrites that reduce to the empty word are kept.
SubgroupPresentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

}  // namespace bianchi::fp
