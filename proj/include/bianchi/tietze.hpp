#pragma once

#include <cstddef>
#include <vector>

#include "bianchi/fp_presentation.hpp"

namespace bianchi::fp {

struct TietzeOptions {
  /// Maximum number of elementary moves (eliminations plus substitutions).
  std::size_t budget = 200'000;
  /// An elimination may not push any relator past growth_cap times the
  /// longest relator before the step.
  double growth_cap = 4.0;
  /// Length-reducing substitutions run only while the presentation has at
  /// most this many relators.
  std::size_t substitution_relator_limit = 600;
  bool substitutions = true;
};

/// Generator `generator` (input numbering) was replaced by `value`, a word in
/// the generators still present at that point (input numbering).
struct Elimination {
  int generator = 0;
  Letters value;
};

struct TietzeResult {
  Presentation presentation;
  /// kept[k] is the input index of output generator k.
  std::vector<int> kept;
  std::vector<Elimination> eliminations;
  bool budget_exhausted = false;
  std::size_t moves = 0;

  /// Image of an input word under the isomorphism onto the output group.
  Letters map_word(const Letters& w) const;
};

/// Simplifies by Tietze moves until fixpoint or budget:
///  1. free and cyclic reduction; trivial and duplicate relators dropped;
///  2. elimination of a generator occurring exactly once in some relator,
///     shortest relator first (ties broken lexicographically);
///  3. replacing a cyclic subword longer than half of some relator by the
///     inverse of the rest of that relator.
/// Deterministic: equal inputs give identical outputs. Output relators are
/// sorted by length, then lexicographically.
TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options = {});

/// Cyclic-permutation/inversion invariant representative of a relator.
Letters canonical_relator(const Letters& r);

}  // namespace bianchi::fp
