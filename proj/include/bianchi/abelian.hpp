#pragma once

#include <string>
#include <vector>

#include "bianchi/fp_presentation.hpp"
#include "bianchi/quadint.hpp"

namespace bianchi::fp {

/// Z^free_rank + Z/d1 + ... + Z/dk with 1 < d1 | d2 | ... | dk.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  bool is_infinite_cyclic() const { return torsion.empty() && free_rank == 1; }
  /// e.g. `Z^2 + Z/2 + Z/6`, `0` for the trivial group.
  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Invariant factors of an integer matrix (all nonzero diagonal entries of
/// its Smith normal form, in divisibility order, units included).
std::vector<Integer> smith_diagonal(std::vector<std::vector<Integer>> m);

/// Smith normal form of the relator exponent-sum matrix. Unit pivots are
/// eliminated sparsely first, so large sparse presentations stay cheap.
AbelianInvariants abelianization(const Presentation& p);

}  // namespace bianchi::fp
