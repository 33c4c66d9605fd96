#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/finite_group.hpp"
#include "bianchi/fp_presentation.hpp"

namespace bianchi::fp {

/// Complete right-coset action. Cosets are 0-based here (coset 0 is the
/// subgroup itself); exports shift to 1-based. Column 2g holds the action of
/// generator g, column 2g+1 that of its inverse.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int cosets, int generators, std::vector<int> entries);

  int size() const { return n_; }
  int generator_count() const { return gens_; }
  int column_count() const { return 2 * gens_; }

  int entry(int coset, int column) const {
    return data_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(2 * gens_) + static_cast<std::size_t>(column)];
  }
  int act(int coset, int letter) const { return entry(coset, column_of(letter)); }
  int act(int coset, const Letters& w) const;

  static int column_of(int letter) { return 2 * generator_of(letter) + (letter < 0 ? 1 : 0); }

  /// Renumbered so cosets appear in breadth-first order from coset 0,
  /// scanning columns left to right.
  CosetTable standardized() const;

  /// Permutation of generator g on cosets, 1-based.
  std::vector<int> permutation(int generator) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  int n_ = 0;
  int gens_ = 0;
  std::vector<int> data_;
};

/// First violated table invariant, or nullopt if the table is complete,
/// consistent, transitive, every relator acts trivially and every subgroup
/// generator fixes coset 0.
std::optional<std::string> check_table(const CosetTable& table, const Presentation& p,
                                       const std::vector<Letters>& subgroup = {});

class CosetLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RelatorViolation : public std::runtime_error {
 public:
  RelatorViolation(const std::string& what, std::size_t relator) : std::runtime_error(what), relator_(relator) {}
  std::size_t relator() const { return relator_; }

 private:
  std::size_t relator_;
};

/// HLT coset enumeration with coincidence processing. `limit` bounds the
/// number of cosets ever defined. The result is standardized.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Letters>& subgroup, std::size_t limit = 2'000'000);

/// Coset table of the kernel of the homomorphism sending generator g to
/// images[g] in `target`: the right-regular action on the image subgroup.
/// Throws RelatorViolation if some relator does not map to the identity.
/// The result is standardized.
CosetTable coset_table_from_hom(const Presentation& p, const FiniteGroup& target, const std::vector<int>& images);

}  // namespace bianchi::fp
