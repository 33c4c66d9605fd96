#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/coset.hpp"
#include "bianchi/finite_group.hpp"
#include "bianchi/fp_presentation.hpp"

namespace bianchi {

/// Permutation representation of a link group: images[g] is the permutation
/// assigned to generator g of `source`. `components` groups meridian
/// generator names by link component.
struct Monodromy {
  fp::Presentation source;
  std::vector<std::vector<std::string>> components;
  int degree = 1;
  std::vector<fp::Perm> images;
};

struct MonodromyCheck {
  bool valid = true;
  /// 0-based index of the first relator not mapped to the identity.
  std::optional<std::size_t> failing_relator;
  bool transitive = true;
  /// Same-component meridians whose images have different cycle types.
  std::vector<std::string> warnings;
  std::string message;
};

/// Validates that every relator maps to the identity and that the image
/// acts transitively on {1..degree}. Structural problems (wrong image count,
/// wrong degree, unknown component generator) throw std::invalid_argument.
MonodromyCheck check_monodromy(const Monodromy& m);

/// Extends m to `full`, whose generators are those of m.source (matched by
/// name) plus the meridians listed in `new_components`, which are sent to
/// the identity. Throws fp::RelatorViolation when a relator of `full` fails,
/// and std::invalid_argument when a generator of `full` is unaccounted for.
Monodromy extend_trivially(const Monodromy& m, const fp::Presentation& full,
                           const std::vector<std::vector<std::string>>& new_components);
/// As above with `full` = m.source plus the new meridians as free generators.
Monodromy extend_trivially(const Monodromy& m, const std::vector<std::vector<std::string>>& new_components);

/// Per component, the number of cycles of its first meridian's image.
std::vector<int> branch_preimage_counts(const Monodromy& m);

/// Text format:
///   degree: 3
///   gens: a b             (optional embedded presentation)
///   rel: a*b*a^-1*b^-1
///   gen a -> (1 2 3)
///   component: a
/// Generators without a `gen` line map to the identity. Without a `gens:`
/// line the generators are those named by `gen` lines, with no relators.
Monodromy parse_monodromy(std::string_view text);
Monodromy read_monodromy_file(const std::string& path);
std::string print_monodromy(const Monodromy& m);

}  // namespace bianchi
