#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/abelian.hpp"
#include "bianchi/finite_group.hpp"
#include "bianchi/fp_presentation.hpp"

namespace bianchi::fp {

class HomGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on |target|^generators accepted by hom_count.
inline constexpr double kHomSearchGuard = 1e11;

/// Number of homomorphisms P -> target (generator tuples killing every
/// relator). Backtracks generator by generator, checking each relator as soon
/// as all its generators are assigned; the first generator's images are
/// split across OpenMP threads.
std::uint64_t hom_count(const Presentation& p, const FiniteGroup& target, double guard = kHomSearchGuard);

/// Reference: odometer over every image tuple, one thread, no pruning.
std::uint64_t hom_count_serial(const Presentation& p, const FiniteGroup& target, double guard = kHomSearchGuard);

struct Fingerprint {
  AbelianInvariants abelian;
  std::vector<std::pair<std::string, std::uint64_t>> counts;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// S3, S4, S5, A5, PSL2(7).
std::vector<FiniteGroup> standard_panel();
/// Panel member by name: `S<n>`, `A<n>`, `C<n>`, `PSL2(<p>)`. Throws
/// std::invalid_argument otherwise.
FiniteGroup panel_group(const std::string& name);

Fingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroup>& panel, double guard = kHomSearchGuard);

}  // namespace bianchi::fp
