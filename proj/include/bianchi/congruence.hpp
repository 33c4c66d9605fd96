#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/matgroup.hpp"
#include "bianchi/quadint.hpp"

namespace bianchi {

/// Principal congruence subgroup Gamma(alpha) of PSL_2(Z[i]).
class CongruenceGroup {
 public:
  /// Throws std::invalid_argument for alpha = 0 or alpha outside Z[i].
  explicit CongruenceGroup(QuadInt alpha, ImageGuard guard = {});

  const QuadInt& alpha() const { return alpha_; }
  const ResidueRing& ring() const { return ring_; }
  /// PSL_2(Z[i]/(alpha)), enumerated on first use. Throws GuardExceeded.
  const FiniteMatrixGroup& image() const;

  /// M = +-I (mod alpha).
  bool member(const ProjMat& m) const;

 private:
  QuadInt alpha_;
  ResidueRing ring_;
  ImageGuard guard_;
  mutable std::once_flag once_;
  mutable std::shared_ptr<const FiniteMatrixGroup> image_;
};

/// sign * tr(M) = z * alpha^2 + 2.
struct TraceWitness {
  QuadInt z;
  int sign = 1;
  /// Both signs solve the congruence (only possible when alpha^2 | 4).
  bool both_signs = false;
};

class TraceCongruenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Pure divisibility form, valid in every O_d. Throws TraceCongruenceFailure
/// when neither tr - 2 nor tr + 2 is divisible by alpha^2.
TraceWitness trace_congruence_witness(const QuadInt& alpha, const ProjMat& m);
/// Throws std::invalid_argument when M is not in Gamma(alpha).
TraceWitness trace_congruence_witness(const CongruenceGroup& g, const ProjMat& m);

/// 2 arccosh((norm(alpha) - 2) / 2). Throws std::domain_error when
/// norm(alpha) <= 4.
double systole_lower_bound(const QuadInt& alpha);

struct AuditOptions {
  /// Throws GuardExceeded once more distinct elements than this are seen.
  std::size_t max_elements = 20'000'000;
};

struct AuditViolation {
  std::string matrix;
  std::string trace;
  double ell0 = 0.0;
  std::string reason;
  friend bool operator==(const AuditViolation&, const AuditViolation&) = default;
};

struct GeodesicAudit {
  QuadInt alpha;
  double bound = 0.0;
  int radius = 0;
  /// Distinct elements in the ball, identity included.
  std::size_t elements_visited = 0;
  std::size_t kernel_elements = 0;
  std::size_t loxodromic_kernel_elements = 0;
  std::optional<double> min_loxodromic_length;
  /// Smallest |tr|^2 over loxodromic kernel elements.
  std::optional<Integer> min_trace_norm;
  std::vector<AuditViolation> violations;

  bool passed() const { return violations.empty(); }
};

/// Breadth-first search of the radius-r ball in PSL_2(Z[i]) for the generators
/// a, l, t, t^-1, u, u^-1, deduplicated on exact matrix keys. Each loxodromic
/// element of Gamma(alpha) must have ell0 >= bound - 1e-9 and
/// |tr|^2 >= (norm(alpha) - 2)^2. Frontiers are split across OpenMP threads
/// over a sharded, lock-protected visited set.
GeodesicAudit audit_short_geodesics(const CongruenceGroup& g, int radius, const AuditOptions& options = {});
/// Single-threaded reference for audit_short_geodesics.
GeodesicAudit audit_short_geodesics_serial(const CongruenceGroup& g, int radius, const AuditOptions& options = {});

/// Order of the image of the cusp stabilizer <t, u, l> in the finite quotient.
std::size_t stabilizer_image_order(const CongruenceGroup& g);
/// |PSL_2(Z[i]/(alpha))| / |image of <t, u, l>|.
std::size_t count_cusps(const CongruenceGroup& g);

/// t^13 and t^-5 u both lie in Gamma(alpha) and are parabolic.
bool peripheral_check(const CongruenceGroup& g);

}  // namespace bianchi
