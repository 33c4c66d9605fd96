#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bianchi/abelian.hpp"
#include "bianchi/coset.hpp"
#include "bianchi/homcount.hpp"
#include "bianchi/schreier.hpp"
#include "bianchi/tietze.hpp"
#include "bianchi/words.hpp"

namespace bianchi {

class TableMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gamma(3+2i) presented on Schreier generators of the Swan presentation.
struct KernelPresentation {
  fp::Presentation swan;
  /// Coset table of Gamma(3+2i), from the mod-(3+2i) matrix images.
  fp::CosetTable table;
  /// Order reported by enumerate_image(3+2i).
  std::size_t image_order = 0;
  /// Cosets found by Todd-Coxeter on Swan + {t^13, t^-5 u}.
  std::size_t todd_coxeter_cosets = 0;
  fp::SubgroupPresentation kernel;
  /// The 42 meridians, rewritten in Schreier generators (index 0 = entry 1).
  std::vector<fp::Letters> meridians;
};

/// Builds the coset table both ways (finite images and Todd-Coxeter), requires
/// identical standardized tables, then runs Reidemeister-Schreier and rewrites
/// every meridian. Throws TableMismatch when the routes disagree and
/// fp::NotInSubgroup if a meridian fails to rewrite.
KernelPresentation build_kernel_presentation(const MeridianTable& meridians = load_meridians());

struct FillOptions {
  fp::TietzeOptions tietze;
  std::vector<fp::FiniteGroup> panel = fp::standard_panel();
  double hom_guard = fp::kHomSearchGuard;
};

enum class FillStatus { complete, incomplete };

std::string to_string(FillStatus s);

struct FillResult {
  /// Kept meridian, 1..42; 0 when every meridian is filled.
  int kept_index = 0;
  FillStatus status = FillStatus::complete;
  /// Why the result is incomplete, empty otherwise.
  std::string note;
  fp::Presentation presentation;
  fp::AbelianInvariants abelian;
  /// Present whenever the simplified quotient is small enough to count.
  std::optional<fp::Fingerprint> fingerprint;
  /// Abelianization Z and fingerprint equal to the figure-eight reference.
  bool matches_fig8 = false;
  std::size_t tietze_moves = 0;
};

/// Figure-eight knot group, read from data/fig8.pres.
fp::Presentation fig8_presentation();
fp::Fingerprint fig8_fingerprint(const FillOptions& options = {});

/// Quotient of the kernel by the normal closure of every meridian except
/// `kept` (1..42), or of all of them when kept = 0.
FillResult fill(const KernelPresentation& k, int kept, const FillOptions& options = {});
FillResult fill(const KernelPresentation& k, int kept, const FillOptions& options, const fp::Fingerprint& reference);

/// fill(k) for every k in 1..42, spread over OpenMP threads; ordered by k.
std::vector<FillResult> scan_all(const KernelPresentation& k, const FillOptions& options = {});
/// Single-threaded reference for scan_all.
std::vector<FillResult> scan_all_serial(const KernelPresentation& k, const FillOptions& options = {});

}  // namespace bianchi
