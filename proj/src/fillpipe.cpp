#include "bianchi/fillpipe.hpp"

#include <cmath>

#include "bianchi/matgroup.hpp"

namespace bianchi {

namespace {

const QuadInt kAlpha = QuadInt::gaussian(3, 2);

bool small_enough(const fp::Presentation& p, const std::vector<fp::FiniteGroup>& panel, double guard) {
  for (const fp::FiniteGroup& g : panel) {
    if (std::pow(static_cast<double>(g.order()), static_cast<double>(p.generator_count())) > guard) return false;
  }
  return true;
}

}  // namespace

KernelPresentation build_kernel_presentation(const MeridianTable& meridians) {
  KernelPresentation out;
  out.swan = fp::from_words(swan_presentation());
  const Dictionary dict = swan_dictionary();

  const auto image = enumerate_image(kAlpha);
  out.image_order = image->order();
  const fp::FiniteGroup quotient = fp::FiniteGroup::from_matrix_group("PSL2(Z[i]/(3+2i))", *image);
  std::vector<int> images;
  for (const std::string& g : out.swan.generators) {
    const int k = image->find(reduce_mat(image->ring(), dict.at(g)));
    images.push_back(fp::FiniteGroup::matrix_element_index(*image, k));
  }
  out.table = fp::coset_table_from_hom(out.swan, quotient, images);

  fp::Presentation closure = out.swan;
  for (const char* w : {"t^13", "t^-5*u"}) closure.relators.push_back(fp::to_letters(parse_word(w), closure.generators));
  const fp::CosetTable enumerated = fp::todd_coxeter(closure, {});
  out.todd_coxeter_cosets = static_cast<std::size_t>(enumerated.size());
  if (out.todd_coxeter_cosets != out.image_order || static_cast<std::size_t>(out.table.size()) != out.image_order) {
    throw TableMismatch("coset counts disagree: image order " + std::to_string(out.image_order) + ", Todd-Coxeter " +
                        std::to_string(out.todd_coxeter_cosets) + ", homomorphism table " +
                        std::to_string(out.table.size()));
  }
  if (!(enumerated == out.table)) throw TableMismatch("standardized coset tables differ");

  out.kernel = fp::reidemeister_schreier(out.swan, out.table);
  for (const Word& m : meridians.entries) {
    out.meridians.push_back(out.kernel.rewriting.rewrite(fp::to_letters(m, out.swan.generators)));
  }
  return out;
}

std::string to_string(FillStatus s) { return s == FillStatus::complete ? "complete" : "incomplete"; }

fp::Presentation fig8_presentation() { return fp::from_words(read_presentation_file(data_dir() / "fig8.pres")); }

fp::Fingerprint fig8_fingerprint(const FillOptions& options) {
  return fp::fingerprint(fig8_presentation(), options.panel, options.hom_guard);
}

FillResult fill(const KernelPresentation& k, int kept, const FillOptions& options) {
  return fill(k, kept, options, fig8_fingerprint(options));
}

FillResult fill(const KernelPresentation& k, int kept, const FillOptions& options, const fp::Fingerprint& reference) {
  if (kept < 0 || static_cast<std::size_t>(kept) > k.meridians.size()) {
    throw std::invalid_argument("kept meridian " + std::to_string(kept) + " outside 0.." +
                            std::to_string(k.meridians.size()));
  }
  fp::Presentation quotient = k.kernel.presentation;
  for (std::size_t m = 0; m < k.meridians.size(); ++m) {
    if (static_cast<int>(m) + 1 != kept) quotient.relators.push_back(k.meridians[m]);
  }
  const fp::TietzeResult simplified = fp::tietze_simplify(quotient, options.tietze);

  FillResult out;
  out.kept_index = kept;
  out.presentation = simplified.presentation;
  out.tietze_moves = simplified.moves;
  out.abelian = fp::abelianization(out.presentation);
  if (simplified.budget_exhausted) {
    out.status = FillStatus::incomplete;
    out.note = "Tietze budget exhausted";
  }
  if (small_enough(out.presentation, options.panel, options.hom_guard)) {
    out.fingerprint = fp::fingerprint(out.presentation, options.panel, options.hom_guard);
  } else {
    out.status = FillStatus::incomplete;
    if (!out.note.empty()) out.note += "; ";
    out.note += std::to_string(out.presentation.generator_count()) + " generators remain, too many to fingerprint";
  }
  out.matches_fig8 = out.fingerprint && out.abelian.is_infinite_cyclic() && *out.fingerprint == reference;
  return out;
}

std::vector<FillResult> scan_all(const KernelPresentation& k, const FillOptions& options) {
  const fp::Fingerprint reference = fig8_fingerprint(options);
  const int n = static_cast<int>(k.meridians.size());
  std::vector<FillResult> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (int kept = 1; kept <= n; ++kept) out[static_cast<std::size_t>(kept - 1)] = fill(k, kept, options, reference);
  return out;
}

std::vector<FillResult> scan_all_serial(const KernelPresentation& k, const FillOptions& options) {
  const fp::Fingerprint reference = fig8_fingerprint(options);
  std::vector<FillResult> out;
  for (int kept = 1; kept <= static_cast<int>(k.meridians.size()); ++kept) out.push_back(fill(k, kept, options, reference));
  return out;
}

}  // namespace bianchi
