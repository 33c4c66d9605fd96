#include <doctest.h>

#include <optional>

#include "bianchi/fillpipe.hpp"
#include "bianchi/congruence.hpp"
#include "support.hpp"

namespace fp = bianchi::fp;
using bianchi::ProjMat;

namespace {

const bianchi::KernelPresentation& kernel() {
  static const bianchi::KernelPresentation k = bianchi::build_kernel_presentation();
  return k;
}

const std::vector<bianchi::FillResult>& scan() {
  static const std::vector<bianchi::FillResult> s = bianchi::scan_all(kernel());
  return s;
}

// Matrix of every Schreier generator: rep(c) * g * rep(c g)^-1, with
// representatives read off the spanning tree.
std::vector<ProjMat> schreier_matrices(const bianchi::KernelPresentation& k) {
  const auto& map = k.kernel.rewriting;
  const auto& t = map.table();
  const auto dict = bianchi::swan_dictionary();
  std::vector<ProjMat> gen;
  for (const auto& name : k.swan.generators) gen.push_back(dict.at(name));
  std::vector<std::optional<ProjMat>> rep(static_cast<std::size_t>(t.size()));
  rep[0] = ProjMat();
  for (bool grew = true; grew;) {
    grew = false;
    for (int c = 0; c < t.size(); ++c)
      for (int g = 0; g < t.generator_count(); ++g) {
        if (map.schreier_generator(c, g) != -1) continue;
        const int d = t.act(c, g + 1);
        if (rep[c] && !rep[d]) {
          rep[d] = *rep[c] * gen[g];
          grew = true;
        } else if (rep[d] && !rep[c]) {
          rep[c] = *rep[d] * gen[g].inverse();
          grew = true;
        }
      }
  }
  std::vector<ProjMat> out(k.kernel.presentation.generator_count());
  for (int c = 0; c < t.size(); ++c)
    for (int g = 0; g < t.generator_count(); ++g) {
      const int s = map.schreier_generator(c, g);
      if (s >= 0) out[static_cast<std::size_t>(s)] = rep[c].value() * gen[g] * rep[t.act(c, g + 1)].value().inverse();
    }
  return out;
}

ProjMat eval_letters(const fp::Letters& w, const std::vector<ProjMat>& images) {
  ProjMat m;
  for (int x : w) m = m * (x > 0 ? images[x - 1] : images[-x - 1].inverse());
  return m;
}

}  // namespace

TEST_CASE("kernel presentation counts") {
  const auto& k = kernel();
  CHECK(k.image_order == 1092);
  CHECK(k.todd_coxeter_cosets == 1092);
  CHECK(k.table.size() == 1092);
  CHECK(k.kernel.presentation.generator_count() == 1092 * 4 - 1091);
  CHECK(k.kernel.presentation.generator_count() == 3277);
  CHECK(k.kernel.presentation.relators.size() == 1092 * 8);
  CHECK(k.meridians.size() == 42);
  for (const auto& m : k.meridians) CHECK_FALSE(m.empty());
}

TEST_CASE("rewrites evaluate to the original matrices") {
  const auto& k = kernel();
  const auto images = schreier_matrices(k);
  const auto dict = bianchi::swan_dictionary();
  const bianchi::CongruenceGroup gamma(bianchi::QuadInt::gaussian(3, 2));
  for (const ProjMat& m : images) CHECK(gamma.member(m));
  for (const char* w : {"t^13", "t^-5*u", "(t^13*a)^2"}) {
    const auto word = bianchi::parse_word(w);
    const auto rewritten = k.kernel.rewriting.rewrite(fp::to_letters(word, k.swan.generators));
    CHECK(eval_letters(rewritten, images) == eval(word, dict));
  }
  const auto table = bianchi::load_meridians();
  for (std::size_t i = 0; i < table.entries.size(); ++i) CHECK(eval_letters(k.meridians[i], images) == eval(table.entries[i], dict));
  // Each subgroup relator maps to the identity.
  for (std::size_t r = 0; r < k.kernel.presentation.relators.size(); r += 97) {
    CHECK(eval_letters(k.kernel.presentation.relators[r], images).is_identity());
  }
  CHECK_THROWS_AS(k.kernel.rewriting.rewrite(fp::to_letters(bianchi::parse_word("t"), k.swan.generators)), fp::NotInSubgroup);
}

TEST_CASE("figure-eight reference") {
  const auto f = bianchi::fig8_fingerprint();
  CHECK(f.abelian.is_infinite_cyclic());
  const std::vector<std::pair<std::string, std::uint64_t>> want{{"S3", 6}, {"S4", 48}, {"S5", 600}, {"A5", 300}, {"PSL2(7)", 1848}};
  CHECK(f.counts == want);
}

TEST_CASE("filling all but meridian 14 gives a figure-eight group") {
  const auto r = bianchi::fill(kernel(), 14);
  CHECK(r.status == bianchi::FillStatus::complete);
  CHECK(r.matches_fig8);
  CHECK(r.abelian.is_infinite_cyclic());
  REQUIRE(r.fingerprint.has_value());
  CHECK(*r.fingerprint == bianchi::fig8_fingerprint());
  // Brute-force counts on the simplified quotient itself.
  REQUIRE(r.presentation.generator_count() <= 2);
  const int gens = static_cast<int>(r.presentation.generator_count());
  CHECK(oracle::count_homs(r.presentation.relators, gens, oracle::all_perms(4, false), 4) == 48);
  CHECK(oracle::count_homs(r.presentation.relators, gens, oracle::all_perms(5, true), 5) == 300);
  CHECK(oracle::count_homs_psl2(r.presentation.relators, gens, 7) == 1848);
  CHECK(bianchi::fill(kernel(), 14).presentation == r.presentation);
}

TEST_CASE("filling every meridian gives the trivial group") {
  const auto r = bianchi::fill(kernel(), 0);
  CHECK(r.status == bianchi::FillStatus::complete);
  CHECK(r.abelian.is_trivial());
  CHECK_FALSE(r.matches_fig8);
  CHECK(r.presentation.generator_count() == 0);
  REQUIRE(r.fingerprint.has_value());
  for (const auto& [name, count] : r.fingerprint->counts) CHECK(count == 1);
  CHECK_THROWS_AS(bianchi::fill(kernel(), 43), std::invalid_argument);
  CHECK_THROWS_AS(bianchi::fill(kernel(), -1), std::invalid_argument);
}

TEST_CASE("scan over kept meridians") {
  const auto& results = scan();
  REQUIRE(results.size() == 42);
  std::vector<int> matches;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    CHECK(r.kept_index == static_cast<int>(i) + 1);
    CHECK(r.status == bianchi::FillStatus::complete);
    // The kept meridian survives: the quotient is a knot group.
    CHECK_FALSE(r.abelian.is_trivial());
    CHECK(r.abelian.is_infinite_cyclic());
    if (r.matches_fig8) matches.push_back(r.kept_index);
  }
  CHECK(matches == std::vector<int>{14});
}

TEST_CASE("scan is deterministic and matches the serial reference") {
  const auto serial = bianchi::scan_all_serial(kernel());
  const auto& parallel = scan();
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].presentation == parallel[i].presentation);
    CHECK(serial[i].fingerprint == parallel[i].fingerprint);
    CHECK(serial[i].matches_fig8 == parallel[i].matches_fig8);
    CHECK(serial[i].tietze_moves == parallel[i].tietze_moves);
  }
}

TEST_CASE("a starved simplification is flagged incomplete") {
  bianchi::FillOptions options;
  options.tietze.budget = 10;
  const auto r = bianchi::fill(kernel(), 14, options);
  CHECK(r.status == bianchi::FillStatus::incomplete);
  CHECK_FALSE(r.note.empty());
  CHECK_FALSE(r.matches_fig8);
}
