#include <doctest.h>

#include <numeric>
#include <random>

#include "bianchi/abelian.hpp"
#include "bianchi/congruence.hpp"
#include "bianchi/coset.hpp"
#include "bianchi/homcount.hpp"
#include "bianchi/schreier.hpp"
#include "bianchi/tietze.hpp"
#include "bianchi/words.hpp"
#include "generators.hpp"
#include "support.hpp"

namespace fp = bianchi::fp;
using fp::Letters;

namespace {

using gen::from_known;
using gen::make;
using gen::mutate;
using gen::random_presentation;

fp::Presentation load(const char* file) {
  return fp::from_words(bianchi::read_presentation_file(bianchi::data_dir() / file));
}

std::vector<oracle::Perm> cyclic_group(int n) {
  std::vector<oracle::Perm> out;
  oracle::Perm c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[static_cast<std::size_t>(k)] = (k + 1) % n;
  oracle::Perm x = oracle::identity(n);
  for (int k = 0; k < n; ++k) {
    out.push_back(x);
    x = oracle::compose(x, c);
  }
  return out;
}

std::uint64_t oracle_homs(const fp::Presentation& p, const std::vector<oracle::Perm>& group, int degree) {
  return oracle::count_homs(p.relators, static_cast<int>(p.generator_count()), group, degree);
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

// Coset representatives along the rewriting map's spanning tree.
std::vector<Letters> tree_representatives(const fp::RewritingMap& map) {
  const fp::CosetTable& t = map.table();
  std::vector<std::optional<Letters>> rep(static_cast<std::size_t>(t.size()));
  rep[0] = Letters{};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int c = 0; c < t.size(); ++c)
      for (int g = 0; g < t.generator_count(); ++g) {
        if (map.schreier_generator(c, g) != -1) continue;
        const int d = t.act(c, g + 1);
        if (rep[c] && !rep[d]) {
          rep[d] = fp::concat(*rep[c], {g + 1});
          grew = true;
        } else if (rep[d] && !rep[c]) {
          rep[c] = fp::concat(*rep[d], {-(g + 1)});
          grew = true;
        }
      }
  }
  std::vector<Letters> out;
  for (const auto& r : rep) out.push_back(r.value());
  return out;
}

}  // namespace

TEST_CASE("todd_coxeter examples") {
  CHECK(fp::todd_coxeter(make(1, {{1, 1, 1}}), {}).size() == 3);
  CHECK_THROWS_AS(fp::todd_coxeter(make(2, {}), {{1}}, 10), fp::CosetLimitExceeded);
  const auto swan = fp::from_words(bianchi::swan_presentation());
  auto extended = swan;
  const auto& gens = swan.generators;
  extended.relators.push_back(fp::to_letters(bianchi::parse_word("t^13"), gens));
  extended.relators.push_back(fp::to_letters(bianchi::parse_word("t^-5*u"), gens));
  const auto table = fp::todd_coxeter(extended, {});
  CHECK(table.size() == 1092);
  CHECK_FALSE(fp::check_table(table, extended).has_value());

  const auto image = bianchi::enumerate_image(bianchi::QuadInt::gaussian(3, 2));
  const auto target = fp::FiniteGroup::from_matrix_group("PSL2(13)", *image);
  const auto dict = bianchi::swan_dictionary();
  std::vector<int> images;
  for (const auto& g : gens) {
    const int k = image->find(bianchi::reduce_mat(image->ring(), dict.at(g)));
    images.push_back(fp::FiniteGroup::matrix_element_index(*image, k));
  }
  const auto hom_table = fp::coset_table_from_hom(swan, target, images);
  CHECK(hom_table.size() == 1092);
  CHECK_FALSE(fp::check_table(hom_table, extended).has_value());
  CHECK(hom_table == table);
}

TEST_CASE("coset_table_from_hom examples") {
  const auto swan = fp::from_words(bianchi::swan_presentation());
  const auto dict = bianchi::swan_dictionary();
  for (auto [alpha, order] : {std::pair{bianchi::QuadInt::gaussian(1, 1), 6}, std::pair{bianchi::QuadInt::gaussian(3, 2), 1092}}) {
    const auto image = bianchi::enumerate_image(alpha);
    const auto target = fp::FiniteGroup::from_matrix_group("image", *image);
    std::vector<int> images;
    for (const auto& g : swan.generators) {
      images.push_back(fp::FiniteGroup::matrix_element_index(*image, image->find(bianchi::reduce_mat(image->ring(), dict.at(g)))));
    }
    CHECK(fp::coset_table_from_hom(swan, target, images).size() == order);
  }
  CHECK(fp::coset_table_from_hom(swan, fp::FiniteGroup::trivial(), {0, 0, 0, 0}).size() == 1);
  // a -> 3-cycle violates a^2.
  const auto s3 = fp::FiniteGroup::symmetric(3);
  const auto p = make(1, {{1, 1}});
  int three_cycle = -1;
  for (int x = 0; x < s3.order(); ++x)
    if (x != 0 && s3.mul(x, s3.mul(x, x)) == 0) three_cycle = x;
  CHECK_THROWS_AS(fp::coset_table_from_hom(p, s3, {three_cycle}), fp::RelatorViolation);
}

TEST_CASE("todd_coxeter and coset_table_from_hom on ten known groups") {
  for (const auto& k : oracle::known_groups()) {
    CAPTURE(k.name);
    const auto p = from_known(k);
    const auto table = fp::todd_coxeter(p, {});
    CHECK(table.size() == static_cast<int>(k.order));
    CHECK(oracle::closure_order(k.perms, k.degree) == k.order);
    CHECK_FALSE(fp::check_table(table, p).has_value());
    for (const auto& r : k.relators) CHECK(oracle::evaluate(r, k.perms, k.degree) == oracle::identity(k.degree));

    // Generators of from_permutations sit at indices 1..gens.
    const auto group = fp::FiniteGroup::from_permutations(k.name, k.perms);
    std::vector<int> images;
    for (int g = 0; g < k.gens; ++g) images.push_back(g + 1);
    const auto hom = fp::coset_table_from_hom(p, group, images);
    CHECK(hom.size() == table.size());
    CHECK_FALSE(fp::check_table(hom, p).has_value());

    // Index of the subgroup generated by the first generator.
    const std::size_t cyc = oracle::closure_order({k.perms[0]}, k.degree);
    const auto sub = fp::todd_coxeter(p, {{1}});
    CHECK(static_cast<std::size_t>(sub.size()) * cyc == k.order);
    CHECK_FALSE(fp::check_table(sub, p, {{1}}).has_value());
  }
}

TEST_CASE("reidemeister_schreier examples") {
  // 2Z in Z.
  const auto free1 = make(1, {});
  const fp::CosetTable swap(2, 1, {1, 1, 0, 0});
  CHECK_FALSE(fp::check_table(swap, free1).has_value());
  const auto sub = fp::reidemeister_schreier(free1, swap);
  CHECK(sub.presentation.generator_count() == 1);
  CHECK(sub.presentation.relators.empty());
  CHECK(sub.rewriting.rewrite({1, 1}).size() == 1);
  CHECK_THROWS_AS(sub.rewriting.rewrite({1}), fp::NotInSubgroup);

  // Index 1 gives back the presentation.
  const auto fig8 = load("fig8.pres");
  const auto whole = fp::reidemeister_schreier(fig8, fp::todd_coxeter(make(2, {{1}, {2}}), {}));
  CHECK(whole.presentation.generator_count() == 2);
  CHECK(whole.presentation.relators.size() == 1);
  CHECK(fp::abelianization(whole.presentation) == fp::abelianization(fig8));
  CHECK(fp::canonical_relator(whole.presentation.relators[0]) == fp::canonical_relator(fig8.relators[0]));
}

TEST_CASE("reidemeister_schreier counts and hom transport") {
  for (const auto& k : oracle::known_groups()) {
    CAPTURE(k.name);
    const auto p = from_known(k);
    const auto table = fp::todd_coxeter(p, {{1}});
    const auto sub = fp::reidemeister_schreier(p, table);
    const auto n = static_cast<std::size_t>(table.size());
    CHECK(sub.presentation.generator_count() == n * p.generator_count() - (n - 1));
    CHECK(sub.presentation.relators.size() == n * p.relators.size());

    // The faithful representation restricted to the subgroup.
    const auto reps = tree_representatives(sub.rewriting);
    std::vector<oracle::Perm> images(sub.presentation.generator_count());
    for (int c = 0; c < table.size(); ++c)
      for (int g = 0; g < table.generator_count(); ++g) {
        const int s = sub.rewriting.schreier_generator(c, g);
        if (s < 0) continue;
        const Letters w = fp::concat(fp::concat(reps[c], {g + 1}), fp::inverse(reps[table.act(c, g + 1)]));
        images[static_cast<std::size_t>(s)] = oracle::evaluate(w, k.perms, k.degree);
      }
    for (const Letters& r : sub.presentation.relators) CHECK(oracle::evaluate(r, images, k.degree) == oracle::identity(k.degree));
    // The rewrite of a subgroup element evaluates to the same permutation.
    const Letters a_cubed{1, 1, 1};
    CHECK(oracle::evaluate(sub.rewriting.rewrite(a_cubed), images, k.degree) == oracle::evaluate(a_cubed, k.perms, k.degree));

    // The subgroup presentation defines a group of the right order.
    if (n <= 12) CHECK(static_cast<std::size_t>(fp::todd_coxeter(sub.presentation, {}).size()) * n == k.order);
  }
}

TEST_CASE("tietze examples") {
  const auto r = fp::tietze_simplify(make(3, {{3, -2, -1}}));
  CHECK(r.presentation.generator_count() == 2);
  CHECK(r.presentation.relators.empty());
  CHECK_FALSE(r.budget_exhausted);

  const auto fig8 = load("fig8.pres");
  auto padded = fig8;
  padded.generators.push_back("c");
  padded.relators.push_back({-3, 1, 2, 2});
  const auto s = fp::tietze_simplify(padded);
  CHECK(s.presentation.generator_count() == 2);
  const auto panel = fp::standard_panel();
  CHECK(fp::fingerprint(s.presentation, panel) == fp::fingerprint(fig8, panel));

  const auto again = fp::tietze_simplify(s.presentation);
  CHECK(again.presentation == s.presentation);
  CHECK(fp::tietze_simplify(padded).presentation == s.presentation);
}

TEST_CASE("tietze preserves the group on 100 random mutations") {
  std::mt19937_64 rng(41);
  const auto s3 = oracle::all_perms(3, false), a4 = oracle::all_perms(4, true);
  const std::vector<fp::FiniteGroup> panel{fp::FiniteGroup::symmetric(3), fp::FiniteGroup::alternating(4)};
  for (int trial = 0; trial < 100; ++trial) {
    const auto base = random_presentation(rng);
    const auto mutated = mutate(base, rng, 3 + trial % 5);
    const auto result = fp::tietze_simplify(mutated);
    const auto& out = result.presentation;
    CAPTURE(bianchi::print_presentation(fp::to_words(mutated)));
    const auto ab = fp::abelianization(base);
    CHECK(fp::abelianization(mutated) == ab);
    CHECK(fp::abelianization(out) == ab);
    CHECK(out.generator_count() <= mutated.generator_count());
    CHECK(fp::tietze_simplify(out).presentation == out);
    CHECK(fp::tietze_simplify(mutated).presentation == out);
    // Every output generator is named after one it kept.
    for (std::size_t g = 0; g < out.generator_count(); ++g) CHECK(out.generators[g] == mutated.generators[result.kept[g]]);
    if (out.generator_count() <= 3) {
      CHECK(oracle_homs(out, s3, 3) == oracle_homs(base, s3, 3));
      CHECK(oracle_homs(out, a4, 4) == oracle_homs(base, a4, 4));
      CHECK(fp::fingerprint(out, panel) == fp::fingerprint(base, panel));
    }
  }
}

TEST_CASE("abelianization examples") {
  const auto fig8 = load("fig8.pres");
  CHECK(fp::abelianization(fig8).is_infinite_cyclic());
  CHECK(fp::abelianization(fig8).to_string() == "Z");
  const auto c3 = fp::abelianization(make(1, {{1, 1, 1}}));
  CHECK(c3.free_rank == 0);
  REQUIRE(c3.torsion.size() == 1);
  CHECK(c3.torsion[0].get_si() == 3);
  CHECK(fp::abelianization(make(2, {})).free_rank == 2);
  CHECK(fp::abelianization(make(2, {{1, 1}, {2, 2, 2, 2, 2, 2}})).to_string() == "Z/2 + Z/6");
  CHECK(fp::abelianization(make(1, {{1}})).is_trivial());
  CHECK(fp::abelianization(make(1, {{1}})).to_string() == "0");

  const auto d = fp::smith_diagonal({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  REQUIRE(d.size() == 3);
  CHECK(d[0].get_si() == 2);
  CHECK(d[1].get_si() == 6);
  CHECK(d[2].get_si() == 12);
}

TEST_CASE("abelianization matches cyclic hom counts") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = random_presentation(rng);
    const auto ab = fp::abelianization(p);
    for (std::size_t k = 1; k < ab.torsion.size(); ++k) CHECK(mpz_divisible_p(ab.torsion[k].get_mpz_t(), ab.torsion[k - 1].get_mpz_t()) != 0);
    for (int n = 2; n <= 6; ++n) {
      std::uint64_t expect = ipow(static_cast<std::uint64_t>(n), ab.free_rank);
      for (const auto& t : ab.torsion) expect *= std::gcd(static_cast<std::uint64_t>(t.get_ui()), static_cast<std::uint64_t>(n));
      CHECK(oracle_homs(p, cyclic_group(n), n) == expect);
      CHECK(fp::hom_count(p, fp::FiniteGroup::cyclic(n)) == expect);
    }
  }
}

TEST_CASE("hom_count examples") {
  CHECK(fp::hom_count(make(1, {{1, 1}}), fp::FiniteGroup::symmetric(3)) == 4);
  CHECK(oracle_homs(make(1, {{1, 1}}), oracle::all_perms(3, false), 3) == 4);
  CHECK(fp::hom_count(load("fig8.pres"), fp::FiniteGroup::trivial()) == 1);
  CHECK(fp::hom_count(fp::from_words(bianchi::swan_presentation()), fp::FiniteGroup::trivial()) == 1);
  CHECK_THROWS_AS(fp::hom_count(make(12, {}), fp::FiniteGroup::psl2(7)), fp::HomGuardExceeded);
  CHECK_THROWS_AS(fp::panel_group("Q8"), std::invalid_argument);
  CHECK(fp::panel_group("PSL2(7)").order() == 168);
  CHECK(fp::panel_group("A5").order() == 60);
  CHECK(fp::panel_group("C4").order() == 4);
}

TEST_CASE("figure-eight fingerprint against brute force") {
  const auto fig8 = load("fig8.pres");
  const auto trefoil = load("trefoil.pres");
  const std::uint64_t s3 = oracle_homs(fig8, oracle::all_perms(3, false), 3);
  const std::uint64_t s4 = oracle_homs(fig8, oracle::all_perms(4, false), 4);
  const std::uint64_t s5 = oracle_homs(fig8, oracle::all_perms(5, false), 5);
  const std::uint64_t a5 = oracle_homs(fig8, oracle::all_perms(5, true), 5);
  const std::uint64_t l27 = oracle::count_homs_psl2(fig8.relators, 2, 7);
  // Frozen oracle values.
  CHECK(s3 == 6);
  CHECK(s4 == 48);
  CHECK(s5 == 600);
  CHECK(a5 == 300);
  CHECK(l27 == 1848);

  const auto f = fp::fingerprint(fig8, fp::standard_panel());
  const std::vector<std::pair<std::string, std::uint64_t>> want{{"S3", s3}, {"S4", s4}, {"S5", s5}, {"A5", a5}, {"PSL2(7)", l27}};
  CHECK(f.counts == want);
  CHECK(f.abelian.is_infinite_cyclic());

  const auto g = fp::fingerprint(trefoil, fp::standard_panel());
  CHECK(g.counts[0].second == oracle_homs(trefoil, oracle::all_perms(3, false), 3));
  CHECK(g.counts[4].second == oracle::count_homs_psl2(trefoil.relators, 2, 7));
  CHECK(g.abelian == f.abelian);
  CHECK(g != f);
}

TEST_CASE("parallel and serial hom counts agree") {
  std::mt19937_64 rng(43);
  const std::vector<fp::FiniteGroup> targets{fp::FiniteGroup::symmetric(3), fp::FiniteGroup::symmetric(4),
                                             fp::FiniteGroup::alternating(5)};
  for (int trial = 0; trial < 30; ++trial) {
    auto p = random_presentation(rng);
    if (p.generator_count() > 2) p = make(2, {oracle::random_word(rng, 2, 6)});
    for (const auto& t : targets) CHECK(fp::hom_count(p, t) == fp::hom_count_serial(p, t));
  }
}
