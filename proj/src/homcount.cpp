#include "bianchi/homcount.hpp"

#include <cmath>
#include <regex>

namespace bianchi::fp {

namespace {

void check_guard(const Presentation& p, const FiniteGroup& target, double guard) {
  const double space = std::pow(static_cast<double>(target.order()), static_cast<double>(p.generator_count()));
  if (space > guard) {
    throw HomGuardExceeded("hom_count: " + std::to_string(target.order()) + "^" + std::to_string(p.generator_count()) +
                           " image tuples exceed the search guard");
  }
}

class Backtracker {
 public:
  Backtracker(const Presentation& p, const FiniteGroup& g) : group_(g), checks_(p.generator_count()) {
    for (const Letters& r : p.relators) {
      if (r.empty()) continue;
      int top = 0;
      for (int x : r) top = std::max(top, generator_of(x));
      checks_[static_cast<std::size_t>(top)].push_back(&r);
    }
  }

  bool fits(int level, const std::vector<int>& images) const {
    for (const Letters* r : checks_[static_cast<std::size_t>(level)]) {
      if (group_.eval(*r, images) != group_.identity()) return false;
    }
    return true;
  }

  std::uint64_t count(int level, std::vector<int>& images) const {
    if (level == static_cast<int>(checks_.size())) return 1;
    std::uint64_t total = 0;
    for (int x = 0; x < group_.order(); ++x) {
      images[static_cast<std::size_t>(level)] = x;
      if (fits(level, images)) total += count(level + 1, images);
    }
    return total;
  }

 private:
  const FiniteGroup& group_;
  std::vector<std::vector<const Letters*>> checks_;
};

}  // namespace

std::uint64_t hom_count(const Presentation& p, const FiniteGroup& target, double guard) {
  validate(p);
  check_guard(p, target, guard);
  const Backtracker search(p, target);
  const int gens = static_cast<int>(p.generator_count());
  if (gens == 0) {
    for (const Letters& r : p.relators) {
      if (!r.empty()) return 0;
    }
    return 1;
  }
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (int x = 0; x < target.order(); ++x) {
    std::vector<int> images(static_cast<std::size_t>(gens), 0);
    images[0] = x;
    if (search.fits(0, images)) total += search.count(1, images);
  }
  return total;
}

std::uint64_t hom_count_serial(const Presentation& p, const FiniteGroup& target, double guard) {
  validate(p);
  check_guard(p, target, guard);
  const std::size_t gens = p.generator_count();
  std::vector<int> images(gens, 0);
  std::uint64_t total = 0;
  while (true) {
    bool ok = true;
    for (const Letters& r : p.relators) {
      if (target.eval(r, images) != target.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++total;
    std::size_t k = 0;
    while (k < gens && ++images[k] == target.order()) images[k++] = 0;
    if (k == gens) break;
  }
  return total;
}

std::vector<FiniteGroup> standard_panel() {
  return {FiniteGroup::symmetric(3), FiniteGroup::symmetric(4), FiniteGroup::symmetric(5), FiniteGroup::alternating(5),
          FiniteGroup::psl2(7)};
}

FiniteGroup panel_group(const std::string& name) {
  static const std::regex pattern(R"(([SAC])(\d+)|PSL2\((\d+)\)|1)");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw std::invalid_argument("unknown target group '" + name + "'");
  if (name == "1") return FiniteGroup::trivial();
  if (m[3].matched) {
    const int q = std::stoi(m[3].str());
    bool prime = q >= 2 && q <= 31;
    for (int d = 2; prime && d * d <= q; ++d) prime = q % d != 0;
    if (!prime) throw std::invalid_argument("PSL2(p) needs a prime p <= 31, got " + m[3].str());
    return FiniteGroup::psl2(q);
  }
  const int n = std::stoi(m[2].str());
  if (n < 1 || n > 7) throw std::invalid_argument("target degree must be in 1..7, got " + m[2].str());
  switch (m[1].str()[0]) {
    case 'S':
      return FiniteGroup::symmetric(n);
    case 'A':
      return FiniteGroup::alternating(n);
    default:
      return FiniteGroup::cyclic(n);
  }
}

Fingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroup>& panel, double guard) {
  Fingerprint out;
  out.abelian = abelianization(p);
  for (const FiniteGroup& g : panel) out.counts.emplace_back(g.name(), hom_count(p, g, guard));
  return out;
}

}  // namespace bianchi::fp
