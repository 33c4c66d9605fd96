#include "bianchi/tietze.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace bianchi::fp {

namespace {

bool shortlex_less(const Letters& a, const Letters& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Letters substitute(const Letters& r, int generator, const Letters& value, const Letters& value_inv) {
  Letters out;
  out.reserve(r.size() + value.size());
  for (int x : r) {
    if (generator_of(x) != generator) {
      out.push_back(x);
    } else {
      const Letters& v = x > 0 ? value : value_inv;
      out.insert(out.end(), v.begin(), v.end());
    }
  }
  cyclic_reduce(out);
  return out;
}

// Letters of r starting at `start`, cyclically, `len` of them.
Letters cyclic_segment(const Letters& r, std::size_t start, std::size_t len) {
  Letters out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = r[(start + k) % r.size()];
  return out;
}

class Simplifier {
 public:
  Simplifier(const Presentation& p, const TietzeOptions& options)
      : opt_(options),
        gens_(static_cast<int>(p.generator_count())),
        alive_gen_(p.generator_count(), true),
        occ_(p.generator_count()),
        weight_(p.generator_count(), 0),
        ordered_(Order{&rels_}),
        active_(Order{&rels_}) {
    for (const Letters& r : p.relators) add(r);
  }

  TietzeResult run(const Presentation& input) {
    TietzeResult result;
    dedupe();
    while (true) {
      while (!exhausted() && eliminate_step()) {
      }
      if (exhausted()) break;
      dedupe();
      if (!opt_.substitutions || ordered_.size() > opt_.substitution_relator_limit) break;
      if (!shorten_pass()) break;
    }
    dedupe();
    result.budget_exhausted = exhausted();
    result.moves = moves_;
    result.eliminations = std::move(log_);

    std::vector<int> renum(static_cast<std::size_t>(gens_), -1);
    for (int g = 0; g < gens_; ++g) {
      if (!alive_gen_[static_cast<std::size_t>(g)]) continue;
      renum[static_cast<std::size_t>(g)] = static_cast<int>(result.kept.size());
      result.kept.push_back(g);
      result.presentation.generators.push_back(input.generators[static_cast<std::size_t>(g)]);
    }
    for (int id : ordered_) {
      Letters r = rels_[static_cast<std::size_t>(id)];
      for (int& x : r) {
        const int k = renum[static_cast<std::size_t>(generator_of(x))] + 1;
        x = x > 0 ? k : -k;
      }
      result.presentation.relators.push_back(std::move(r));
    }
    std::sort(result.presentation.relators.begin(), result.presentation.relators.end(), shortlex_less);
    return result;
  }

 private:
  struct Order {
    const std::vector<Letters>* rels;
    bool operator()(int a, int b) const {
      const Letters& x = (*rels)[static_cast<std::size_t>(a)];
      const Letters& y = (*rels)[static_cast<std::size_t>(b)];
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      return a < b;
    }
  };

  bool exhausted() const { return moves_ >= opt_.budget; }

  // Generators occurring exactly once in r, ascending.
  std::vector<int> single_occurrences(const Letters& r) const {
    std::map<int, int> count;
    for (int x : r) ++count[generator_of(x)];
    std::vector<int> out;
    for (const auto& [g, c] : count) {
      if (c == 1) out.push_back(g);
    }
    return out;
  }

  void insert(int id) {
    const Letters& r = rels_[static_cast<std::size_t>(id)];
    ordered_.insert(id);
    for (int x : r) {
      const int g = generator_of(x);
      ++occ_[static_cast<std::size_t>(g)][id];
      ++weight_[static_cast<std::size_t>(g)];
    }
    if (!single_occurrences(r).empty()) active_.insert(id);
  }

  void erase(int id) {
    ordered_.erase(id);
    active_.erase(id);
    for (int x : rels_[static_cast<std::size_t>(id)]) {
      const int g = generator_of(x);
      auto& m = occ_[static_cast<std::size_t>(g)];
      if (--m[id] == 0) m.erase(id);
      --weight_[static_cast<std::size_t>(g)];
    }
  }

  void add(Letters r) {
    cyclic_reduce(r);
    if (r.empty()) return;
    rels_.push_back(std::move(r));
    insert(static_cast<int>(rels_.size()) - 1);
  }

  void replace(int id, Letters r) {
    erase(id);
    cyclic_reduce(r);
    rels_[static_cast<std::size_t>(id)] = std::move(r);
    if (!rels_[static_cast<std::size_t>(id)].empty()) insert(id);
  }

  void remove(int id) {
    erase(id);
    rels_[static_cast<std::size_t>(id)].clear();
  }

  std::size_t max_length() const {
    return ordered_.empty() ? 0 : rels_[static_cast<std::size_t>(*ordered_.rbegin())].size();
  }

  bool eliminate_step() {
    const double cap = opt_.growth_cap * static_cast<double>(std::max<std::size_t>(max_length(), 1));
    for (int id : active_) {
      const Letters& r = rels_[static_cast<std::size_t>(id)];
      const long extra = static_cast<long>(r.size()) - 2;
      int best = -1;
      long best_cost = 0;
      for (int g : single_occurrences(r)) {
        bool fits = true;
        if (extra > 0) {
          for (const auto& [other, count] : occ_[static_cast<std::size_t>(g)]) {
            if (other == id) continue;
            const auto grown = static_cast<double>(rels_[static_cast<std::size_t>(other)].size()) +
                               static_cast<double>(count) * static_cast<double>(extra);
            if (grown > cap) {
              fits = false;
              break;
            }
          }
        }
        if (!fits) continue;
        const long cost = (weight_[static_cast<std::size_t>(g)] - 1) * extra;
        if (best < 0 || cost < best_cost) {
          best = g;
          best_cost = cost;
        }
      }
      if (best >= 0) {
        eliminate(best, id);
        return true;
      }
    }
    return false;
  }

  void eliminate(int g, int id) {
    const Letters r = rels_[static_cast<std::size_t>(id)];
    const auto pos = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [&](int x) { return generator_of(x) == g; }) - r.begin());
    // r = ... g^s rest ... cyclically, so g^s = rest^-1.
    Letters rest = cyclic_segment(r, pos + 1, r.size() - 1);
    Letters value = r[pos] > 0 ? inverse(rest) : rest;
    const Letters value_inv = inverse(value);
    remove(id);
    const std::map<int, int> holders = occ_[static_cast<std::size_t>(g)];
    for (const auto& [other, count] : holders) {
      replace(other, substitute(rels_[static_cast<std::size_t>(other)], g, value, value_inv));
    }
    alive_gen_[static_cast<std::size_t>(g)] = false;
    log_.push_back({g, std::move(value)});
    ++moves_;
  }

  void dedupe() {
    std::set<Letters> seen;
    std::vector<int> drop;
    for (int id : ordered_) {
      if (!seen.insert(canonical_relator(rels_[static_cast<std::size_t>(id)])).second) drop.push_back(id);
    }
    for (int id : drop) remove(id);
  }

  // One sweep of length-reducing substitutions. Returns true if any relator
  // changed.
  bool shorten_pass() {
    bool changed = false;
    const std::vector<int> ids(ordered_.begin(), ordered_.end());
    using PositionIndex = std::unordered_map<int, std::vector<int>>;
    auto index_of = [](const Letters& s) {
      PositionIndex pos;
      for (std::size_t k = 0; k < s.size(); ++k) pos[s[k]].push_back(static_cast<int>(k));
      return pos;
    };
    std::unordered_map<int, PositionIndex> indices;

    for (int rid : ids) {
      if (exhausted()) break;
      const Letters r = rels_[static_cast<std::size_t>(rid)];
      if (r.size() < 2) continue;
      const std::size_t len = r.size();
      const std::size_t k = len / 2 + 1;
      // Each cyclic subword u of r or r^-1 of length k equals the inverse of
      // the complementary segment.
      std::vector<std::pair<Letters, Letters>> rules;
      for (const Letters& base : {r, inverse(r)}) {
        for (std::size_t start = 0; start < len; ++start) {
          rules.emplace_back(cyclic_segment(base, start, k), inverse(cyclic_segment(base, start + k, len - k)));
        }
      }
      for (int sid : ids) {
        if (sid == rid || exhausted()) continue;
        bool again = true;
        while (again && !exhausted()) {
          again = false;
          const Letters& s = rels_[static_cast<std::size_t>(sid)];
          if (s.size() < k) break;
          auto it = indices.find(sid);
          if (it == indices.end()) it = indices.emplace(sid, index_of(s)).first;
          for (const auto& [u, replacement] : rules) {
            const auto hit = it->second.find(u[0]);
            if (hit == it->second.end()) continue;
            for (int p : hit->second) {
              bool match = true;
              for (std::size_t q = 1; q < k && match; ++q) match = s[(static_cast<std::size_t>(p) + q) % s.size()] == u[q];
              if (!match) continue;
              Letters next = replacement;
              const Letters tail = cyclic_segment(s, static_cast<std::size_t>(p) + k, s.size() - k);
              next.insert(next.end(), tail.begin(), tail.end());
              replace(sid, std::move(next));
              indices.erase(sid);
              ++moves_;
              changed = true;
              again = true;
              break;
            }
            if (again) break;
          }
        }
      }
    }
    return changed;
  }

  TietzeOptions opt_;
  int gens_;
  std::vector<bool> alive_gen_;
  std::vector<Letters> rels_;
  std::vector<std::map<int, int>> occ_;
  std::vector<long> weight_;
  std::set<int, Order> ordered_;
  std::set<int, Order> active_;
  std::vector<Elimination> log_;
  std::size_t moves_ = 0;
};

}  // namespace

Letters canonical_relator(const Letters& r) {
  Letters best;
  for (const Letters& base : {r, inverse(r)}) {
    for (std::size_t start = 0; start < base.size(); ++start) {
      Letters rot = cyclic_segment(base, start, base.size());
      if (best.empty() || rot < best) best = std::move(rot);
    }
  }
  return best;
}

Letters TietzeResult::map_word(const Letters& w) const {
  Letters cur = w;
  for (const Elimination& e : eliminations) {
    bool present = false;
    for (int x : cur) {
      if (generator_of(x) == e.generator) {
        present = true;
        break;
      }
    }
    if (!present) continue;
    const Letters inv = inverse(e.value);
    Letters next;
    for (int x : cur) {
      if (generator_of(x) != e.generator) {
        next.push_back(x);
      } else {
        const Letters& v = x > 0 ? e.value : inv;
        next.insert(next.end(), v.begin(), v.end());
      }
    }
    free_reduce(next);
    cur = std::move(next);
  }
  std::map<int, int> renum;
  for (std::size_t k = 0; k < kept.size(); ++k) renum[kept[k]] = static_cast<int>(k);
  for (int& x : cur) {
    const int k = renum.at(generator_of(x)) + 1;
    x = x > 0 ? k : -k;
  }
  return cur;
}

TietzeResult tietze_simplify(const Presentation& p, const TietzeOptions& options) {
  validate(p);
  return Simplifier(p, options).run(p);
}

}  // namespace bianchi::fp
