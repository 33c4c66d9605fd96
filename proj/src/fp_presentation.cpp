#include "bianchi/fp_presentation.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace bianchi::fp {

void free_reduce(Letters& w) {
  std::size_t top = 0;
  for (int x : w) {
    if (top > 0 && w[top - 1] == -x) {
      --top;
    } else {
      w[top++] = x;
    }
  }
  w.resize(top);
}

void cyclic_reduce(Letters& w) {
  free_reduce(w);
  std::size_t b = 0, e = w.size();
  while (e - b >= 2 && w[b] == -w[e - 1]) {
    ++b;
    --e;
  }
  if (b > 0) w = Letters(w.begin() + static_cast<std::ptrdiff_t>(b), w.begin() + static_cast<std::ptrdiff_t>(e));
}

Letters inverse(const Letters& w) {
  Letters out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Letters concat(const Letters& u, const Letters& v) {
  Letters out = u;
  out.insert(out.end(), v.begin(), v.end());
  free_reduce(out);
  return out;
}

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const Letters& r : relators) n += r.size();
  return n;
}

void validate(const Presentation& p) {
  const int n = static_cast<int>(p.generators.size());
  for (const Letters& r : p.relators) {
    for (int x : r) {
      if (x == 0 || x > n || x < -n) throw std::invalid_argument("relator letter out of range");
    }
  }
}

namespace {

template <class Lookup>
Letters letters_with(const Word& w, Lookup&& lookup) {
  Letters out;
  for (const Syllable& s : w.syllables()) {
    const int letter = lookup(s.gen) + 1;
    const long reps = s.exp < 0 ? -s.exp : s.exp;
    out.insert(out.end(), static_cast<std::size_t>(reps), s.exp < 0 ? -letter : letter);
  }
  return out;
}

}  // namespace

Letters to_letters(const Word& w, const std::vector<std::string>& generators) {
  return letters_with(w, [&](const std::string& g) {
    const auto it = std::find(generators.begin(), generators.end(), g);
    if (it == generators.end()) throw std::invalid_argument("unknown generator '" + g + "'");
    return static_cast<int>(it - generators.begin());
  });
}

Word to_word(const Letters& w, const std::vector<std::string>& generators) {
  std::vector<Syllable> syl;
  for (int x : w) syl.push_back({generators.at(static_cast<std::size_t>(generator_of(x))), x > 0 ? 1L : -1L});
  return Word(std::move(syl));
}

Presentation from_words(const bianchi::Presentation& p) {
  p.validate();
  Presentation out;
  out.generators = p.generators;
  std::unordered_map<std::string, int> index;
  for (std::size_t k = 0; k < p.generators.size(); ++k) index.emplace(p.generators[k], static_cast<int>(k));
  for (const Word& r : p.relators) {
    out.relators.push_back(letters_with(r, [&](const std::string& g) { return index.at(g); }));
  }
  return out;
}

bianchi::Presentation to_words(const Presentation& p) {
  bianchi::Presentation out;
  out.generators = p.generators;
  for (const Letters& r : p.relators) out.relators.push_back(to_word(r, p.generators));
  return out;
}

}  // namespace bianchi::fp
