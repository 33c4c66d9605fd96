#pragma once

// Test-side oracles. Nothing here calls into the library's algorithms, so the
// values they produce are independent checks rather than restatements.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Word = std::vector<int>;  // letters +-(g+1)

inline Perm compose(const Perm& p, const Perm& q) {
  // Apply p first.
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[x] = q[static_cast<std::size_t>(p[x])];
  return out;
}

inline Perm invert(const Perm& p) {
  Perm out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[static_cast<std::size_t>(p[x])] = static_cast<int>(x);
  return out;
}

inline Perm identity(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm evaluate(const Word& w, const std::vector<Perm>& images, int n) {
  Perm acc = identity(n);
  for (int x : w) {
    const Perm& g = images[static_cast<std::size_t>(std::abs(x) - 1)];
    acc = compose(acc, x > 0 ? g : invert(g));
  }
  return acc;
}

/// Order of the permutation group generated by gens, by exhaustive closure.
inline std::size_t closure_order(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen{identity(n)};
  std::vector<Perm> todo{identity(n)};
  while (!todo.empty()) {
    const Perm p = todo.back();
    todo.pop_back();
    for (const Perm& g : gens) {
      Perm q = compose(p, g);
      if (seen.insert(q).second) todo.push_back(std::move(q));
    }
  }
  return seen.size();
}

/// Every permutation of {0..n-1}, or the even ones.
inline std::vector<Perm> all_perms(int n, bool even_only) {
  std::vector<Perm> out;
  Perm p = identity(n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
    if (!even_only || inversions % 2 == 0) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Homomorphisms from <gens | relators> into the given permutation group,
/// counted over every tuple of elements.
inline std::uint64_t count_homs(const std::vector<Word>& relators, int gens, const std::vector<Perm>& group, int n) {
  std::uint64_t total = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(gens), 0);
  while (true) {
    std::vector<Perm> images;
    for (std::size_t k : idx) images.push_back(group[k]);
    bool ok = true;
    for (const Word& r : relators) {
      if (evaluate(r, images, n) != identity(n)) {
        ok = false;
        break;
      }
    }
    total += ok ? 1 : 0;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == group.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return total;
}

// PSL_2(F_p) as matrices (a, b, c, d) modulo sign.
using Mat2 = std::array<int, 4>;

inline Mat2 normalize(Mat2 m, int p) {
  for (int& x : m) x = ((x % p) + p) % p;
  Mat2 neg;
  for (std::size_t k = 0; k < 4; ++k) neg[k] = (p - m[k]) % p;
  return std::min(m, neg);
}

inline Mat2 mat_mul(const Mat2& x, const Mat2& y, int p) {
  return normalize({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                    x[2] * y[1] + x[3] * y[3]},
                   p);
}

inline Mat2 mat_inv(const Mat2& x, int p) { return normalize({x[3], -x[1], -x[2], x[0]}, p); }

inline std::vector<Mat2> psl2_elements(int p) {
  std::set<Mat2> seen;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) seen.insert(normalize({a, b, c, d}, p));
  return {seen.begin(), seen.end()};
}

inline std::uint64_t count_homs_psl2(const std::vector<Word>& relators, int gens, int p) {
  const std::vector<Mat2> g = psl2_elements(p);
  const Mat2 one = normalize({1, 0, 0, 1}, p);
  std::uint64_t total = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(gens), 0);
  while (true) {
    bool ok = true;
    for (const Word& r : relators) {
      Mat2 acc = one;
      for (int x : r) {
        const Mat2& m = g[idx[static_cast<std::size_t>(std::abs(x) - 1)]];
        acc = mat_mul(acc, x > 0 ? m : mat_inv(m, p), p);
      }
      if (acc != one) {
        ok = false;
        break;
      }
    }
    total += ok ? 1 : 0;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == g.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return total;
}

/// Gaussian integer (x, y) = x + y i with 64-bit parts.
struct Gauss {
  long long x = 0, y = 0;
  friend bool operator==(const Gauss&, const Gauss&) = default;
};

inline Gauss gmul(Gauss p, Gauss q) { return {p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x}; }
inline long long gnorm(Gauss p) { return p.x * p.x + p.y * p.y; }

/// alpha | z iff z * conj(alpha) has both parts divisible by norm(alpha).
inline bool gdivides(Gauss alpha, Gauss z) {
  const Gauss w = gmul(z, {alpha.x, -alpha.y});
  const long long n = gnorm(alpha);
  return w.x % n == 0 && w.y % n == 0;
}

inline Word random_word(std::mt19937_64& rng, int gens, int length) {
  std::uniform_int_distribution<int> pick(1, gens);
  std::bernoulli_distribution sign(0.5);
  Word w;
  while (static_cast<int>(w.size()) < length) {
    const int x = sign(rng) ? pick(rng) : -pick(rng);
    if (!w.empty() && w.back() == -x) continue;
    w.push_back(x);
  }
  return w;
}

/// Orbit count of the group generated by gens on {0..n-1}, by union-find.
inline int orbit_count(const std::vector<Perm>& gens, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const Perm& g : gens)
    for (int x = 0; x < n; ++x) parent[static_cast<std::size_t>(find(x))] = find(g[static_cast<std::size_t>(x)]);
  int roots = 0;
  for (int x = 0; x < n; ++x) roots += find(x) == x;
  return roots;
}

/// A small group given both as a presentation and as a faithful permutation
/// representation.
struct KnownGroup {
  std::string name;
  int gens;
  std::vector<Word> relators;
  int degree;
  std::vector<Perm> perms;
  std::size_t order;
};

inline Perm cycles(int n, const std::vector<std::vector<int>>& cs) {
  Perm p = identity(n);
  for (const auto& c : cs)
    for (std::size_t k = 0; k < c.size(); ++k) p[static_cast<std::size_t>(c[k])] = c[(k + 1) % c.size()];
  return p;
}

inline Word power(const Word& w, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

/// Ten standard finite groups. Orders are textbook values.
inline std::vector<KnownGroup> known_groups() {
  const Word a{1}, b{2}, ab{1, 2}, comm{1, 2, -1, -2};
  std::vector<KnownGroup> out;
  out.push_back({"C5", 1, {power(a, 5)}, 5, {cycles(5, {{0, 1, 2, 3, 4}})}, 5});
  out.push_back({"C2xC2", 2, {power(a, 2), power(b, 2), power(ab, 2)}, 4, {cycles(4, {{0, 1}}), cycles(4, {{2, 3}})}, 4});
  out.push_back({"S3", 2, {power(a, 3), power(b, 2), power(ab, 2)}, 3, {cycles(3, {{0, 1, 2}}), cycles(3, {{0, 1}})}, 6});
  out.push_back({"D5", 2, {power(a, 5), power(b, 2), power(ab, 2)}, 5,
                 {cycles(5, {{0, 1, 2, 3, 4}}), cycles(5, {{1, 4}, {2, 3}})}, 10});
  out.push_back({"Q8", 2, {power(a, 4), {1, 1, -2, -2}, {-2, 1, 2, 1}}, 8,
                 {cycles(8, {{0, 1, 2, 3}, {4, 5, 6, 7}}), cycles(8, {{0, 4, 2, 6}, {1, 7, 3, 5}})}, 8});
  out.push_back({"C3xC3", 2, {power(a, 3), power(b, 3), comm}, 6, {cycles(6, {{0, 1, 2}}), cycles(6, {{3, 4, 5}})}, 9});
  out.push_back({"A4", 2, {power(a, 3), power(b, 2), power(ab, 3)}, 4, {cycles(4, {{0, 1, 2}}), cycles(4, {{0, 1}, {2, 3}})}, 12});
  out.push_back({"S4", 2, {power(a, 4), power(b, 2), power(ab, 3)}, 4, {cycles(4, {{0, 1, 2, 3}}), cycles(4, {{2, 3}})}, 24});
  out.push_back({"A5", 2, {power(a, 2), power(b, 3), power(ab, 5)}, 5,
                 {cycles(5, {{0, 1}, {2, 3}}), cycles(5, {{0, 2, 4}})}, 60});
  out.push_back({"PSL2(7)", 2, {power(a, 2), power(b, 3), power(ab, 7), power(comm, 4)}, 7,
                 {cycles(7, {{0, 1}, {2, 3}}), cycles(7, {{1, 4, 2}, {3, 5, 6}})}, 168});
  return out;
}

}  // namespace oracle
