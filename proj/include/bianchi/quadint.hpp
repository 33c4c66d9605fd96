#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bianchi {

using Integer = mpz_class;

/// Element x + y*omega of the ring of integers O_d of Q(sqrt(-d)).
///
/// omega = sqrt(-d) when d != 3 (mod 4) and omega = (1 + sqrt(-d)) / 2 when
/// d == 3 (mod 4). Values are immutable once built; every operation returns
/// a fresh value. Mixing two different rings throws std::invalid_argument.
class QuadInt {
 public:
  QuadInt() = default;
  QuadInt(Integer x, Integer y = 0, long d = 1);

  static QuadInt gaussian(long x, long y) { return QuadInt(Integer(x), Integer(y), 1); }

  long d() const { return d_; }
  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_one() const { return x_ == 1 && y_ == 0; }
  bool is_real() const { return y_ == 0; }

  Integer norm() const;
  QuadInt conj() const;

  QuadInt operator-() const { return QuadInt(-x_, -y_, d_, Unchecked{}); }
  friend QuadInt operator+(const QuadInt& p, const QuadInt& q);
  friend QuadInt operator-(const QuadInt& p, const QuadInt& q);
  friend QuadInt operator*(const QuadInt& p, const QuadInt& q);
  friend bool operator==(const QuadInt& p, const QuadInt& q) {
    return p.d_ == q.d_ && p.x_ == q.x_ && p.y_ == q.y_;
  }

  /// Gaussian integers print as `3+2i`, `-5+i`, `-i`, `0`; other rings use `w`
  /// for omega.
  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadInt(Integer x, Integer y, long d, Unchecked) : x_(std::move(x)), y_(std::move(y)), d_(d) {}

  Integer x_ = 0;
  Integer y_ = 0;
  long d_ = 1;
};

QuadInt mul(const QuadInt& p, const QuadInt& q);
Integer norm(const QuadInt& q);

/// Returns r with q*r == p, or nullopt when q does not divide p in O_d.
/// Throws std::domain_error on division by zero.
std::optional<QuadInt> divide_exact(const QuadInt& p, const QuadInt& q);

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i`, `-i` with optional leading sign.
QuadInt parse_gaussian(std::string_view text);

bool is_square_free(long d);

/// Canonical residue of Z[i] modulo a principal ideal (alpha).
///
/// The representative (x, y) stands for x + y*i with 0 <= y < hnf_c and
/// 0 <= x < hnf_a, where {(hnf_a, 0), (hnf_b, hnf_c)} is the Hermite normal
/// form basis of the lattice alpha*Z[i]. Residues are only meaningful together
/// with the ResidueRing that produced them.
struct Residue {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Residue&, const Residue&) = default;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Z[i]/(alpha). Residue arithmetic runs on 64-bit words, so the ring order
/// norm(alpha) is capped at 2^31.
class ResidueRing {
 public:
  explicit ResidueRing(const QuadInt& modulus);

  const QuadInt& modulus() const { return modulus_; }
  std::int64_t order() const { return order_; }
  std::int64_t hnf_a() const { return a_; }
  std::int64_t hnf_b() const { return b_; }
  std::int64_t hnf_c() const { return c_; }

  Residue reduce(const QuadInt& q) const;
  Residue reduce(std::int64_t x, std::int64_t y) const;
  QuadInt lift(const Residue& r) const { return QuadInt::gaussian(r.x, r.y); }

  Residue zero() const { return {}; }
  Residue one() const { return reduce(1, 0); }
  Residue add(const Residue& p, const Residue& q) const { return reduce(p.x + q.x, p.y + q.y); }
  Residue sub(const Residue& p, const Residue& q) const { return reduce(p.x - q.x, p.y - q.y); }
  Residue neg(const Residue& p) const { return reduce(-p.x, -p.y); }
  Residue mul(const Residue& p, const Residue& q) const;

  /// Dense index in [0, order()), consistent with from_index.
  std::int64_t index(const Residue& r) const { return r.y * a_ + r.x; }
  Residue from_index(std::int64_t k) const { return {k % a_, k / a_}; }

  bool is_unit(const Residue& r) const;

 private:
  QuadInt modulus_;
  std::int64_t order_ = 1;
  std::int64_t a_ = 1;
  std::int64_t b_ = 0;
  std::int64_t c_ = 1;
};

Residue reduce(const QuadInt& q, const QuadInt& modulus);

/// Ring isomorphism Z[i]/(alpha) -> F_p, available when norm(alpha) is prime.
struct FieldMap {
  std::int64_t p = 0;
  std::int64_t image_of_i = 0;
  /// table[ring.index(r)] is the F_p value of residue r.
  std::vector<std::int64_t> table;
};

std::optional<FieldMap> field_map(const QuadInt& modulus);

}  // namespace bianchi
