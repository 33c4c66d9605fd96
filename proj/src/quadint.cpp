#include "bianchi/quadint.hpp"

#include <array>
#include <cctype>
#include <limits>

namespace bianchi {

namespace {

bool omega_is_half(long d) { return d % 4 == 3; }

void require_same_ring(const QuadInt& p, const QuadInt& q) {
  if (p.d() != q.d()) {
    throw std::invalid_argument("ring parameter mismatch: d=" + std::to_string(p.d()) +
                                " vs d=" + std::to_string(q.d()));
  }
}

std::int64_t floor_mod(__int128 v, std::int64_t m) {
  __int128 r = v % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

__int128 floor_div(__int128 v, std::int64_t m) {
  __int128 q = v / m;
  if ((v % m != 0) && ((v < 0) != (m < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool is_square_free(long d) {
  if (d < 1) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadInt::QuadInt(Integer x, Integer y, long d) : x_(std::move(x)), y_(std::move(y)), d_(d) {
  if (!is_square_free(d)) {
    throw std::invalid_argument("ring parameter d must be square-free and >= 1, got " +
                                std::to_string(d));
  }
}

Integer QuadInt::norm() const {
  if (omega_is_half(d_)) {
    // (x + y/2)^2 + d y^2 / 4 = x^2 + xy + (1+d)/4 y^2
    return x_ * x_ + x_ * y_ + Integer((1 + d_) / 4) * y_ * y_;
  }
  return x_ * x_ + Integer(d_) * y_ * y_;
}

QuadInt QuadInt::conj() const {
  if (omega_is_half(d_)) return QuadInt(x_ + y_, -y_, d_, Unchecked{});
  return QuadInt(x_, -y_, d_, Unchecked{});
}

QuadInt operator+(const QuadInt& p, const QuadInt& q) {
  require_same_ring(p, q);
  return QuadInt(p.x_ + q.x_, p.y_ + q.y_, p.d_, QuadInt::Unchecked{});
}

QuadInt operator-(const QuadInt& p, const QuadInt& q) {
  require_same_ring(p, q);
  return QuadInt(p.x_ - q.x_, p.y_ - q.y_, p.d_, QuadInt::Unchecked{});
}

QuadInt operator*(const QuadInt& p, const QuadInt& q) {
  require_same_ring(p, q);
  Integer yy = p.y_ * q.y_;
  Integer y = p.x_ * q.y_ + q.x_ * p.y_;
  Integer x = p.x_ * q.x_;
  if (omega_is_half(p.d_)) {
    // omega^2 = omega - (1+d)/4
    x -= Integer((1 + p.d_) / 4) * yy;
    y += yy;
  } else {
    x -= Integer(p.d_) * yy;
  }
  return QuadInt(std::move(x), std::move(y), p.d_, QuadInt::Unchecked{});
}

std::string QuadInt::to_string() const {
  const std::string unit = d_ == 1 ? "i" : "w";
  if (y_ == 0) return x_.get_str();
  std::string out;
  if (x_ != 0) out = x_.get_str();
  if (y_ > 0 && x_ != 0) out += "+";
  if (y_ == 1) {
  } else if (y_ == -1) {
    out += "-";
  } else {
    out += y_.get_str();
  }
  return out + unit;
}

QuadInt mul(const QuadInt& p, const QuadInt& q) { return p * q; }
Integer norm(const QuadInt& q) { return q.norm(); }

std::optional<QuadInt> divide_exact(const QuadInt& p, const QuadInt& q) {
  require_same_ring(p, q);
  if (q.is_zero()) throw std::domain_error("divide_exact: division by zero");
  // p / q = p * conj(q) / norm(q); the quotient lies in O_d iff both
  // coordinates of p * conj(q) are divisible by norm(q).
  const QuadInt num = p * q.conj();
  const Integer n = q.norm();
  if (!mpz_divisible_p(num.x().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.y().get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  Integer x, y;
  mpz_divexact(x.get_mpz_t(), num.x().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(y.get_mpz_t(), num.y().get_mpz_t(), n.get_mpz_t());
  return QuadInt(x, y, p.d());
}

QuadInt parse_gaussian(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty Gaussian integer");

  auto bad = [&] { return std::invalid_argument("malformed Gaussian integer '" + std::string(text) + "'"); };

  // Split into signed terms.
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == '+' || s[k] == '-') {
      terms.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  if (terms.size() > 2) throw bad();

  Integer re = 0, im = 0;
  bool seen_re = false, seen_im = false;
  for (const std::string& term : terms) {
    std::string body = term;
    int sign = 1;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      sign = body[0] == '-' ? -1 : 1;
      body.erase(0, 1);
    }
    const bool imag = !body.empty() && body.back() == 'i';
    if (imag) body.pop_back();
    if (!imag && body.empty()) throw bad();
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw bad();
    }
    Integer value = body.empty() ? Integer(1) : Integer(body);
    if (sign < 0) value = -value;
    if (imag) {
      if (seen_im) throw bad();
      im = value;
      seen_im = true;
    } else {
      if (seen_re || seen_im) throw bad();
      re = value;
      seen_re = true;
    }
  }
  return QuadInt(re, im, 1);
}

ResidueRing::ResidueRing(const QuadInt& modulus) : modulus_(modulus) {
  if (modulus.d() != 1) {
    throw std::invalid_argument("residue rings are implemented for Z[i] (d = 1) only");
  }
  if (modulus.is_zero()) throw std::domain_error("residue ring modulo zero");
  const Integer n = modulus.norm();
  if (n > Integer(1L << 30)) {
    throw std::invalid_argument("residue ring order " + n.get_str() + " exceeds 2^30");
  }
  // Lattice alpha*Z[i] is spanned by (p, q) and (-q, p) where alpha = p + qi.
  const Integer& p = modulus.x();
  const Integer& q = modulus.y();
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  // s*q + t*p = g, so s*(p, q) + t*(-q, p) = (s*p - t*q, g).
  const Integer a = n / g;
  const Integer b = floor_mod(Integer(s * p - t * q), a);
  order_ = n.get_si();
  a_ = a.get_si();
  b_ = b.get_si();
  c_ = g.get_si();
}

Residue ResidueRing::reduce(std::int64_t x, std::int64_t y) const {
  const __int128 yy = y;
  const std::int64_t ry = floor_mod(yy, c_);
  const __int128 k = floor_div(yy - ry, c_);
  const std::int64_t rx = floor_mod(static_cast<__int128>(x) - k * b_, a_);
  return {rx, ry};
}

Residue ResidueRing::reduce(const QuadInt& q) const {
  if (q.d() != 1) throw std::invalid_argument("reduce: operand is not a Gaussian integer");
  const Integer ry = floor_mod(q.y(), Integer(c_));
  const Integer k = (q.y() - ry) / Integer(c_);
  const Integer rx = floor_mod(Integer(q.x() - k * Integer(b_)), Integer(a_));
  return {rx.get_si(), ry.get_si()};
}

Residue ResidueRing::mul(const Residue& p, const Residue& q) const {
  return reduce(p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x);
}

bool ResidueRing::is_unit(const Residue& r) const {
  // r is a unit iff the lattice spanned by r, i*r, alpha, i*alpha is all of
  // Z^2, i.e. the gcd of its 2x2 minors is 1.
  const std::array<std::array<Integer, 2>, 4> v = {{
      {Integer(r.x), Integer(r.y)},
      {Integer(-r.y), Integer(r.x)},
      {modulus_.x(), modulus_.y()},
      {Integer(-modulus_.y()), modulus_.x()},
  }};
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const Integer minor = v[i][0] * v[j][1] - v[i][1] * v[j][0];
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
    }
  }
  return g == 1;
}

Residue reduce(const QuadInt& q, const QuadInt& modulus) { return ResidueRing(modulus).reduce(q); }

std::optional<FieldMap> field_map(const QuadInt& modulus) {
  if (modulus.d() != 1 || modulus.is_zero()) return std::nullopt;
  const Integer n = modulus.norm();
  if (n < 2 || mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
  const ResidueRing ring(modulus);
  // A ring with a prime number of elements is Z/p; its HNF basis then has
  // c = 1, so every class has a representative x + 0i and x is its F_p value.
  if (ring.hnf_c() != 1) return std::nullopt;
  FieldMap map;
  map.p = ring.order();
  map.table.resize(static_cast<std::size_t>(map.p));
  for (std::int64_t k = 0; k < map.p; ++k) {
    map.table[static_cast<std::size_t>(k)] = ring.from_index(k).x;
  }
  map.image_of_i = ring.reduce(0, 1).x;
  return map;
}

}  // namespace bianchi
