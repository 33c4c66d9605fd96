#include "bianchi/matgroup.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <omp.h>

namespace bianchi {

namespace {

bool is_positive(const QuadInt& q) { return q.x() > 0 || (q.x() == 0 && q.y() > 0); }

void append_integer(std::string& out, const Integer& v) {
  out += v.get_str(32);
  out.push_back(',');
}

}  // namespace

ProjMat::ProjMat(QuadInt a, QuadInt b, QuadInt c, QuadInt d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  const QuadInt det = e_[0] * e_[3] - e_[1] * e_[2];
  if (!det.is_one()) {
    throw std::invalid_argument("matrix determinant is " + det.to_string() + ", expected 1");
  }
  canonicalize();
}

ProjMat::ProjMat(std::array<QuadInt, 4> e, Trusted) : e_(std::move(e)) { canonicalize(); }

ProjMat ProjMat::identity(long d) {
  return ProjMat({QuadInt(1, 0, d), QuadInt(0, 0, d), QuadInt(0, 0, d), QuadInt(1, 0, d)}, Trusted{});
}

ProjMat ProjMat::gaussian(long ax, long ay, long bx, long by, long cx, long cy, long dx, long dy) {
  return ProjMat(QuadInt::gaussian(ax, ay), QuadInt::gaussian(bx, by), QuadInt::gaussian(cx, cy),
                 QuadInt::gaussian(dx, dy));
}

void ProjMat::canonicalize() {
  for (const QuadInt& q : e_) {
    if (q.is_zero()) continue;
    if (!is_positive(q)) {
      for (QuadInt& v : e_) v = -v;
    }
    return;
  }
}

bool ProjMat::is_identity() const {
  return e_[0].is_one() && e_[1].is_zero() && e_[2].is_zero() && e_[3].is_one();
}

ProjMat ProjMat::inverse() const { return ProjMat({e_[3], -e_[1], -e_[2], e_[0]}, Trusted{}); }

ProjMat ProjMat::pow(long k) const {
  ProjMat base = k < 0 ? inverse() : *this;
  unsigned long n = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  ProjMat result = identity(ring());
  while (n > 0) {
    if (n & 1UL) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

ProjMat operator*(const ProjMat& m, const ProjMat& n) {
  const auto& x = m.e_;
  const auto& y = n.e_;
  return ProjMat({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                  x[2] * y[1] + x[3] * y[3]},
                 ProjMat::Trusted{});
}

ProjMat mat_mul(const ProjMat& m, const ProjMat& n) { return m * n; }

std::string ProjMat::key() const {
  std::string out;
  out.reserve(64);
  for (const QuadInt& q : e_) {
    append_integer(out, q.x());
    append_integer(out, q.y());
  }
  return out;
}

std::string ProjMat::to_string() const {
  return "[[" + e_[0].to_string() + ", " + e_[1].to_string() + "], [" + e_[2].to_string() + ", " +
         e_[3].to_string() + "]]";
}

std::string to_string(IsomKind kind) {
  switch (kind) {
    case IsomKind::identity: return "identity";
    case IsomKind::parabolic: return "parabolic";
    case IsomKind::elliptic: return "elliptic";
    case IsomKind::loxodromic: return "loxodromic";
  }
  return "unknown";
}

IsomClass classify(const ProjMat& m) {
  IsomClass out{IsomKind::loxodromic, m.trace()};
  const QuadInt& tr = out.trace;
  if (m.is_identity()) {
    out.kind = IsomKind::identity;
  } else if (tr.is_real() && (tr.x() == 2 || tr.x() == -2)) {
    out.kind = IsomKind::parabolic;
  } else {
    const QuadInt sq = tr * tr;
    if (sq.is_real() && sq.x() >= 0 && sq.x() < 4) out.kind = IsomKind::elliptic;
  }
  return out;
}

ComplexLength complex_length_from_trace(double re, double im) {
  const std::complex<double> half(re / 2.0, im / 2.0);
  std::complex<double> w = 2.0 * std::acosh(half);
  if (w.real() < 0.0) w = -w;
  double theta = std::remainder(w.imag(), 2.0 * std::numbers::pi);
  if (theta <= -std::numbers::pi) theta += 2.0 * std::numbers::pi;
  return {w.real(), theta};
}

ComplexLength complex_length(const ProjMat& m) {
  const IsomClass cls = classify(m);
  if (cls.kind != IsomKind::loxodromic) {
    throw std::domain_error("complex_length: element is " + to_string(cls.kind) + ", not loxodromic");
  }
  if (m.ring() != 1) throw std::invalid_argument("complex_length: only Z[i] entries are supported");
  return complex_length_from_trace(cls.trace.x().get_d(), cls.trace.y().get_d());
}

ResMat res_identity(const ResidueRing& ring) {
  return res_canonical(ring, {{ring.one(), ring.zero(), ring.zero(), ring.one()}});
}

ResMat res_canonical(const ResidueRing& ring, ResMat m) {
  ResMat neg;
  for (std::size_t k = 0; k < 4; ++k) neg.e[k] = ring.neg(m.e[k]);
  return std::lexicographical_compare(neg.e.begin(), neg.e.end(), m.e.begin(), m.e.end()) ? neg : m;
}

ResMat res_mul(const ResidueRing& ring, const ResMat& m, const ResMat& n) {
  const auto& x = m.e;
  const auto& y = n.e;
  auto dot = [&](const Residue& p, const Residue& q, const Residue& r, const Residue& s) {
    return ring.add(ring.mul(p, q), ring.mul(r, s));
  };
  return res_canonical(ring, {{dot(x[0], y[0], x[1], y[2]), dot(x[0], y[1], x[1], y[3]),
                               dot(x[2], y[0], x[3], y[2]), dot(x[2], y[1], x[3], y[3])}});
}

ResMat res_inverse(const ResidueRing& ring, const ResMat& m) {
  return res_canonical(ring, {{m.e[3], ring.neg(m.e[1]), ring.neg(m.e[2]), m.e[0]}});
}

std::uint64_t res_key(const ResidueRing& ring, const ResMat& m) {
  const auto n = static_cast<std::uint64_t>(ring.order());
  std::uint64_t key = 0;
  for (const Residue& r : m.e) key = key * n + static_cast<std::uint64_t>(ring.index(r));
  return key;
}

ResMat reduce_mat(const ResidueRing& ring, const ProjMat& m) {
  return res_canonical(ring, {{ring.reduce(m.a()), ring.reduce(m.b()), ring.reduce(m.c()), ring.reduce(m.d())}});
}

ResMat reduce_mat(const ProjMat& m, const QuadInt& modulus) { return reduce_mat(ResidueRing(modulus), m); }

FiniteMatrixGroup::FiniteMatrixGroup(ResidueRing ring, std::vector<ResMat> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  index_.reserve(elements_.size());
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    index_.emplace(res_key(ring_, elements_[k]), static_cast<int>(k));
  }
  identity_ = find(res_identity(ring_));
  if (identity_ < 0) throw std::logic_error("finite matrix group lacks the identity");
}

int FiniteMatrixGroup::find(const ResMat& m) const {
  const auto it = index_.find(res_key(ring_, m));
  return it == index_.end() ? -1 : it->second;
}

int FiniteMatrixGroup::mul(int i, int j) const {
  return find(res_mul(ring_, elements_[static_cast<std::size_t>(i)], elements_[static_cast<std::size_t>(j)]));
}

int FiniteMatrixGroup::inverse(int i) const {
  return find(res_inverse(ring_, elements_[static_cast<std::size_t>(i)]));
}

namespace {

ResidueRing guarded_ring(const QuadInt& modulus, const ImageGuard& guard) {
  ResidueRing ring(modulus);
  const auto n = static_cast<std::uint64_t>(ring.order());
  if (n > 65535 || n * n * n * n > guard.max_scanned) {
    throw GuardExceeded("enumerate_image: " + std::to_string(n) + "^4 entry tuples exceed the scan guard");
  }
  return ring;
}

// All canonical det-1 matrices whose first entry has index `first`, in
// increasing key order.
void scan_first_entry(const ResidueRing& ring, std::int64_t first, std::vector<ResMat>& out) {
  const std::int64_t n = ring.order();
  const Residue one = ring.one();
  const Residue a = ring.from_index(first);
  for (std::int64_t ib = 0; ib < n; ++ib) {
    const Residue b = ring.from_index(ib);
    for (std::int64_t ic = 0; ic < n; ++ic) {
      const Residue c = ring.from_index(ic);
      const Residue bc = ring.mul(b, c);
      for (std::int64_t id = 0; id < n; ++id) {
        const Residue d = ring.from_index(id);
        if (ring.sub(ring.mul(a, d), bc) != one) continue;
        const ResMat m{{a, b, c, d}};
        if (res_canonical(ring, m) == m) out.push_back(m);
      }
    }
  }
}

}  // namespace

std::shared_ptr<const FiniteMatrixGroup> enumerate_image_serial(const QuadInt& modulus, ImageGuard guard) {
  ResidueRing ring = guarded_ring(modulus, guard);
  std::vector<ResMat> elements;
  for (std::int64_t ia = 0; ia < ring.order(); ++ia) scan_first_entry(ring, ia, elements);
  return std::make_shared<const FiniteMatrixGroup>(std::move(ring), std::move(elements));
}

std::shared_ptr<const FiniteMatrixGroup> enumerate_image(const QuadInt& modulus, ImageGuard guard) {
  ResidueRing ring = guarded_ring(modulus, guard);
  const std::int64_t n = ring.order();
  std::vector<std::vector<ResMat>> per_entry(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t ia = 0; ia < n; ++ia) scan_first_entry(ring, ia, per_entry[static_cast<std::size_t>(ia)]);
  std::vector<ResMat> elements;
  for (auto& chunk : per_entry) elements.insert(elements.end(), chunk.begin(), chunk.end());
  return std::make_shared<const FiniteMatrixGroup>(std::move(ring), std::move(elements));
}

}  // namespace bianchi
