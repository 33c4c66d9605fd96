#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bianchi/quadint.hpp"

namespace bianchi {

/// Element of PSL_2(O_d): a determinant-one 2x2 matrix modulo {+I, -I}.
///
/// The stored representative is sign-canonical: the first nonzero entry in
/// the order a, b, c, d has x > 0, or x == 0 and y > 0.
class ProjMat {
 public:
  /// Identity of PSL_2(Z[i]).
  ProjMat() : ProjMat(QuadInt::gaussian(1, 0), QuadInt::gaussian(0, 0), QuadInt::gaussian(0, 0),
                      QuadInt::gaussian(1, 0)) {}
  /// Throws std::invalid_argument unless ad - bc == 1.
  ProjMat(QuadInt a, QuadInt b, QuadInt c, QuadInt d);

  static ProjMat identity(long d = 1);
  static ProjMat gaussian(long ax, long ay, long bx, long by, long cx, long cy, long dx, long dy);

  const QuadInt& a() const { return e_[0]; }
  const QuadInt& b() const { return e_[1]; }
  const QuadInt& c() const { return e_[2]; }
  const QuadInt& d() const { return e_[3]; }
  const std::array<QuadInt, 4>& entries() const { return e_; }
  long ring() const { return e_[0].d(); }

  QuadInt trace() const { return e_[0] + e_[3]; }
  bool is_identity() const;
  ProjMat inverse() const;
  ProjMat pow(long k) const;

  friend ProjMat operator*(const ProjMat& m, const ProjMat& n);
  friend bool operator==(const ProjMat& m, const ProjMat& n) { return m.e_ == n.e_; }

  /// Byte key of the canonical entries, for exact hashing.
  std::string key() const;
  std::string to_string() const;

 private:
  struct Trusted {};
  ProjMat(std::array<QuadInt, 4> e, Trusted);
  void canonicalize();

  std::array<QuadInt, 4> e_;
};

ProjMat mat_mul(const ProjMat& m, const ProjMat& n);

enum class IsomKind { identity, parabolic, elliptic, loxodromic };

std::string to_string(IsomKind kind);

struct IsomClass {
  IsomKind kind = IsomKind::identity;
  QuadInt trace;
};

/// identity iff M = +-I; parabolic iff tr = +-2 otherwise; elliptic iff tr is
/// real with |tr| < 2; loxodromic otherwise (this includes tr = +-2i).
IsomClass classify(const ProjMat& m);

/// Complex translation length ell0 + i*theta with 2 cosh((ell0 + i theta)/2) = +-tr.
struct ComplexLength {
  double ell0 = 0.0;
  double theta = 0.0;
};

/// Throws std::domain_error for non-loxodromic input.
ComplexLength complex_length(const ProjMat& m);
ComplexLength complex_length_from_trace(double re, double im);

/// Element of PSL_2(Z[i]/(alpha)); entries are canonical residues. Of {M, -M}
/// the representative with the lexicographically smaller entry tuple is kept.
struct ResMat {
  std::array<Residue, 4> e;
  friend bool operator==(const ResMat&, const ResMat&) = default;
};

ResMat res_identity(const ResidueRing& ring);
ResMat res_mul(const ResidueRing& ring, const ResMat& m, const ResMat& n);
ResMat res_inverse(const ResidueRing& ring, const ResMat& m);
ResMat res_canonical(const ResidueRing& ring, ResMat m);
/// Dense key: entry indices in base order(), requires order()^4 < 2^63.
std::uint64_t res_key(const ResidueRing& ring, const ResMat& m);

ResMat reduce_mat(const ResidueRing& ring, const ProjMat& m);
ResMat reduce_mat(const ProjMat& m, const QuadInt& modulus);

/// PSL_2(Z[i]/(alpha)) as an explicit element list with a lookup index.
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(ResidueRing ring, std::vector<ResMat> elements);

  const ResidueRing& ring() const { return ring_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<ResMat>& elements() const { return elements_; }
  const ResMat& element(std::size_t k) const { return elements_[k]; }

  /// Index of m, or -1 when m is not in the list. m must be sign-canonical.
  int find(const ResMat& m) const;
  int identity() const { return identity_; }
  int mul(int i, int j) const;
  int inverse(int i) const;

 private:
  ResidueRing ring_;
  std::vector<ResMat> elements_;
  std::unordered_map<std::uint64_t, int> index_;
  int identity_ = 0;
};

struct ImageGuard {
  /// Upper bound on order()^4, the number of entry tuples scanned.
  std::uint64_t max_scanned = 100'000'000;
};

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every sign class of determinant-one matrices over Z[i]/(alpha), listed in
/// increasing res_key order. OpenMP-parallel over the first entry.
std::shared_ptr<const FiniteMatrixGroup> enumerate_image(const QuadInt& modulus,
                                                         ImageGuard guard = {});
/// Single-threaded reference for enumerate_image.
std::shared_ptr<const FiniteMatrixGroup> enumerate_image_serial(const QuadInt& modulus,
                                                                ImageGuard guard = {});

}  // namespace bianchi
