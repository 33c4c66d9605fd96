#include "bianchi/congruence.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <tuple>
#include <unordered_set>

#include "bianchi/words.hpp"

namespace bianchi {

namespace {

QuadInt checked_alpha(QuadInt alpha) {
  if (alpha.d() != 1) throw std::invalid_argument("congruence subgroups are only supported over Z[i]");
  if (alpha.is_zero()) throw std::invalid_argument("congruence subgroup of the zero ideal");
  return alpha;
}

std::array<ProjMat, 6> ball_generators() {
  const Dictionary dict = swan_dictionary();
  const ProjMat& t = dict.at("t");
  const ProjMat& u = dict.at("u");
  return {dict.at("a"), dict.at("l"), t, t.inverse(), u, u.inverse()};
}

// Per-element bookkeeping of the audit; merged across threads.
struct AuditTally {
  std::size_t kernel = 0;
  std::size_t loxodromic = 0;
  std::optional<double> min_length;
  std::optional<Integer> min_trace_norm;
  std::vector<AuditViolation> violations;

  void merge(AuditTally other) {
    kernel += other.kernel;
    loxodromic += other.loxodromic;
    if (other.min_length && (!min_length || *other.min_length < *min_length)) min_length = other.min_length;
    if (other.min_trace_norm && (!min_trace_norm || *other.min_trace_norm < *min_trace_norm)) {
      min_trace_norm = other.min_trace_norm;
    }
    for (auto& v : other.violations) violations.push_back(std::move(v));
  }
};

class AuditCheck {
 public:
  explicit AuditCheck(const CongruenceGroup& g)
      : group_(g), bound_(systole_lower_bound(g.alpha())), trace_floor_(norm(g.alpha()) - 2) {
    trace_floor_ *= trace_floor_;
  }

  double bound() const { return bound_; }

  void visit(const ProjMat& m, AuditTally& tally) const {
    if (!group_.member(m)) return;
    ++tally.kernel;
    const IsomClass cls = classify(m);
    if (cls.kind != IsomKind::loxodromic) return;
    ++tally.loxodromic;
    const double ell0 = complex_length(m).ell0;
    const Integer tr_norm = norm(cls.trace);
    if (!tally.min_length || ell0 < *tally.min_length) tally.min_length = ell0;
    if (!tally.min_trace_norm || tr_norm < *tally.min_trace_norm) tally.min_trace_norm = tr_norm;
    if (ell0 < bound_ - 1e-9) {
      tally.violations.push_back({m.to_string(), cls.trace.to_string(), ell0, "translation length below bound"});
    }
    if (tr_norm < trace_floor_) {
      tally.violations.push_back({m.to_string(), cls.trace.to_string(), ell0, "|tr| below norm(alpha) - 2"});
    }
  }

 private:
  const CongruenceGroup& group_;
  double bound_;
  Integer trace_floor_;
};

GeodesicAudit finish(const CongruenceGroup& g, int radius, double bound, std::size_t visited, AuditTally tally) {
  GeodesicAudit out;
  out.alpha = g.alpha();
  out.bound = bound;
  out.radius = radius;
  out.elements_visited = visited;
  out.kernel_elements = tally.kernel;
  out.loxodromic_kernel_elements = tally.loxodromic;
  out.min_loxodromic_length = tally.min_length;
  out.min_trace_norm = tally.min_trace_norm;
  out.violations = std::move(tally.violations);
  std::sort(out.violations.begin(), out.violations.end(), [](const AuditViolation& x, const AuditViolation& y) {
    return std::tie(x.matrix, x.reason) < std::tie(y.matrix, y.reason);
  });
  return out;
}

void check_radius(int radius) {
  if (radius < 0) throw std::invalid_argument("audit radius must be non-negative");
}

// Visited set split into independently locked shards.
class ShardedSet {
 public:
  bool insert(std::string key) {
    Shard& s = shards_[std::hash<std::string>{}(key) % shards_.size()];
    const std::lock_guard<std::mutex> lock(s.mutex);
    return s.keys.insert(std::move(key)).second;
  }

 private:
  struct Shard {
    std::mutex mutex;
    std::unordered_set<std::string> keys;
  };
  std::array<Shard, 64> shards_;
};

}  // namespace

CongruenceGroup::CongruenceGroup(QuadInt alpha, ImageGuard guard)
    : alpha_(checked_alpha(std::move(alpha))), ring_(alpha_), guard_(guard) {}

const FiniteMatrixGroup& CongruenceGroup::image() const {
  std::call_once(once_, [this] { image_ = enumerate_image(alpha_, guard_); });
  return *image_;
}

bool CongruenceGroup::member(const ProjMat& m) const {
  if (m.ring() != 1) throw std::invalid_argument("member: matrix is not over Z[i]");
  return reduce_mat(ring_, m) == res_identity(ring_);
}

TraceWitness trace_congruence_witness(const QuadInt& alpha, const ProjMat& m) {
  const QuadInt alpha2 = alpha * alpha;
  const QuadInt two(Integer(2), Integer(0), alpha.d());
  const QuadInt tr = m.trace();
  const std::optional<QuadInt> plus = divide_exact(tr - two, alpha2);
  const std::optional<QuadInt> minus = divide_exact(-tr - two, alpha2);
  if (plus) return {*plus, 1, minus.has_value()};
  if (minus) return {*minus, -1, false};
  throw TraceCongruenceFailure("neither tr - 2 nor -tr - 2 is divisible by alpha^2 for " + m.to_string());
}

TraceWitness trace_congruence_witness(const CongruenceGroup& g, const ProjMat& m) {
  if (!g.member(m)) throw std::invalid_argument("trace_congruence_witness: matrix is not in the congruence subgroup");
  return trace_congruence_witness(g.alpha(), m);
}

double systole_lower_bound(const QuadInt& alpha) {
  const Integer n = norm(alpha);
  if (n <= 4) throw std::domain_error("systole_lower_bound: norm(alpha) = " + n.get_str() + " <= 4 gives no bound");
  return 2.0 * std::acosh((n.get_d() - 2.0) / 2.0);
}

GeodesicAudit audit_short_geodesics(const CongruenceGroup& g, int radius, const AuditOptions& options) {
  check_radius(radius);
  const AuditCheck check(g);
  const auto gens = ball_generators();
  ShardedSet visited;
  visited.insert(ProjMat().key());
  std::size_t count = 1;
  AuditTally tally;
  check.visit(ProjMat(), tally);
  std::vector<ProjMat> frontier{ProjMat()};
  for (int level = 1; level <= radius && !frontier.empty(); ++level) {
    std::vector<ProjMat> next;
#pragma omp parallel
    {
      std::vector<ProjMat> local;
      AuditTally local_tally;
#pragma omp for schedule(dynamic, 256) nowait
      for (std::size_t k = 0; k < frontier.size(); ++k) {
        for (const ProjMat& s : gens) {
          ProjMat m = frontier[k] * s;
          if (!visited.insert(m.key())) continue;
          check.visit(m, local_tally);
          local.push_back(std::move(m));
        }
      }
#pragma omp critical(bianchi_audit_merge)
      {
        for (auto& m : local) next.push_back(std::move(m));
        tally.merge(std::move(local_tally));
      }
    }
    count += next.size();
    if (count > options.max_elements) {
      throw GuardExceeded("audit_short_geodesics: ball of radius " + std::to_string(level) + " exceeds " +
                          std::to_string(options.max_elements) + " elements");
    }
    frontier = std::move(next);
  }
  return finish(g, radius, check.bound(), count, std::move(tally));
}

GeodesicAudit audit_short_geodesics_serial(const CongruenceGroup& g, int radius, const AuditOptions& options) {
  check_radius(radius);
  const AuditCheck check(g);
  const auto gens = ball_generators();
  std::unordered_set<std::string> visited{ProjMat().key()};
  AuditTally tally;
  check.visit(ProjMat(), tally);
  std::vector<ProjMat> frontier{ProjMat()};
  for (int level = 1; level <= radius && !frontier.empty(); ++level) {
    std::vector<ProjMat> next;
    for (const ProjMat& m : frontier) {
      for (const ProjMat& s : gens) {
        ProjMat p = m * s;
        if (!visited.insert(p.key()).second) continue;
        check.visit(p, tally);
        next.push_back(std::move(p));
      }
    }
    if (visited.size() > options.max_elements) {
      throw GuardExceeded("audit_short_geodesics: ball of radius " + std::to_string(level) + " exceeds " +
                          std::to_string(options.max_elements) + " elements");
    }
    frontier = std::move(next);
  }
  return finish(g, radius, check.bound(), visited.size(), std::move(tally));
}

std::size_t stabilizer_image_order(const CongruenceGroup& g) {
  const FiniteMatrixGroup& image = g.image();
  const Dictionary dict = swan_dictionary();
  std::vector<int> gens;
  for (const char* name : {"t", "u", "l"}) gens.push_back(image.find(reduce_mat(g.ring(), dict.at(name))));
  std::vector<int> seen{image.identity()};
  std::unordered_set<int> member{image.identity()};
  for (std::size_t k = 0; k < seen.size(); ++k) {
    for (int s : gens) {
      const int next = image.mul(seen[k], s);
      if (member.insert(next).second) seen.push_back(next);
    }
  }
  return seen.size();
}

std::size_t count_cusps(const CongruenceGroup& g) { return g.image().order() / stabilizer_image_order(g); }

bool peripheral_check(const CongruenceGroup& g) {
  const Dictionary dict = swan_dictionary();
  const ProjMat& t = dict.at("t");
  for (const ProjMat& m : {t.pow(13), t.pow(-5) * dict.at("u")}) {
    if (!g.member(m) || classify(m).kind != IsomKind::parabolic) return false;
  }
  return true;
}

}  // namespace bianchi
