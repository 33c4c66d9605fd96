#include "report.hpp"

namespace bianchi::cli {

namespace {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    default:
      return "incomplete";
  }
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["parameters"] = parameters;
  out["status"] = cli::to_string(status);
  out["payload"] = payload;
  out["version"] = BIANCHI_VERSION;
  out["wall_time_s"] = wall_time_s ? Json(*wall_time_s) : Json(nullptr);
  return out;
}

Json to_json(const fp::AbelianInvariants& a) {
  Json torsion = Json::array();
  for (const Integer& d : a.torsion) torsion.push_back(integer_json(d));
  return {{"free_rank", a.free_rank}, {"torsion", torsion}, {"group", a.to_string()}};
}

Json to_json(const fp::Fingerprint& f) {
  Json counts = Json::array();
  for (const auto& [name, count] : f.counts) counts.push_back({{"target", name}, {"homomorphisms", count}});
  return {{"abelianization", to_json(f.abelian)}, {"counts", counts}};
}

Json to_json(const fp::CosetTable& t, bool permutations) {
  Json out{{"cosets", t.size()}, {"generators", t.generator_count()}};
  if (permutations) {
    Json perms = Json::array();
    for (int g = 0; g < t.generator_count(); ++g) perms.push_back(t.permutation(g));
    out["permutations"] = perms;
  }
  return out;
}

Json to_json(const GeodesicAudit& a) {
  Json violations = Json::array();
  for (const AuditViolation& v : a.violations) {
    violations.push_back({{"matrix", v.matrix}, {"trace", v.trace}, {"ell0", v.ell0}, {"reason", v.reason}});
  }
  return {{"alpha", a.alpha.to_string()},
          {"bound", a.bound},
          {"radius", a.radius},
          {"elements_visited", a.elements_visited},
          {"kernel_elements", a.kernel_elements},
          {"loxodromic_kernel_elements", a.loxodromic_kernel_elements},
          {"min_loxodromic_length", a.min_loxodromic_length ? Json(*a.min_loxodromic_length) : Json(nullptr)},
          {"min_trace_norm", a.min_trace_norm ? integer_json(*a.min_trace_norm) : Json(nullptr)},
          {"violations", violations},
          {"tolerance", 1e-9}};
}

Json to_json(const FillResult& r, bool with_presentation) {
  Json out{{"kept_index", r.kept_index},
           {"status", to_string(r.status)},
           {"generators", r.presentation.generator_count()},
           {"relators", r.presentation.relators.size()},
           {"relator_length", r.presentation.total_length()},
           {"tietze_moves", r.tietze_moves},
           {"abelianization", to_json(r.abelian)},
           {"fingerprint", r.fingerprint ? to_json(*r.fingerprint) : Json(nullptr)},
           {"matches_fig8", r.matches_fig8}};
  if (!r.note.empty()) out["note"] = r.note;
  if (with_presentation) out["presentation"] = print_presentation(fp::to_words(r.presentation));
  return out;
}

Json to_json(const MonodromyCheck& c) {
  return {{"valid", c.valid},
          {"transitive", c.transitive},
          {"failing_relator", c.failing_relator ? Json(*c.failing_relator + 1) : Json(nullptr)},
          {"message", c.message},
          {"warnings", c.warnings}};
}

}  // namespace bianchi::cli
