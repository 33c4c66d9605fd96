#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "bianchi/congruence.hpp"
#include "bianchi/covers.hpp"
#include "bianchi/fillpipe.hpp"
#include "bianchi/geombounds.hpp"
#include "bianchi/homcount.hpp"
#include "bianchi/words.hpp"
#include "report.hpp"

namespace bianchi::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kFloatTolerance = 1e-12;

const QuadInt kLinkAlpha = QuadInt::gaussian(3, 2);

std::vector<fp::FiniteGroup> parse_panel(const std::vector<std::string>& names) {
  if (names.empty()) return fp::standard_panel();
  std::vector<fp::FiniteGroup> out;
  for (const std::string& n : names) out.push_back(fp::panel_group(n));
  return out;
}

Json panel_names(const std::vector<fp::FiniteGroup>& panel) {
  Json out = Json::array();
  for (const auto& g : panel) out.push_back(g.name());
  return out;
}

fp::Presentation read_fp(const std::string& path) { return fp::from_words(read_presentation_file(path)); }

std::vector<fp::Letters> parse_words(const std::vector<std::string>& words, const fp::Presentation& p) {
  std::vector<fp::Letters> out;
  for (const std::string& w : words) out.push_back(fp::to_letters(parse_word(w, {}, &p.generators), p.generators));
  return out;
}

Report relators_check() {
  Report r{"relators-check"};
  const Presentation swan = swan_presentation();
  const Dictionary dict = swan_dictionary();
  Json rows = Json::array();
  std::size_t trivial = 0;
  for (const Word& w : swan.relators) {
    const ProjMat m = eval(w, dict);
    trivial += m.is_identity() ? 1 : 0;
    rows.push_back({{"relator", w.to_string()}, {"image", m.to_string()}, {"identity", m.is_identity()}});
  }
  r.payload = {{"relators", rows}, {"checked", swan.relators.size()}, {"identity", trivial}};
  r.status = trivial == swan.relators.size() ? Status::pass : Status::fail;
  return r;
}

Report meridians_check(const std::string& alpha_text) {
  Report r{"meridians-check", {{"alpha", alpha_text}}};
  const CongruenceGroup g(parse_gaussian(alpha_text));
  const MeridianTable table = load_meridians();
  const Dictionary dict = swan_dictionary();
  Json rows = Json::array();
  std::size_t good = 0;
  for (std::size_t k = 0; k < table.entries.size(); ++k) {
    const ProjMat m = eval(table.entries[k], dict);
    const bool member = g.member(m);
    const bool parabolic = classify(m).kind == IsomKind::parabolic;
    good += member && parabolic ? 1 : 0;
    rows.push_back({{"index", k + 1},
                    {"word", table.entries[k].to_string()},
                    {"trace", m.trace().to_string()},
                    {"kernel_member", member},
                    {"parabolic", parabolic}});
  }
  r.payload = {{"alpha", g.alpha().to_string()},
               {"count", table.entries.size()},
               {"parabolic_kernel_members", good},
               {"meridians", rows}};
  r.status = good == kMeridianCount && table.entries.size() == kMeridianCount ? Status::pass : Status::fail;
  return r;
}

Report systole_bound(const std::string& alpha_text) {
  Report r{"systole-bound", {{"alpha", alpha_text}}};
  const QuadInt alpha = parse_gaussian(alpha_text);
  const double bound = systole_lower_bound(alpha);
  const double threshold = genus2_exclusion_threshold();
  r.payload = {{"alpha", alpha.to_string()},
               {"norm", norm(alpha).get_si()},
               {"bound", bound},
               {"formula", "2 arccosh((norm(alpha) - 2) / 2)"},
               {"genus2_threshold", threshold},
               {"exceeds_threshold", bound > threshold},
               {"excludes_genus2", excludes_genus2(bound)},
               {"tolerance", kFloatTolerance}};
  return r;
}

Report cusp_count(const std::string& alpha_text) {
  Report r{"cusp-count", {{"alpha", alpha_text}}};
  const CongruenceGroup g(parse_gaussian(alpha_text));
  r.payload = {{"alpha", g.alpha().to_string()},
               {"image_order", g.image().order()},
               {"stabilizer_image_order", stabilizer_image_order(g)},
               {"cusps", count_cusps(g)}};
  return r;
}

Report coset_table(const std::string& alpha_text, bool permutations) {
  Report r{"coset-table", {{"alpha", alpha_text}, {"permutations", permutations}}};
  const CongruenceGroup g(parse_gaussian(alpha_text));
  const fp::Presentation swan = fp::from_words(swan_presentation());
  const fp::FiniteGroup quotient = fp::FiniteGroup::from_matrix_group("PSL2(Z[i]/(" + g.alpha().to_string() + "))", g.image());
  const Dictionary dict = swan_dictionary();
  std::vector<int> images;
  for (const std::string& name : swan.generators) {
    images.push_back(fp::FiniteGroup::matrix_element_index(g.image(), g.image().find(reduce_mat(g.ring(), dict.at(name)))));
  }
  const fp::CosetTable table = fp::coset_table_from_hom(swan, quotient, images);
  const auto problem = fp::check_table(table, swan);
  r.payload = {{"alpha", g.alpha().to_string()}, {"image_order", g.image().order()}, {"table", to_json(table, permutations)},
               {"valid", !problem.has_value()}};
  if (problem) r.payload["problem"] = *problem;
  r.status = problem ? Status::fail : Status::pass;
  return r;
}

Report todd_coxeter_cmd(const std::string& file, const std::vector<std::string>& extra, const std::vector<std::string>& subgroup,
                        std::size_t limit, bool permutations) {
  Report r{"todd-coxeter",
           {{"file", file}, {"extra_relators", extra}, {"subgroup", subgroup}, {"limit", limit}, {"permutations", permutations}}};
  fp::Presentation p = read_fp(file);
  for (fp::Letters& w : parse_words(extra, p)) p.relators.push_back(std::move(w));
  const std::vector<fp::Letters> sub = parse_words(subgroup, p);
  try {
    const fp::CosetTable t = fp::todd_coxeter(p, sub, limit);
    r.payload = {{"table", to_json(t, permutations)}, {"limit_exceeded", false}};
  } catch (const fp::CosetLimitExceeded& e) {
    r.payload = {{"limit_exceeded", true}, {"error", e.what()}};
    r.status = Status::fail;
  }
  return r;
}

Report rewrite_cmd(const std::string& alpha_text, const std::vector<std::string>& words) {
  Report r{"rewrite", {{"alpha", alpha_text}, {"words", words}}};
  if (!(parse_gaussian(alpha_text) == kLinkAlpha)) throw UsageError("rewrite is implemented for --alpha 3+2i only");
  const KernelPresentation k = build_kernel_presentation();
  Json rows = Json::array();
  bool all_ok = true;
  for (const std::string& text : words) {
    const Word w = parse_word(text, {}, &k.swan.generators);
    try {
      const fp::Letters out = k.kernel.rewriting.rewrite(fp::to_letters(w, k.swan.generators));
      rows.push_back({{"word", w.to_string()},
                      {"in_subgroup", true},
                      {"length", out.size()},
                      {"rewritten", fp::to_word(out, k.kernel.presentation.generators).to_string()}});
    } catch (const fp::NotInSubgroup& e) {
      all_ok = false;
      rows.push_back({{"word", w.to_string()}, {"in_subgroup", false}, {"error", e.what()}});
    }
  }
  r.payload = {{"alpha", kLinkAlpha.to_string()},
               {"image_order", k.image_order},
               {"todd_coxeter_cosets", k.todd_coxeter_cosets},
               {"tables_agree", true},
               {"schreier_generators", k.kernel.presentation.generator_count()},
               {"relators", k.kernel.presentation.relators.size()},
               {"meridians_rewritten", k.meridians.size()},
               {"rewrites", rows}};
  r.status = all_ok ? Status::pass : Status::fail;
  return r;
}

Report fill_cmd(const std::string& keep, std::size_t budget, const std::vector<std::string>& panel_text, bool presentations) {
  Report r{"fill", {{"keep", keep}, {"budget", budget}, {"panel", panel_text}}};
  FillOptions opt;
  opt.tietze.budget = budget;
  opt.panel = parse_panel(panel_text);
  int kept = -1;
  if (keep != "all" && keep != "none") {
    try {
      std::size_t used = 0;
      kept = std::stoi(keep, &used);
      if (used != keep.size()) throw std::invalid_argument(keep);
    } catch (const std::exception&) {
      throw UsageError("--keep expects 1..42, 'all' or 'none'");
    }
    if (kept < 1 || kept > static_cast<int>(kMeridianCount)) throw UsageError("--keep expects 1..42, 'all' or 'none'");
  }
  const KernelPresentation k = build_kernel_presentation();
  const fp::Fingerprint reference = fig8_fingerprint(opt);
  std::vector<FillResult> results;
  if (keep == "all") {
    results = scan_all(k, opt);
  } else {
    results.push_back(fill(k, keep == "none" ? 0 : kept, opt, reference));
  }
  Json rows = Json::array();
  Json matching = Json::array();
  std::size_t incomplete = 0;
  for (const FillResult& f : results) {
    rows.push_back(to_json(f, presentations));
    if (f.matches_fig8) matching.push_back(f.kept_index);
    if (f.status == FillStatus::incomplete) ++incomplete;
  }
  r.payload = {{"panel", panel_names(opt.panel)},
               {"reference_fingerprint", to_json(reference)},
               {"results", rows},
               {"matching_indices", matching},
               {"incomplete", incomplete},
               {"note", "a match means abelianization Z and equal homomorphism counts on the panel; this is evidence of "
                        "isomorphism with the figure-eight knot group, not a proof"}};
  if (keep == "all") {
    r.status = matching.empty() ? Status::fail : Status::pass;
  } else if (keep == "none") {
    const FillResult& f = results.front();
    bool trivial = f.abelian.is_trivial() && f.fingerprint.has_value();
    if (f.fingerprint) {
      for (const auto& [name, count] : f.fingerprint->counts) trivial = trivial && count == 1;
    }
    r.payload["trivial"] = trivial;
    r.status = f.status == FillStatus::incomplete ? Status::incomplete : trivial ? Status::pass : Status::fail;
  } else {
    r.status = results.front().status == FillStatus::incomplete ? Status::incomplete : Status::pass;
  }
  return r;
}

Report fingerprint_cmd(const std::string& file, const std::vector<std::string>& targets) {
  Report r{"fingerprint", {{"file", file}, {"targets", targets}}};
  const fp::Presentation p = read_fp(file);
  r.payload = {{"generators", p.generator_count()},
               {"relators", p.relators.size()},
               {"fingerprint", to_json(fp::fingerprint(p, parse_panel(targets)))}};
  return r;
}

Report compare_cmd(const std::string& first, const std::string& second, const std::vector<std::string>& targets) {
  Report r{"compare", {{"first", first}, {"second", second}, {"targets", targets}}};
  const auto panel = parse_panel(targets);
  const fp::Fingerprint a = fp::fingerprint(read_fp(first), panel);
  const fp::Fingerprint b = fp::fingerprint(read_fp(second), panel);
  r.payload = {{"first", to_json(a)},
               {"second", to_json(b)},
               {"equal", a == b},
               {"note", "equal fingerprints are necessary for isomorphism, not sufficient"}};
  r.status = a == b ? Status::pass : Status::fail;
  return r;
}

Report audit_cmd(const std::string& alpha_text, int radius, std::size_t max_elements, bool serial) {
  Report r{"audit-geodesics", {{"alpha", alpha_text}, {"radius", radius}, {"max_elements", max_elements}, {"serial", serial}}};
  const CongruenceGroup g(parse_gaussian(alpha_text));
  AuditOptions opt;
  opt.max_elements = max_elements;
  const GeodesicAudit a = serial ? audit_short_geodesics_serial(g, radius, opt) : audit_short_geodesics(g, radius, opt);
  r.payload = to_json(a);
  r.status = a.passed() ? Status::pass : Status::fail;
  return r;
}

Report geometry_cmd(const std::optional<double>& sys, const std::optional<double>& area, const std::optional<double>& radius) {
  Report r{"geometry"};
  if (!sys && !area && !radius) throw UsageError("geometry needs at least one of --sys, --area, --r");
  const double threshold = genus2_exclusion_threshold();
  r.payload["genus2_threshold"] = threshold;
  if (sys) {
    r.parameters["sys"] = *sys;
    const double a = min_area_from_systole(*sys);
    r.payload["sys"] = {{"min_area", a}, {"min_genus", min_genus_from_area(a)}, {"excludes_genus2", excludes_genus2(*sys)}};
  }
  if (area) {
    r.parameters["area"] = *area;
    r.payload["area"] = {{"min_genus", min_genus_from_area(*area)}};
  }
  if (radius) {
    r.parameters["r"] = *radius;
    const double a = ball_area_bound(*radius);
    r.payload["r"] = {{"ball_area_bound", a}, {"min_genus", min_genus_from_area(a)}};
  }
  r.payload["tolerance"] = kGeomTolerance;
  return r;
}

Json monodromy_payload(const Monodromy& m) {
  const MonodromyCheck c = check_monodromy(m);
  Json out{{"degree", m.degree}, {"generators", m.source.generators}, {"components", m.components}, {"check", to_json(c)}};
  out["preimage_counts"] = c.valid ? Json(branch_preimage_counts(m)) : Json(nullptr);
  return out;
}

Report monodromy_check_cmd(const std::string& file) {
  Report r{"monodromy-check", {{"file", file}}};
  const Monodromy m = read_monodromy_file(file);
  r.payload = monodromy_payload(m);
  r.status = r.payload["check"]["valid"].get<bool>() ? Status::pass : Status::fail;
  return r;
}

Report monodromy_extend_cmd(const std::string& file, const std::vector<std::string>& fresh, const std::string& full_file) {
  Report r{"monodromy-extend", {{"file", file}, {"new_meridians", fresh}, {"full", full_file}}};
  const Monodromy m = read_monodromy_file(file);
  std::vector<std::vector<std::string>> comps;
  for (const std::string& g : fresh) comps.push_back({g});
  try {
    const Monodromy ext = full_file.empty() ? extend_trivially(m, comps) : extend_trivially(m, read_fp(full_file), comps);
    r.payload = monodromy_payload(ext);
    r.payload["extended"] = print_monodromy(ext);
    r.status = r.payload["check"]["valid"].get<bool>() ? Status::pass : Status::fail;
  } catch (const fp::RelatorViolation& e) {
    r.payload = {{"error", e.what()}, {"failing_relator", e.relator() + 1}};
    r.status = Status::fail;
  }
  return r;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Exact computations for Bianchi groups, principal congruence subgroups and their link groups"};
  app.require_subcommand(1);
  int jobs = 1;
  std::string data;
  bool timing = false;
  app.add_option("--jobs", jobs, "Worker threads for parallel kernels")->check(CLI::PositiveNumber);
  app.add_option("--data-dir", data, "Directory holding meridians.txt and the bundled presentations");
  app.add_flag("--timing", timing, "Record wall time in the report (breaks byte-identical output)");

  std::function<Report()> action;
  std::string alpha = "3+2i";
  auto add_alpha = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--alpha", alpha, "Gaussian integer such as 3+2i");
    if (required) opt->required();
  };

  app.add_subcommand("relators-check", "Evaluate the Swan relators on the matrix dictionary")
      ->callback([&] { action = relators_check; });

  auto* mer = app.add_subcommand("meridians-check", "Check that every meridian is a parabolic kernel element");
  add_alpha(mer, false);
  mer->callback([&] { action = [&] { return meridians_check(alpha); }; });

  auto* sys = app.add_subcommand("systole-bound", "Trace-congruence systole lower bound");
  add_alpha(sys, true);
  sys->callback([&] { action = [&] { return systole_bound(alpha); }; });

  auto* cusp = app.add_subcommand("cusp-count", "Number of cusps of the congruence subgroup");
  add_alpha(cusp, true);
  cusp->callback([&] { action = [&] { return cusp_count(alpha); }; });

  bool permutations = false;
  auto* ct = app.add_subcommand("coset-table", "Coset table of the congruence subgroup from finite images");
  add_alpha(ct, true);
  ct->add_flag("--permutations", permutations, "Include generator permutations");
  ct->callback([&] { action = [&] { return coset_table(alpha, permutations); }; });

  std::string file, second;
  std::vector<std::string> extra, subgroup, words, targets, fresh;
  std::size_t limit = 2'000'000;
  auto* tc = app.add_subcommand("todd-coxeter", "Coset enumeration on a presentation file");
  tc->add_option("file", file, "Presentation file")->required()->check(CLI::ExistingFile);
  tc->add_option("--extra-relators", extra, "Words appended as relators");
  tc->add_option("--subgroup", subgroup, "Subgroup generators");
  tc->add_option("--limit", limit, "Maximum number of cosets defined");
  tc->add_flag("--permutations", permutations, "Include generator permutations");
  tc->callback([&] { action = [&] { return todd_coxeter_cmd(file, extra, subgroup, limit, permutations); }; });

  auto* rw = app.add_subcommand("rewrite", "Reidemeister-Schreier presentation of the kernel and word rewriting");
  add_alpha(rw, true);
  words = {"t^13", "t^-5*u"};
  rw->add_option("--word", words, "Words to rewrite (default t^13 and t^-5*u)");
  rw->callback([&] { action = [&] { return rewrite_cmd(alpha, words); }; });

  std::string keep;
  std::size_t budget = fp::TietzeOptions{}.budget;
  auto* fl = app.add_subcommand("fill", "Fill all meridians but one and compare with the figure-eight knot group");
  fl->add_option("--keep", keep, "Kept meridian 1..42, 'all' to scan every choice, 'none' to fill all")->required();
  fl->add_option("--budget", budget, "Tietze move budget");
  fl->add_option("--panel", targets, "Finite targets, e.g. S3 S4 S5 A5 PSL2(7)")->delimiter(',');
  fl->add_flag("--presentations", permutations, "Include simplified presentations");
  fl->callback([&] { action = [&] { return fill_cmd(keep, budget, targets, permutations); }; });

  auto* fpc = app.add_subcommand("fingerprint", "Abelianization and homomorphism counts of a presentation");
  fpc->add_option("file", file, "Presentation file")->required()->check(CLI::ExistingFile);
  fpc->add_option("--targets", targets, "Finite targets")->delimiter(',');
  fpc->callback([&] { action = [&] { return fingerprint_cmd(file, targets); }; });

  auto* cmp = app.add_subcommand("compare", "Compare the fingerprints of two presentations");
  cmp->add_option("first", file, "Presentation file")->required()->check(CLI::ExistingFile);
  cmp->add_option("second", second, "Presentation file")->required()->check(CLI::ExistingFile);
  cmp->add_option("--targets", targets, "Finite targets")->delimiter(',');
  cmp->callback([&] { action = [&] { return compare_cmd(file, second, targets); }; });

  int radius = 10;
  std::size_t max_elements = AuditOptions{}.max_elements;
  bool serial = false;
  auto* aud = app.add_subcommand("audit-geodesics", "Search a word ball for short geodesics in the kernel");
  add_alpha(aud, true);
  aud->add_option("--radius", radius, "Word-length radius")->required()->check(CLI::NonNegativeNumber);
  aud->add_option("--max-elements", max_elements, "Guard on distinct elements visited");
  aud->add_flag("--serial", serial, "Use the single-threaded reference search");
  aud->callback([&] { action = [&] { return audit_cmd(alpha, radius, max_elements, serial); }; });

  std::optional<double> sys_value, area_value, r_value;
  auto* geo = app.add_subcommand("geometry", "Area, genus and systole bounds for minimal surfaces");
  geo->add_option("--sys", sys_value, "Systole")->check(CLI::PositiveNumber);
  geo->add_option("--area", area_value, "Surface area")->check(CLI::NonNegativeNumber);
  geo->add_option("--r", r_value, "Ball radius")->check(CLI::NonNegativeNumber);
  geo->callback([&] { action = [&] { return geometry_cmd(sys_value, area_value, r_value); }; });

  auto* mc = app.add_subcommand("monodromy-check", "Validate a permutation representation of a link group");
  mc->add_option("file", file, "Monodromy file")->required()->check(CLI::ExistingFile);
  mc->callback([&] { action = [&] { return monodromy_check_cmd(file); }; });

  std::string full;
  auto* me = app.add_subcommand("monodromy-extend", "Extend a monodromy by the identity on new meridians");
  me->add_option("file", file, "Monodromy file")->required()->check(CLI::ExistingFile);
  me->add_option("--new-meridians", fresh, "Generators of the new link components")->required();
  me->add_option("--full", full, "Presentation of the larger link group")->check(CLI::ExistingFile);
  me->callback([&] { action = [&] { return monodromy_extend_cmd(file, fresh, full); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  omp_set_num_threads(jobs);
  if (!data.empty()) setenv("BIANCHI_DATA_DIR", data.c_str(), 1);

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    const CLI::App* sub = app.get_subcommands().front();
    report.command = sub->get_name();
    // Echo the raw option strings; the typed parameters were never built.
    for (const CLI::Option* o : sub->get_options()) {
      if (o->count() == 0) continue;
      std::string name = o->get_name();
      name.erase(0, name.find_first_not_of('-'));
      const auto& values = o->results();
      report.parameters[name] = values.size() == 1 ? Json(values.front()) : Json(values);
    }
    report.status = Status::fail;
    report.payload = {{"error", e.what()}};
  }
  if (timing) report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << report.to_json().dump(2) << '\n';
  return report.status == Status::pass ? 0 : 1;
}

}  // namespace bianchi::cli

int main(int argc, char** argv) { return bianchi::cli::run(argc, argv); }
