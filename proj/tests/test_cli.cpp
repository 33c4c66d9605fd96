#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

using Json = nlohmann::json;

struct Run {
  int exit_code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BIANCHI_CLI) + " --data-dir " + BIANCHI_TEST_DATA + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* file) { return std::string(BIANCHI_TEST_DATA) + "/" + file; }

// Exit code 0 exactly when the report says pass.
Json checked(const Run& r) {
  const Json j = r.json();
  CHECK(j.contains("command"));
  CHECK(j.contains("parameters"));
  CHECK(j.contains("version"));
  CHECK(j["wall_time_s"].is_null());
  CHECK((r.exit_code == 0) == (j["status"] == "pass"));
  return j;
}

}  // namespace

TEST_CASE("relators-check and meridians-check") {
  const Json rel = checked(run("relators-check"));
  CHECK(rel["status"] == "pass");
  CHECK(rel["payload"]["relators"].size() == 8);
  const Json mer = checked(run("meridians-check"));
  CHECK(mer["status"] == "pass");
  CHECK(mer["payload"]["count"] == 42);
  CHECK(mer["payload"]["parabolic_kernel_members"] == 42);
}

TEST_CASE("systole-bound, cusp-count and geometry") {
  const Json sys = checked(run("systole-bound --alpha 3+2i"));
  CHECK(sys["payload"]["bound"].get<double>() == doctest::Approx(2 * std::acosh(5.5)));
  CHECK(sys["payload"].contains("tolerance"));
  CHECK(sys["payload"]["excludes_genus2"] == true);

  const Json cusps = checked(run("cusp-count --alpha 3+2i"));
  CHECK(cusps["payload"]["cusps"] == 42);
  CHECK(checked(run("cusp-count --alpha 1+i"))["payload"]["cusps"] == 3);

  const Json geo = checked(run("geometry --sys 4.369"));
  CHECK(geo["status"] == "pass");
  CHECK(geo["payload"]["sys"]["excludes_genus2"] == false);
  CHECK(geo["payload"].contains("tolerance"));
  CHECK(checked(run("geometry --sys 4.78"))["payload"]["sys"]["excludes_genus2"] == true);

  const Run bad = run("systole-bound --alpha 1+i");
  CHECK(bad.exit_code == 1);
  CHECK(checked(bad)["status"] == "fail");
  CHECK(bad.json()["parameters"]["alpha"] == "1+i");
}

TEST_CASE("coset tables, rewriting and fingerprints") {
  CHECK(checked(run("coset-table --alpha 3+2i"))["payload"]["table"]["cosets"] == 1092);
  const Json perms = checked(run("coset-table --alpha 1+i --permutations"));
  CHECK(perms["payload"]["table"]["permutations"].size() == 4);
  CHECK(checked(run("todd-coxeter " + data("swan.pres") + " --extra-relators 't^13' 't^-5*u'"))["payload"]["table"]["cosets"] == 1092);
  CHECK(run("todd-coxeter " + data("swan.pres") + " --limit 100").exit_code == 1);

  const Json rw = checked(run("rewrite --alpha 3+2i"));
  CHECK(rw["payload"]["schreier_generators"] == 3277);
  CHECK(rw["payload"]["relators"] == 8736);
  for (const auto& w : rw["payload"]["rewrites"]) CHECK(w["in_subgroup"] == true);

  const Json fig8 = checked(run("fingerprint " + data("fig8.pres")));
  CHECK(fig8["payload"]["fingerprint"]["abelianization"]["group"] == "Z");
  CHECK(fig8["payload"]["fingerprint"]["counts"][2]["homomorphisms"] == 600);
  CHECK(checked(run("compare " + data("fig8.pres") + " " + data("fig8.pres")))["status"] == "pass");
  const Run differ = run("compare " + data("fig8.pres") + " " + data("trefoil.pres"));
  CHECK(differ.exit_code == 1);
  CHECK(checked(differ)["status"] == "fail");
}

TEST_CASE("fill") {
  const Json kept = checked(run("fill --keep 14"));
  CHECK(kept["status"] == "pass");
  CHECK(kept["payload"]["results"][0]["matches_fig8"] == true);
  const Json none = checked(run("fill --keep none"));
  CHECK(none["status"] == "pass");
  CHECK(none["payload"]["results"][0]["abelianization"]["group"] == "0");
  CHECK(run("fill --keep 99").exit_code == 2);
}

TEST_CASE("audit-geodesics and monodromy") {
  const Json audit = checked(run("audit-geodesics --alpha 3+2i --radius 6"));
  CHECK(audit["status"] == "pass");
  CHECK(audit["payload"]["elements_visited"] == 1736);
  CHECK(audit["payload"]["tolerance"] == 1e-9);
  CHECK(run("audit-geodesics --alpha 3+2i --radius 6 --serial").json()["payload"] == audit["payload"]);

  const Json mc = checked(run("monodromy-check " + data("fig8_cyclic3.mono")));
  CHECK(mc["status"] == "pass");
  const Json me = checked(run("monodromy-extend " + data("fig8_cyclic3.mono") + " --new-meridians x"));
  CHECK(me["status"] == "pass");
  CHECK(me["payload"]["preimage_counts"] == Json::array({1, 3}));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("cusp-count --alpha 3+2j").exit_code == 2);
  CHECK(run("systole-bound").exit_code == 2);
  CHECK(run("fingerprint /nonexistent.pres").exit_code == 2);
  CHECK(run("fingerprint " + data("fig8.pres") + " --targets Q8").exit_code == 2);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  for (const std::string args : {"cusp-count --alpha 3+2i", "fill --keep 14", "audit-geodesics --alpha 3+2i --radius 7",
                                 "rewrite --alpha 3+2i"}) {
    CAPTURE(args);
    const Run a = run(args), b = run(args), c = run("--jobs 3 " + args);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
  const Json timed = run("--timing cusp-count --alpha 3+2i").json();
  CHECK(timed["wall_time_s"].is_number());
}
