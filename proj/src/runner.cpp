#include "ghostw/runner.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "ghostw/centers.hpp"
#include "ghostw/hc.hpp"
#include "ghostw/pbw.hpp"
#include "ghostw/structure.hpp"
#include "ghostw/whittaker.hpp"

namespace ghostw {

namespace {

const std::vector<std::string> kComputeTargets{"center", "anticenter", "ghost", "casimir", "finite-w"};
const std::vector<std::string> kVerifyTargets{"grading", "pbw",     "hc", "pinczon",
                                              "theorem-a", "modules", "all"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

struct Engine {
  explicit Engine(int n) : g(n), U(g), centers(U), w(U) {}
  OspAlgebra g;
  EnvelopingAlgebra U;
  CenterSolver centers;
  WhittakerModel w;
};

nlohmann::json header(const RunConfig& c, int d) {
  return {{"schema", "ghostw-report/1"},
          {"command", c.command},
          {"target", c.target},
          {"n", c.n},
          {"max_degree", d},
          {"seed", c.seed}};
}

struct SuiteLog {
  nlohmann::json suites = nlohmann::json::array();
  std::ostringstream text;
  bool passed = true;

  void add(const std::string& name, const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
      checks.push_back(to_json(r));
      passed = passed && r.passed;
      text << (r.passed ? "PASS " : "FAIL ") << name << "/" << r.name;
      if (!r.witness.empty()) text << "  " << r.witness;
      text << "\n";
    }
    suites.push_back({{"name", name}, {"status", all_passed(results) ? "pass" : "fail"}, {"checks", checks}});
  }
};

std::vector<CheckResult> hc_checks(CenterSolver& s, int d, std::uint64_t seed) {
  return {check_casimir_central(s),    check_casimir_character(s),
          check_center_basis(s, CenterKind::center, d),
          check_hc_invariant(s, d),    check_hc_injective(s, d),
          check_hc_surjective(s, d),   check_linkage(s, d, seed)};
}

std::vector<CheckResult> whittaker_checks(Engine& e, int d, std::uint64_t seed) {
  return {check_miura_of_ghost(e.centers, e.w),
          check_filtered_dimensions(e.centers, e.w, d),
          check_parity_transport(e.centers, e.w, d),
          check_filtration_stable(e.w, std::min(d, 3)),
          check_lift_independence(e.w, 200, seed),
          check_miura_injective(e.w, d),
          check_w_associative(e.w, d, seed),
          compare_invariants_g_ge1(e.w, std::min(d, 3))};
}

std::vector<CheckResult> module_checks(Engine& e, int samples, std::uint64_t seed) {
  return {check_module_classification(e.centers, samples, seed), check_linkage(e.centers, 2 * e.g.n(), seed)};
}

RunResult verify(const RunConfig& c, int d) {
  Engine e(c.n);
  SuiteLog log;
  const std::string& t = c.target;
  const bool all = t == "all";
  if (all || t == "grading") {
    log.add("grading", structure_suite(e.g, {200, c.structure_samples, c.seed}));
  }
  if (all || t == "pbw") log.add("pbw", pbw_suite(e.U, d, c.samples, c.seed));
  if (all) log.add("centers", centers_suite(e.centers, d, c.seed));
  if (t == "hc") log.add("hc", hc_checks(e.centers, d, c.seed));
  if (t == "pinczon") log.add("pinczon", {check_ghost_square_image(e.centers), check_pinczon(e.centers)});
  nlohmann::json report = header(c, d);
  if (all || t == "theorem-a") {
    const TheoremAReport r = verify_theorem_a(e.centers, e.w, d);
    log.add("theorem-a", r.assertions);
    report["theorem_a"] = to_json(r);
  }
  if (all) log.add("whittaker", whittaker_checks(e, d, c.seed));
  if (all || t == "modules") log.add("modules", module_checks(e, c.samples, c.seed));
  report["suites"] = log.suites;
  report["status"] = log.passed ? "pass" : "fail";
  log.text << (log.passed ? "all checks passed" : "some checks FAILED") << "\n";
  return {log.passed ? 0 : 1, report, log.text.str()};
}

nlohmann::json element_json(const OspAlgebra& g, const UEAElement& a) {
  return {{"element", to_string(g, a)}, {"terms", to_json(g, a)}};
}

RunResult compute(const RunConfig& c, int d) {
  Engine e(c.n);
  nlohmann::json report = header(c, d);
  std::ostringstream text;
  const std::string& t = c.target;
  if (t == "center" || t == "anticenter") {
    const CenterBasis& b = t == "center" ? e.centers.compute_center(d) : e.centers.compute_anticenter(d);
    nlohmann::json basis = nlohmann::json::array();
    text << t << " basis, degree <= " << d << ", dimension " << b.elements.size() << "\n";
    for (const auto& z : b.elements) {
      const HCPolynomial image = hc_image(e.g, z);
      nlohmann::json j = element_json(e.g, z);
      j["hc_image"] = to_string(image);
      basis.push_back(j);
      text << "  " << to_string(e.g, z) << "\n    sigma(eta) = " << to_string(image) << "\n";
    }
    report["result"] = {{"kind", t}, {"dimension", b.elements.size()}, {"basis", basis}};
  } else if (t == "ghost") {
    const UEAElement& T = e.centers.casimir_ghost();
    const HCPolynomial image = hc_image(e.g, T);
    const UEAElement T2 = e.U.multiply(T, T);
    report["result"] = {{"T", element_json(e.g, T)},
                        {"hc_image", to_string(image)},
                        {"T_squared_hc_image", to_string(hc_image(e.g, T2))}};
    text << "T = " << to_string(e.g, T) << "\n";
    text << "sigma(eta(T)) = " << to_string(image) << "\n";
    text << "sigma(eta(T^2)) = " << to_string(hc_image(e.g, T2)) << "\n";
  } else if (t == "casimir") {
    const UEAElement& C = e.centers.casimir();
    const UEAElement& Q = e.centers.casimir_even();
    report["result"] = {{"C", element_json(e.g, C)},
                        {"C_hc_image", to_string(hc_image(e.g, C))},
                        {"C_eta", to_string(eta(e.g, C))},
                        {"Q", element_json(e.g, Q)}};
    text << "C = " << to_string(e.g, C) << "\n";
    text << "eta(C) = " << to_string(eta(e.g, C)) << "\n";
    text << "sigma(eta(C)) = " << to_string(hc_image(e.g, C)) << "\n";
    text << "Q = " << to_string(e.g, Q) << "\n";
  } else {
    const FiniteWBasis& b = e.w.finite_w_basis(d);
    nlohmann::json out = nlohmann::json::object();
    text << "finite W-algebra, degree <= " << d << ": " << b.even.size() << " even, " << b.odd.size()
         << " odd\n";
    for (const auto& [name, vecs] : {std::pair{"even", &b.even}, std::pair{"odd", &b.odd}}) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& v : *vecs) {
        const std::string miura = to_string(e.w.miura(v));
        nlohmann::json j = element_json(e.g, v.lift());
        j["miura"] = miura;
        arr.push_back(j);
        text << "  [" << name << "] " << to_string(e.g, v.lift()) << "\n    mu = " << miura << "\n";
      }
      out[name] = arr;
    }
    report["result"] = out;
  }
  return {0, report, text.str()};
}

RunResult build(const RunConfig& c, int d) {
  OspAlgebra g(c.n);
  nlohmann::json report = header(c, d);
  report["result"] = to_json(g);
  std::ostringstream text;
  text << "osp(1|" << 2 * c.n << "): dim " << g.dim() << ", dim g^f = " << centralizer_dimension(g) << "\n";
  for (const auto& b : g.basis()) {
    text << "  " << b.label << "  parity " << (b.parity == Parity::odd ? 1 : 0) << "  degree "
         << to_string(make_rational(b.doubled_degree, 2)) << "\n";
  }
  return {0, report, text.str()};
}

}  // namespace

int default_max_degree(int n) { return std::max(4, 2 * n + 1); }

void validate(const RunConfig& c) {
  if (c.n < 1) throw UsageError("--n must be a positive integer");
  if (c.max_degree && *c.max_degree < 0) throw UsageError("--max-degree must be nonnegative");
  if (c.samples < 1) throw UsageError("sample count must be positive");
  if (c.command == "build") return;
  if (c.command == "compute") {
    if (!contains(kComputeTargets, c.target)) throw UsageError("unknown compute target '" + c.target + "'");
    return;
  }
  if (c.command == "verify") {
    if (!contains(kVerifyTargets, c.target)) throw UsageError("unknown verify target '" + c.target + "'");
    if (c.target == "pinczon" && c.n != 1) throw UsageError("verify pinczon requires --n 1");
    return;
  }
  throw UsageError("unknown command '" + c.command + "'");
}

RunResult run(const RunConfig& c) {
  validate(c);
  const int d = c.max_degree.value_or(default_max_degree(c.n));
  if (c.command == "build") return build(c, d);
  if (c.command == "compute") return compute(c, d);
  return verify(c, d);
}

std::optional<int> thread_cap_from_env() {
  const char* v = std::getenv("GHOSTW_THREADS");
  if (v == nullptr) return std::nullopt;
  const std::string s(v);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || out < 1) {
    throw UsageError("GHOSTW_THREADS must be a positive integer");
  }
  return out;
}

std::string render(const nlohmann::json& report) { return report.dump(2) + "\n"; }

}  // namespace ghostw
