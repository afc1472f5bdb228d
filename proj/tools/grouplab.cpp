#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "grouplab/automorphisms.hpp"
#include "grouplab/corpus.hpp"
#include "grouplab/errors.hpp"
#include "grouplab/ff_lacunary.hpp"
#include "grouplab/group_spec.hpp"
#include "grouplab/power_maps.hpp"
#include "grouplab/psl2_aut.hpp"
#include "grouplab/wreath_socle.hpp"

using namespace grouplab;
using nlohmann::json;

namespace {

constexpr int kUsageError = 2;

json show(const GammaL2Element &x) { return {x.a, x.b, x.c, x.d, x.frob}; }

int exit_for(Status s) { return s == Status::Fail ? 1 : 0; }

struct VerifyArgs {
  std::string suite = "all";
  std::size_t max_order = 64;
  std::string report;
  std::string format = "json";
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timings = false;
};

int run_verify(const VerifyArgs &a) {
  if (!is_known_suite(a.suite)) {
    std::cerr << "unknown suite '" << a.suite << "'; expected one of:";
    for (const auto &s : suite_names())
      std::cerr << ' ' << s;
    std::cerr << '\n';
    return kUsageError;
  }
  const auto corpus = builtin_corpus(a.max_order);
  const auto reports = run_suite(a.suite, corpus, {a.seed, a.jobs, a.timings});
  if (!a.report.empty())
    emit_report(reports, a.format, a.report, a.seed);
  const auto c = count_statuses(reports);
  std::ostream &out = a.report == "-" ? std::cerr : std::cout;
  out << "suite=" << a.suite << " groups=" << corpus.size() << " pass=" << c.pass
      << " fail=" << c.fail << " marginal=" << c.marginal << " skipped=" << c.skipped
      << " info=" << c.info << '\n';
  for (const auto &r : reports)
    if (r.status == Status::Fail)
      out << "FAIL " << r.group << ' ' << r.check << ' ' << r.witness.dump() << '\n';
  return c.fail == 0 ? 0 : 1;
}

int run_compute_le(const std::string &spec, long long e) {
  const auto g = parse_group(spec);
  const auto aut = automorphism_group(g);
  const auto l = l_value(g, aut, e);
  json images = json::object();
  for (Element x : g.generators())
    images[g.name(x)] = g.name(aut.elements[l.witness](x));
  std::cout << json{{"group", spec},
                    {"order", g.order()},
                    {"exponent", e},
                    {"L", l.value},
                    {"l", double(l.value) / double(g.order())},
                    {"aut_order", aut.order()},
                    {"witness", images}}
                   .dump()
            << '\n';
  return 0;
}

int run_psl2(std::uint32_t q, bool l3, std::size_t verify, std::uint64_t seed, std::uint32_t max_q) {
  GammaL2 g(q);
  json out{{"q", q}, {"order", g.order()}, {"q_pow_11_4", std::pow(double(q), 2.75)}};
  int code = 0;
  if (l3) {
    const auto best = l3_inner_max(q, max_q);
    out["l3"] = best.value;
    out["witness"] = show(best.witness);
    out["classes"] = best.classes;
  }
  if (verify > 0) {
    const auto r = check_gammaL2_formulas(q, verify, seed);
    out["formulas"] = to_json(r);
    code = exit_for(r.status);
  }
  std::cout << out.dump() << '\n';
  return code;
}

int run_lacunary(std::uint32_t p, unsigned k, unsigned l, double eps, std::size_t trials,
                 std::uint64_t seed) {
  const auto field = std::make_shared<const FqField>(p, k);
  std::mt19937_64 rng(seed);
  const double bound = lacunary_degree_bound(field->order(), eps);
  bool all_ok = true;
  for (std::size_t i = 0; i < trials; ++i) {
    const auto f = random_lacunary(field, l, eps, rng);
    const auto q = lacunary_reduce(f, l, eps);
    const bool equal = roots(f) == roots(q);
    all_ok = all_ok && equal && double(q.degree()) <= bound;
    std::cout << json{{"q", field->order()},
                      {"degF", f.degree()},
                      {"degQ", q.degree()},
                      {"bound", bound},
                      {"rootsEqual", equal}}
                     .dump()
              << '\n';
  }
  return all_ok ? 0 : 1;
}

int run_wreath(const std::string &base_spec, unsigned n, const std::string &check,
               std::size_t trials, std::uint64_t seed) {
  CheckReport r;
  if (check == "opportune") {
    r = check_opportune(n, trials, seed);
  } else {
    const auto base = parse_group(base_spec);
    if (check == "coordinate")
      r = check_coordinate_condition(base, n, trials, seed);
    else if (check == "ncycle")
      r = check_ncycle(base, n, trials, seed);
    else if (check == "survivors")
      r = check_coset_survivors(base, trials, seed);
    else if (check == "determination")
      r = check_c_determination(base, n, cycle_perm(n), seed);
    else {
      std::cerr << "unknown wreath check '" << check
                << "'; expected opportune, coordinate, ncycle, survivors or determination\n";
      return kUsageError;
    }
  }
  r.group = check == "opportune" ? "Sym" + std::to_string(n) : base_spec + " wr S" + std::to_string(n);
  std::cout << to_json(r).dump() << '\n';
  return exit_for(r.status);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite group power-map and automorphism experiments"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto *verify = app.add_subcommand("verify", "Run a check suite over the built-in corpus");
  verify->add_option("--suite", va.suite, "lemmas, characters, thresholds, gtf, bounds, mainTheo or all");
  verify->add_option("--max-order", va.max_order, "Largest corpus group order (<= 512)");
  verify->add_option("--report", va.report, "Write the report to PATH ('-' for stdout)");
  verify->add_option("--format", va.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--seed", va.seed, "Seed recorded in the report");
  verify->add_option("--jobs", va.jobs, "Worker threads");
  verify->add_flag("--timings", va.timings, "Record elapsed_ms per check");

  auto *compute = app.add_subcommand("compute", "Compute a single invariant");
  compute->require_subcommand(1);
  std::string le_group;
  long long le_exponent = 2;
  auto *le = compute->add_subcommand("le", "L_e(G) with a maximizing automorphism");
  le->add_option("--group", le_group, "Group spec, e.g. A4 or S3xC2")->required();
  le->add_option("--exponent", le_exponent, "Exponent e");

  std::uint32_t q = 4, max_q = 512;
  bool l3 = false;
  std::size_t verify_formulas = 0;
  std::uint64_t psl2_seed = 1;
  auto *psl2 = app.add_subcommand("psl2", "PGammaL(2,q) arithmetic and L_3 counts");
  psl2->add_option("--q", q, "Prime power q <= 2^13")->required();
  psl2->add_flag("--l3", l3, "Compute L_3 over class representatives");
  psl2->add_option("--verify-formulas", verify_formulas, "Random formula trials");
  psl2->add_option("--seed", psl2_seed, "Seed for formula trials");
  psl2->add_option("--max-q", max_q, "Largest q accepted for the L_3 scan");

  std::uint32_t lp = 2;
  unsigned lk = 4, ll = 3;
  double leps = 0.2;
  std::size_t ltrials = 10;
  std::uint64_t lseed = 1;
  auto *lac = app.add_subcommand("lacunary", "Random lacunary reduction trials");
  lac->add_option("--p", lp, "Characteristic")->required();
  lac->add_option("--k", lk, "Extension degree")->required();
  lac->add_option("--l", ll, "Split exponent L")->required();
  lac->add_option("--eps", leps, "Epsilon in (0, 1/4)");
  lac->add_option("--trials", ltrials, "Number of trials");
  lac->add_option("--seed", lseed, "RNG seed");

  std::string wbase = "S3", wcheck = "coordinate";
  unsigned wn = 2;
  std::size_t wtrials = 100;
  std::uint64_t wseed = 1;
  auto *wreath = app.add_subcommand("wreath", "Wreath-product coordinate checks");
  wreath->add_option("--base", wbase, "Base group spec");
  wreath->add_option("--n", wn, "Number of coordinates")->required();
  wreath->add_option("--check", wcheck,
                     "opportune, coordinate, ncycle, survivors or determination");
  wreath->add_option("--trials", wtrials, "Number of trials");
  wreath->add_option("--seed", wseed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*verify)
      return run_verify(va);
    if (*le)
      return run_compute_le(le_group, le_exponent);
    if (*psl2)
      return run_psl2(q, l3, verify_formulas, psl2_seed, max_q);
    if (*lac)
      return run_lacunary(lp, lk, ll, leps, ltrials, lseed);
    if (*wreath)
      return run_wreath(wbase, wn, wcheck, wtrials, wseed);
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
