// qgcat: fusion, modular data, braid duality, axiom suites and twists.
//
//   qgcat fusion  --type A --rank 1 --level 2
//   qgcat verify  --type G2 --level 1 --format json --out verify.json
//
// Exit status: 0 all checks passed, 1 some check failed, 2 bad configuration.
// Without --out, artifacts go to $QGCAT_OUTPUT_DIR/<command>_<type><rank>_k<level>.<ext>
// when that variable is set, and nowhere otherwise.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qgcat/braid.hpp"
#include "qgcat/json_io.hpp"
#include "qgcat/sixj.hpp"
#include "qgcat/solvers.hpp"
#include "qgcat/weak_hopf.hpp"

using namespace qgcat;
using nlohmann::json;

namespace {

struct RunConfig {
  std::string command;
  std::string type = "A";
  int rank = 0;  // 0: smallest admissible rank for the type
  int level = 1;
  int n_max = 6;
  int trials = 100;
  std::uint64_t seed = 1;
  std::string format = "pretty";
  std::string out;
};

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Result {
  json doc;
  std::vector<SuiteReport> checks;
  std::string csv;
  std::ostringstream pretty;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.ok()) return false;
    return true;
  }
};

int default_rank(LieType t) {
  switch (t) {
    case LieType::B:
    case LieType::C:
    case LieType::G2: return 2;
    case LieType::D: return 3;
    default: return 1;
  }
}

json conventions(const AlcoveCategory& cat) {
  return {{"q", "exp(i pi / (d ell)), ell = k + dual Coxeter number"},
          {"q_order", cat.q_order()},
          {"twist", "theta = q^<lambda, lambda + 2 rho>"},
          {"R_normalization", "channel scalars eps q^((c_nu - c_lambda - c_mu)/2), eps fixed by the flip at q -> 1"},
          {"coboundary_branch", "R-bar = R (monodromy)^(-1/2) with exp(-i pi e / (4 ell)) -> 1 at q -> 1"},
          {"sixj_gauge", "square-root-free q-Racah table, unit-label entries equal to 1"},
          {"cyclo_json", "{order N, coefficients over the power basis of Q(zeta_N)}"}};
}

json header(const RunConfig& cfg, const AlcoveCategory& cat) {
  return {{"command", cfg.command},
          {"type", to_string(cat.root_system().lie_type)},
          {"rank", cat.root_system().rank},
          {"level", cat.level()},
          {"ell", cat.ell()},
          {"seed", cfg.seed},
          {"conventions", conventions(cat)}};
}

json weights_json(const AlcoveCategory& cat) {
  json w = json::array();
  for (const auto& x : cat.weights()) w.push_back(x);
  return w;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void add_check(Result& r, const SuiteReport& s) {
  r.checks.push_back(s);
  r.pretty << "  " << (s.ok() ? "PASS" : "FAIL") << "  " << s.family << " (" << s.instances << " checked";
  if (!s.ok()) r.pretty << ", " << s.violations << " violations, first: " << s.first_counterexample;
  r.pretty << ")\n";
}

SuiteReport flag(const std::string& name, bool ok, const std::string& why = "") {
  return SuiteReport{name, 1, ok ? 0 : 1, ok ? "" : why};
}

SuiteReport verlinde_suite(const AlcoveCategory& cat, const ModularData& md) {
  const auto v = cat.verlinde_check(md);
  return SuiteReport{"Verlinde", v.checked, v.violations, v.failures.empty() ? "" : v.failures[0]};
}

SuiteReport modularity_suite(const ModularData& md) {
  SuiteReport s{"modularity", 2, 0, ""};
  if (!md.modular) {
    ++s.violations;
    s.first_counterexample = "S S* is not a nonzero scalar";
  }
  if (!md.st_relation) {
    if (s.violations++ == 0) s.first_counterexample = "(S T)^3 is not proportional to S^2";
  }
  return s;
}

SuiteReport coboundary_suite(const AlcoveCategory& cat) {
  SuiteReport s{"coboundary involutive and unitary"};
  for (std::size_t l = 0; l < cat.size(); ++l)
    for (const auto& pb : pair_braiding(cat, static_cast<int>(l))) {
      const auto cb = coboundary(cat, pb);
      ++s.instances;
      if ((!cb.involutive || !cb.unit_modulus) && s.violations++ == 0)
        s.first_counterexample = "lambda = " + weight_str(cat.weight(l));
    }
  return s;
}

SuiteReport duality_suite(const std::string& name, const std::vector<DualityRow>& rows) {
  SuiteReport s{name};
  for (const auto& r : rows) {
    ++s.instances;
    if (!r.duality && s.violations++ == 0)
      s.first_counterexample = "n = " + std::to_string(r.n) + ": " + std::to_string(r.braid_image_dim) +
                               " != " + std::to_string(r.centralizer_dim);
  }
  return s;
}

json duality_rows(const std::vector<DualityRow>& rows) {
  json a = json::array();
  for (const auto& r : rows)
    a.push_back({{"n", r.n},
                 {"centralizer_dim", r.centralizer_dim},
                 {"braid_image_dim", r.braid_image_dim},
                 {"duality", r.duality},
                 {"eigenvalues", r.eigenvalues}});
  return a;
}

bool is_a1(const AlcoveCategory& cat) {
  return cat.root_system().lie_type == LieType::A && cat.root_system().rank == 1;
}

void cmd_fusion(const RunConfig&, const AlcoveCategory& cat, Result& r) {
  const int n = static_cast<int>(cat.size());
  r.doc["weights"] = weights_json(cat);
  json qd = json::array(), N = json::array();
  for (int a = 0; a < n; ++a) qd.push_back(to_json(cat.qdim(a)));
  r.doc["qdims"] = qd;
  r.csv = "a,b,c,N\n";
  r.pretty << "fusion for " << to_string(cat.root_system().lie_type) << cat.root_system().rank << " at level "
           << cat.level() << " (" << n << " simple objects)\n";
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) {
      json col = json::array();
      std::string terms;
      for (int c = 0; c < n; ++c) {
        col.push_back(cat.N(a, b, c));
        if (cat.N(a, b, c)) {
          r.csv += csv_quote(weight_str(cat.weight(a))) + "," + csv_quote(weight_str(cat.weight(b))) + "," +
                   csv_quote(weight_str(cat.weight(c))) + "," + std::to_string(cat.N(a, b, c)) + "\n";
          if (!terms.empty()) terms += " + ";
          if (cat.N(a, b, c) > 1) terms += std::to_string(cat.N(a, b, c)) + " ";
          terms += weight_str(cat.weight(c));
        }
      }
      row.push_back(col);
      if (a <= b) r.pretty << "  " << weight_str(cat.weight(a)) << " x " << weight_str(cat.weight(b)) << " = " << terms << "\n";
    }
    N.push_back(row);
  }
  r.doc["N"] = N;
  add_check(r, fusion_associativity(cat));
  add_check(r, qdim_multiplicativity(cat));
}

void cmd_modular(const RunConfig&, const AlcoveCategory& cat, Result& r) {
  const auto md = cat.modular_data();
  const std::size_t n = cat.size();
  r.doc["weights"] = weights_json(cat);
  r.doc["S"] = to_json(md.S);
  json T = json::array();
  for (std::size_t i = 0; i < n; ++i) T.push_back(to_json(md.T(i, i)));
  r.doc["T"] = T;
  r.doc["global_dim_sq"] = to_json(md.global_dim_sq);
  r.doc["modular_scalar"] = to_json(md.modular_scalar);
  r.csv = "row,col,S,S_numeric\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto z = md.S(i, j).to_complex();
      auto clean = [](double x) { return std::abs(x) < 1e-12 ? 0.0 : x; };
      std::ostringstream num;
      num.precision(12);
      num << clean(z.real()) << (clean(z.imag()) < 0 ? "" : "+") << clean(z.imag()) << "i";
      r.csv += csv_quote(weight_str(cat.weight(i))) + "," + csv_quote(weight_str(cat.weight(j))) + "," +
               csv_quote(md.S(i, j).str()) + "," + num.str() + "\n";
    }
  r.pretty << "modular data, S unnormalized with S(0,0) = 1\n";
  for (std::size_t i = 0; i < n; ++i)
    r.pretty << "  theta" << weight_str(cat.weight(i)) << " = " << md.T(i, i).str() << "\n";
  add_check(r, modularity_suite(md));
  add_check(r, verlinde_suite(cat, md));
}

void cmd_duality(const RunConfig& cfg, const AlcoveCategory& cat, Result& r) {
  const auto pairs = pair_duality(cat);
  r.doc["pair_level"] = duality_rows(pairs);
  r.csv = "scope,n,centralizer_dim,braid_image_dim,duality\n";
  auto rows_csv = [&](const std::string& scope, const std::vector<DualityRow>& rows) {
    for (const auto& x : rows)
      r.csv += scope + "," + std::to_string(x.n) + "," + std::to_string(x.centralizer_dim) + "," +
               std::to_string(x.braid_image_dim) + "," + (x.duality ? "true" : "false") + "\n";
  };
  if (is_a1(cat)) {
    const auto tower = duality_report(cat, cfg.n_max);
    r.doc["tower"] = duality_rows(tower);
    rows_csv("tower", tower);
    r.pretty << "  n  centralizer  braid image\n";
    for (const auto& x : tower)
      r.pretty << "  " << x.n << "  " << x.centralizer_dim << "  " << x.braid_image_dim << "\n";
    add_check(r, duality_suite("tower duality n <= " + std::to_string(cfg.n_max), tower));
  }
  rows_csv("pair", pairs);
  add_check(r, duality_suite("pair-level duality", pairs));
}

void cmd_verify(const RunConfig& cfg, const AlcoveCategory& cat, Result& r) {
  const auto md = cat.modular_data();
  add_check(r, fusion_associativity(cat));
  add_check(r, qdim_multiplicativity(cat));
  add_check(r, verlinde_suite(cat, md));
  add_check(r, modularity_suite(md));
  add_check(r, truncation_rule(cat, cfg.n_max));
  add_check(r, duality_suite("pair-level duality", pair_duality(cat)));
  add_check(r, coboundary_suite(cat));
  if (is_a1(cat)) {
    add_check(r, duality_suite("tower duality n <= " + std::to_string(cfg.n_max), duality_report(cat, cfg.n_max)));
    const auto t = SixJTable::q_racah(cat);
    add_check(r, pentagon_suite(t));
    add_check(r, hexagon_suite(t));
    add_check(r, flag("weighted F-matrix unitarity", weighted_unitarity(t, t.values())));
    const auto rig = gauge_rigidity_experiment(cat, cfg.trials, cfg.seed);
    add_check(r, SuiteReport{"random gauges keep relations", rig.trials, rig.trials - rig.gauge_preserved, ""});
    add_check(r, SuiteReport{"random gauges keep invariants", rig.trials, rig.trials - rig.invariants_preserved, ""});
    add_check(r, SuiteReport{"perturbations break a pentagon", rig.trials, rig.trials - rig.perturbations_detected,
                             rig.undetected.empty() ? "" : rig.undetected[0]});
    add_check(r, flag("re-derivation from special triples", rig.propagation.ok(), rig.propagation.comparison.reason));

    const auto w = WeakQuasiBialgebra::build(cat);
    const auto ax = verify_weak_axioms(w, false, 2, cfg.seed);
    const std::string first = ax.failures.empty() ? "" : ax.failures[0];
    add_check(r, SuiteReport{"weak coassociativity", ax.coassociativity_checked, ax.coassociativity_failed, first});
    add_check(r, SuiteReport{"counit laws", ax.counit_checked, ax.counit_failed, first});
    add_check(r, SuiteReport{"quasi-hexagons", ax.hexagon_checked, ax.hexagon_failed, first});
    add_check(r, SuiteReport{"associator support", ax.support_checked, ax.support_failed, first});
    const auto J = random_twist(w, cfg.seed);
    add_check(r, flag("twist round trip", structurally_equal(apply_twist(apply_twist(w, J), J.inverse()), w)));
  }
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  r.doc["checks"] = checks;
  r.csv = "check,instances,violations,pass\n";
  for (const auto& c : r.checks)
    r.csv += csv_quote(c.family) + "," + std::to_string(c.instances) + "," + std::to_string(c.violations) + "," +
             (c.ok() ? "true" : "false") + "\n";
}

void cmd_twist(const RunConfig& cfg, const AlcoveCategory& cat, Result& r) {
  if (!is_a1(cat)) throw config_error("twist is available for type A rank 1 only");
  const auto w = WeakQuasiBialgebra::build(cat);
  const auto wc = apply_twist(w, coboundary_twist(w, cat));
  const auto& t = w.table();
  const int v = cat.V().front();
  SuiteReport match{"R on (lambda, V) becomes R-bar"}, unit{"twisted R blocks have modulus 1"};
  json rows = json::array();
  r.csv = "lambda,mu,nu,R_before,R_after,R_bar\n";
  r.pretty << "  pair      nu   before -> after\n";
  for (int l = 0; l <= cat.level(); ++l)
    for (const auto& pb : pair_braiding(cat, l))
      for (std::size_t c = 0; c < pb.channels.size(); ++c) {
        const int nu = pb.channels[c];
        const auto rbar = coboundary(cat, pb).rbar[c];
        for (int side = 0; side < (l == v ? 1 : 2); ++side) {
          const int a = side == 0 ? l : v, b = side == 0 ? v : l;
          const auto& before = w.symbols()[t.rvar(a, b, nu)];
          const auto& after = wc.symbols()[t.rvar(a, b, nu)];
          json row{{"lambda", a}, {"mu", b}, {"nu", nu}, {"before", to_json(before)}, {"after", to_json(after)}};
          if (b == v && a != v) {
            row["rbar"] = to_json(rbar);
            ++match.instances;
            if (after != rbar && match.violations++ == 0)
              match.first_counterexample = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
          }
          ++unit.instances;
          if (!(after * after.conj()).is_one() && unit.violations++ == 0)
            unit.first_counterexample = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
          rows.push_back(row);
          r.csv += std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(nu) + "," +
                   csv_quote(before.str()) + "," + csv_quote(after.str()) + "," +
                   (row.contains("rbar") ? csv_quote(rbar.str()) : std::string()) + "\n";
          r.pretty << "  (" << a << "," << b << ")  " << nu << "   " << before.str() << " -> " << after.str() << "\n";
        }
      }
  r.doc["blocks"] = rows;
  add_check(r, match);
  add_check(r, unit);
  const auto ax = verify_weak_axioms(wc, false, 2, cfg.seed);
  add_check(r, flag("twisted structure satisfies the weak axioms", ax.ok(), ax.failures.empty() ? "" : ax.failures[0]));
  add_check(r, flag("invariants unchanged", gauge_invariants(wc, cat) == gauge_invariants(w, cat)));
}

std::string category_name(const RunConfig& cfg) {
  return cfg.type == "G2" || cfg.type == "G" ? "G2" : cfg.type + std::to_string(cfg.rank);
}

std::string render(const RunConfig& cfg, Result& r) {
  if (cfg.format == "json") return r.doc.dump(2) + "\n";
  if (cfg.format == "csv") return r.csv;
  return r.pretty.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact fusion, braid and weak quasi-bialgebra checks at roots of unity"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Lie type: A, B, C, D, G2")->capture_default_str();
    sub->add_option("--rank", cfg.rank, "rank (default: smallest admissible)");
    sub->add_option("--level,-k", cfg.level, "level k >= 1")->capture_default_str();
    sub->add_option("--n-max", cfg.n_max, "largest tensor power")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "random trials")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--format", cfg.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_option("--out,-o", cfg.out, "output file");
  };
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"fusion", "fusion table"},
           {"modular", "S and T"},
           {"duality", "braid image versus centralizer"},
           {"verify", "every axiom suite"},
           {"twist", "R blocks before and after the coboundary twist (A1)"}})
    add_common(app.add_subcommand(name, help));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Result r;
  try {
    if (cfg.level < 1) throw config_error("level must be at least 1");
    if (cfg.n_max < 2) throw config_error("n-max must be at least 2");
    if (cfg.trials < 0) throw config_error("trials must be non-negative");
    LieType type;
    try {
      type = parse_lie_type(cfg.type);
      if (cfg.rank == 0) cfg.rank = default_rank(type);
      (void)RootSystem::build(type, cfg.rank);
    } catch (const std::invalid_argument& e) {
      throw config_error(e.what());
    }
    const auto cat = AlcoveCategory::build(RootSystem::build(type, cfg.rank), cfg.level);
    r.doc = header(cfg, cat);
    if (cfg.command == "fusion") cmd_fusion(cfg, cat, r);
    if (cfg.command == "modular") cmd_modular(cfg, cat, r);
    if (cfg.command == "duality") cmd_duality(cfg, cat, r);
    if (cfg.command == "verify") cmd_verify(cfg, cat, r);
    if (cfg.command == "twist") cmd_twist(cfg, cat, r);
  } catch (const config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const axiom_violation& e) {
    std::cerr << json{{"axiom_violation", e.what()}}.dump() << "\n";
    return 1;
  }
  r.doc["pass"] = r.pass();

  std::string path = cfg.out;
  if (path.empty()) {
    if (const char* dir = std::getenv("QGCAT_OUTPUT_DIR"); dir && *dir) {
      const std::string ext = cfg.format == "pretty" ? "txt" : cfg.format;
      path = (std::filesystem::path(dir) / (cfg.command + "_" + category_name(cfg) + "_k" +
                                            std::to_string(cfg.level) + "." + ext))
                 .string();
    }
  }
  if (!path.empty()) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << path << "\n";
      return 2;
    }
    f << render(cfg, r);
  }

  if (cfg.format != "pretty" && path.empty()) {
    std::cout << render(cfg, r);
  } else {
    std::cout << cfg.command << " " << category_name(cfg) << " level " << cfg.level << ": "
              << (r.pass() ? "PASS" : "FAIL") << "\n";
    if (cfg.format == "pretty") std::cout << r.pretty.str();
  }
  if (!r.pass()) {
    json bad = json::array();
    for (const auto& c : r.checks)
      if (!c.ok()) bad.push_back(to_json(c));
    std::cerr << json{{"failed_checks", bad}}.dump() << "\n";
    return 1;
  }
  return 0;
}
