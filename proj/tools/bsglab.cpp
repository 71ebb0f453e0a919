// bsglab <module> <op> [flags]
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bsglab/acceptance.hpp"
#include "bsglab/annulus.hpp"
#include "bsglab/bsg.hpp"
#include "bsglab/error.hpp"
#include "bsglab/geometry.hpp"
#include "bsglab/io.hpp"
#include "bsglab/manifest.hpp"
#include "bsglab/pipeline.hpp"
#include "bsglab/rational.hpp"
#include "bsglab/search.hpp"
#include "bsglab/sumset.hpp"

using namespace bsglab;

namespace {

struct Globals {
  std::optional<uint64_t> seed;
  std::string out;
  std::string format = "json";
  std::optional<int64_t> budget;
  bool manifest = false;
};

struct Output {
  std::string text;
  std::string extension = ".json";
};

int64_t PointBudget(const Globals& g) {
  if (g.budget) return *g.budget;
  if (const char* env = std::getenv("BSGLAB_BUDGET")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw PreconditionError("BSGLAB_BUDGET must be an integer");
    }
  }
  return kDefaultAnnulusPointCap;
}

uint64_t RequireSeed(const Globals& g) {
  Require(g.seed.has_value(), "this command is stochastic and needs --seed");
  return *g.seed;
}

// A file holding a JSON set, or an inline list such as "1,2,5..9".
IntSet ParseIntSetArg(const std::string& arg) {
  if (std::filesystem::exists(arg)) return IntSetFromJson(ReadJsonFile(arg));
  std::vector<int64_t> v;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto dots = tok.find("..");
    try {
      if (dots == std::string::npos) {
        v.push_back(std::stoll(tok));
      } else {
        int64_t lo = std::stoll(tok.substr(0, dots)), hi = std::stoll(tok.substr(dots + 2));
        Require(hi - lo <= 100'000'000, "inline range too long");
        for (int64_t x = lo; x <= hi; ++x) v.push_back(x);
      }
    } catch (const std::invalid_argument&) {
      throw PreconditionError("cannot read set argument '" + arg + "'");
    }
  }
  return IntSet::FromUnsorted(std::move(v));
}

LatticeSet ParseLatticeArg(const std::string& path) {
  return LatticeSetFromJson(ReadJsonFile(path));
}

PairConstraint ParseGammaArg(const std::string& path) {
  if (path.empty()) return PairConstraint();
  return PairConstraintFromJson(ReadJsonFile(path));
}

std::vector<Rational> ParseRationalList(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(ParseRational(tok));
  }
  Require(!out.empty(), "empty epsilon grid");
  return out;
}

std::string EstimateCsv(const VolumeEstimate& v) {
  char buf[200];
  std::snprintf(buf, sizeof buf, "value,std_error,samples,seed,method\n%.17g,%.17g,%lld,%llu,%s\n",
                v.value, v.std_error, static_cast<long long>(v.samples),
                static_cast<unsigned long long>(v.seed), v.method.c_str());
  return buf;
}

Output JsonOut(const Json& j) { return {j.dump(2) + "\n", ".json"}; }

Output EstimateOut(const Globals& g, const VolumeEstimate& v) {
  if (g.format == "csv") return {EstimateCsv(v), ".csv"};
  return JsonOut(ToJson(v));
}

void RequireJson(const Globals& g) {
  Require(g.format == "json", "this command only emits JSON");
}

Json OptionParams(const CLI::App* sub) {
  Json params = Json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name().empty() || opt->get_name() == "--help") continue;
    if (opt->count() == 0 && opt->get_default_str().empty()) continue;
    std::string name = opt->get_name();
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    auto res = opt->results();
    params[name] = res.empty() ? opt->get_default_str() : res.size() == 1 ? res[0] : "";
    if (res.size() > 1) {
      Json arr = Json::array();
      for (const auto& r : res) arr.push_back(r);
      params[name] = arr;
    }
  }
  return params;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted sumsets, BSG extraction and the annulus counterexample"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  Globals g;
  auto add_globals = [&](CLI::App* s) {
    s->add_option("--seed", g.seed, "Seed for stochastic commands");
    s->add_option("--out", g.out, "Output file (or directory for bundles)");
    s->add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--budget", g.budget, "Cap on annulus lattice points (env BSGLAB_BUDGET)");
    s->add_flag("--manifest", g.manifest, "Write a run manifest next to the output");
  };

  CLI::App* chosen = nullptr;
  std::string command;
  auto op = [&](CLI::App* module, const std::string& name, const std::string& desc) {
    CLI::App* s = module->add_subcommand(name, desc);
    add_globals(s);
    s->callback([&, s, module, name] {
      chosen = s;
      command = module->get_name() + " " + name;
    });
    return s;
  };
  auto module = [&](const std::string& name, const std::string& desc) {
    CLI::App* m = app.add_subcommand(name, desc);
    m->require_subcommand(1);
    return m;
  };

  // Shared option storage.
  std::string a_arg, b_arg, gamma_arg, a_prime_arg, instance_arg, eps_grid = "", carve = "none";
  std::string eta_arg, trim_arg, lambda_arg = "1/4", epsilon_arg = "0", strategy = "greedy";
  std::string mode = "greedy", level = "quick", golden_dir;
  int d = 3;
  int64_t M = 30, c = 2, base = 0, samples = 1'000'000, trials = 100'000, C_exp = 3;
  int64_t max_steps = 100'000, witness_budget = 256, N = 0, L = 0;
  double t = 0.5, h = 0.5, floor_constant = 0, mass_budget = -1;

  // core sets
  CLI::App* sets = module("sets", "Finite set arithmetic over Z and Z^d");
  {
    auto s = op(sets, "sumset", "A + B");
    s->add_option("--a", a_arg)->required();
    s->add_option("--b", b_arg);
    s = op(sets, "restricted", "A +_Gamma B");
    s->add_option("--a", a_arg)->required();
    s->add_option("--b", b_arg);
    s->add_option("--gamma", gamma_arg)->required();
    s = op(sets, "dilate", "c . A");
    s->add_option("--a", a_arg)->required();
    s->add_option("--c", c);
    s = op(sets, "midpoint-pairs", "Ordered pairs whose midpoint lies in A");
    s->add_option("--a", a_arg)->required();
    s = op(sets, "ap-cover", "Shortest arithmetic progression containing A");
    s->add_option("--a", a_arg)->required();
    s = op(sets, "embed", "Base embedding of a lattice set into Z");
    s->add_option("--a", a_arg)->required();
    s->add_option("--base", base, "Defaults to 10 M");
    s = op(sets, "doubling", "Doubling statistics");
    s->add_option("--a", a_arg)->required();
    s->add_option("--gamma", gamma_arg);
  }

  CLI::App* bsg = module("bsg", "Extraction, duality and removal");
  {
    auto s = op(bsg, "extract", "Degree-threshold extraction A', B'");
    s->add_option("--a", a_arg)->required();
    s->add_option("--b", b_arg);
    s->add_option("--gamma", gamma_arg)->required();
    s = op(bsg, "dualize", "(A, B, Gamma) to a removal instance, or back with --instance");
    s->add_option("--a", a_arg);
    s->add_option("--b", b_arg);
    s->add_option("--gamma", gamma_arg);
    s->add_option("--instance", instance_arg);
    s = op(bsg, "solve-removal", "Delete elements until a + b = c has no solutions");
    s->add_option("--instance", instance_arg)->required();
    s->add_option("--mode", mode)->check(CLI::IsMember({"greedy", "exhaustive"}));
  }

  CLI::App* ann = module("annulus", "Discretized annulus and the counterexample");
  {
    auto spec_opts = [&](CLI::App* s) {
      s->add_option("--d", d);
      s->add_option("--M", M);
      s->add_option("--eta", eta_arg, "Defaults to 2^-d");
      s->add_option("--trim", trim_arg, "Defaults to 1 - d^-10");
    };
    auto s = op(ann, "build", "Lattice points whose cube lies in the trimmed annulus");
    spec_opts(s);
    s = op(ann, "gamma", "Midpoint-excluding pair constraint");
    s->add_option("--a", a_arg)->required();
    s->add_option("--eta", eta_arg);
    s = op(ann, "project", "Base-10M projection to Z");
    s->add_option("--a", a_arg)->required();
    s = op(ann, "interior", "Points a with a + {0,1}^d inside the set");
    s->add_option("--a", a_arg)->required();
    s = op(ann, "sandwich", "Normalized lattice count against the trimmed volume");
    spec_opts(s);
    s = op(ann, "counterexample", "Build A and Gamma and report sizes");
    spec_opts(s);
    s->add_option("--lambda", lambda_arg);
    s->add_option("--C-exp", C_exp);
    s = op(ann, "verify", "Structural properties of a projected set and its Gamma");
    s->add_option("--a", a_arg)->required();
    s->add_option("--gamma", gamma_arg)->required();
    s->add_option("--d", d);
    s = op(ann, "classify", "Split (A+A) \\ (A'+A') into the three ranges");
    s->add_option("--a", a_arg)->required();
    s->add_option("--a-prime", a_prime_arg)->required();
    s->add_option("--N", N)->required();
    s->add_option("--L", L)->required();
  }

  CLI::App* geom = module("geom", "Volumes and Monte Carlo checks");
  {
    auto s = op(geom, "ball-volume", "V_d and the crude bounds");
    s->add_option("--d", d);
    s = op(geom, "annulus-volume", "vol(S)");
    s->add_option("--d", d);
    s->add_option("--eta", eta_arg)->required();
    s = op(geom, "cap", "Cap volume by quadrature");
    s->add_option("--d", d);
    s->add_option("--height", h);
    s = op(geom, "mc-T", "Volume of {(x, y) : x, x - y, x + y in S}");
    s->add_option("--d", d);
    s->add_option("--eta", eta_arg)->required();
    s->add_option("--samples", samples);
    s = op(geom, "mc-Ry", "Volume of S cap (y - S)");
    s->add_option("--d", d);
    s->add_option("--eta", eta_arg)->required();
    s->add_option("--t", t);
    s->add_option("--samples", samples);
    s->add_option("--floor", floor_constant);
    s = op(geom, "check-lemma45", "Distance bound for nearby y with a common witness");
    s->add_option("--d", d);
    s->add_option("--eta", eta_arg)->required();
    s->add_option("--trials", trials);
    s = op(geom, "check-prop42", "Sumset deficit after carving S");
    s->add_option("--d", d);
    s->add_option("--eta", eta_arg)->required();
    s->add_option("--carve", carve, "none, radial:s, cap:h or slab:s");
    s->add_option("--samples", samples);
    s->add_option("--mass-budget", mass_budget, "Defaults to 25^-d eta^3");
    s->add_option("--witness-budget", witness_budget);
  }

  CLI::App* search = module("search", "Adversarial subset search");
  {
    auto s = op(search, "shrink", "Minimize |A'+A'| over |A'| >= (1 - eps)|A|");
    s->add_option("--a", a_arg)->required();
    s->add_option("--epsilon", epsilon_arg)->required();
    s->add_option("--strategy", strategy)
        ->check(CLI::IsMember({"exhaustive", "greedy", "local_search"}));
    s->add_option("--max-steps", max_steps);
    s = op(search, "frontier", "Margins over an epsilon grid");
    s->add_option("--a", a_arg)->required();
    s->add_option("--gamma", gamma_arg)->required();
    s->add_option("--eps-grid", eps_grid)->required();
  }

  CLI::App* pipe = module("pipeline", "End-to-end runs");
  {
    auto s = op(pipe, "counterexample", "Counterexample bundle: A, Gamma, reports, frontier");
    s->add_option("--d", d);
    s->add_option("--M", M);
    s->add_option("--eta", eta_arg);
    s->add_option("--trim", trim_arg);
    s->add_option("--lambda", lambda_arg);
    s->add_option("--C-exp", C_exp);
    s->add_option("--eps-grid", eps_grid);
  }

  CLI::App* suite = module("suite", "Acceptance suite");
  {
    auto s = op(suite, "verify", "Run criteria 1-11");
    s->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
    s->add_option("--golden", golden_dir);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto spec = [&] {
    std::optional<Rational> eta, trim;
    if (!eta_arg.empty()) eta = ParseRational(eta_arg);
    if (!trim_arg.empty()) trim = ParseRational(trim_arg);
    return AnnulusSpec::Make(d, M, eta, trim);
  };
  auto eta_value = [&] { return ToDouble(ParseRational(eta_arg)); };
  auto second_set = [&](const IntSet& a) { return b_arg.empty() ? a : ParseIntSetArg(b_arg); };

  std::map<std::string, std::function<Output()>> ops;
  ops["sets sumset"] = [&] {
    RequireJson(g);
    IntSet a = ParseIntSetArg(a_arg);
    return JsonOut(ToJson(Sumset(a, second_set(a))));
  };
  ops["sets restricted"] = [&] {
    RequireJson(g);
    IntSet a = ParseIntSetArg(a_arg), b = second_set(a);
    return JsonOut(ToJson(RestrictedSumset(a, b, ParseGammaArg(gamma_arg))));
  };
  ops["sets dilate"] = [&] {
    RequireJson(g);
    return JsonOut(ToJson(Dilate(ParseIntSetArg(a_arg), c)));
  };
  ops["sets midpoint-pairs"] = [&] {
    RequireJson(g);
    IntSet a = ParseIntSetArg(a_arg);
    return JsonOut(ToJson(PairConstraint::ForIntSets(a, a, MidpointPairs(a))));
  };
  ops["sets ap-cover"] = [&] {
    RequireJson(g);
    ApCover ap = MinimalApCover(ParseIntSetArg(a_arg));
    return JsonOut(Json{{"type", "ap_cover"}, {"start", ap.start}, {"diff", ap.diff},
                        {"length", ap.length}});
  };
  ops["sets embed"] = [&] {
    RequireJson(g);
    LatticeSet a = ParseLatticeArg(a_arg);
    return JsonOut(ToJson(FreimanEmbed(a, base > 0 ? base : 10 * a.box_radius())));
  };
  ops["sets doubling"] = [&] {
    RequireJson(g);
    IntSet a = ParseIntSetArg(a_arg);
    PairConstraint gm = ParseGammaArg(gamma_arg);
    DoublingReport r = MakeDoublingReport(a, gamma_arg.empty() ? nullptr : &gm);
    Json j{{"N", r.n}, {"sumset_size", r.sumset_size}, {"removed_pairs", r.removed_pairs},
           {"doubling", r.doubling}, {"K", r.k}, {"delta", r.delta}};
    if (r.restricted_size) j["restricted_size"] = *r.restricted_size;
    return JsonOut(j);
  };
  ops["bsg extract"] = [&] {
    RequireJson(g);
    IntSet a = ParseIntSetArg(a_arg);
    return JsonOut(ToJson(BsgExtract(a, second_set(a), ParseGammaArg(gamma_arg))));
  };
  ops["bsg dualize"] = [&] {
    RequireJson(g);
    if (!instance_arg.empty()) {
      auto [a, b, gm] = RemovalToBsg(RemovalInstanceFromJson(ReadJsonFile(instance_arg)));
      return JsonOut(Json{{"A", ToJson(a)}, {"B", ToJson(b)}, {"gamma", ToJson(gm)}});
    }
    Require(!a_arg.empty() && !gamma_arg.empty(), "dualize needs --a and --gamma, or --instance");
    IntSet a = ParseIntSetArg(a_arg);
    return JsonOut(ToJson(BsgToRemoval(a, second_set(a), ParseGammaArg(gamma_arg))));
  };
  ops["bsg solve-removal"] = [&] {
    RequireJson(g);
    RemovalInstance inst = RemovalInstanceFromJson(ReadJsonFile(instance_arg));
    return JsonOut(ToJson(SolveRemoval(
        inst, mode == "exhaustive" ? RemovalMode::kExhaustive : RemovalMode::kGreedy)));
  };
  ops["annulus build"] = [&] {
    RequireJson(g);
    AnnulusSpec s = spec();
    AnnulusBuild b = BuildAnnulusSet(s, PointBudget(g));
    Json j = ToJson(b.points);
    j["eta"] = FormatRational(s.eta);
    j["trim"] = FormatRational(s.trim);
    j["trimmed_points"] = b.trimmed;
    return JsonOut(j);
  };
  ops["annulus gamma"] = [&] {
    RequireJson(g);
    LatticeSet a = ParseLatticeArg(a_arg);
    PairConstraint gm = BuildMidpointGamma(a);
    Json j = ToJson(gm);
    double n = static_cast<double>(a.size());
    j["density"] = n > 0 ? gm.removed_count() / (n * n) : 0.0;
    if (!eta_arg.empty()) {
      double shape = std::pow(6.0, a.dim()) * std::pow(eta_value(), a.dim() / 2.0 - 1);
      j["ratio_to_shape"] = j["density"].get<double>() / shape;
    }
    return JsonOut(j);
  };
  ops["annulus project"] = [&] {
    RequireJson(g);
    return JsonOut(ToJson(ProjectToZ(ParseLatticeArg(a_arg))));
  };
  ops["annulus interior"] = [&] {
    RequireJson(g);
    return JsonOut(ToJson(Interior(ParseLatticeArg(a_arg))));
  };
  ops["annulus sandwich"] = [&] {
    RequireJson(g);
    SandwichPoint p = CheckSandwich(spec(), PointBudget(g));
    return JsonOut(Json{{"M", p.M}, {"count", p.count}, {"normalized", p.normalized},
                        {"volume", p.volume}, {"gap", p.gap}, {"upper_holds", p.upper_holds}});
  };
  ops["annulus counterexample"] = [&] {
    RequireJson(g);
    CounterexampleSpec cs;
    cs.annulus = spec();
    cs.lambda = ParseRational(lambda_arg);
    cs.C_exp = C_exp;
    return JsonOut(CounterexampleReport(BuildCounterexample(cs, PointBudget(g))));
  };
  ops["annulus verify"] = [&] {
    RequireJson(g);
    IntSet a = ParseIntSetArg(a_arg);
    return JsonOut(ToJson(VerifyProperties(a, ParseGammaArg(gamma_arg), d)));
  };
  ops["annulus classify"] = [&] {
    RequireJson(g);
    return JsonOut(ToJson(ClassifyMissingSums(ParseIntSetArg(a_arg), ParseIntSetArg(a_prime_arg),
                                              N, L)));
  };
  ops["geom ball-volume"] = [&] { return EstimateOut(g, BallVolumeEstimate(d)); };
  ops["geom annulus-volume"] = [&] { return EstimateOut(g, AnnulusVolumeEstimate(d, eta_value())); };
  ops["geom cap"] = [&] { return EstimateOut(g, CapVolumeEstimate(d, h)); };
  ops["geom mc-T"] = [&] {
    return EstimateOut(g, McVolumeT(d, eta_value(), samples, RequireSeed(g)));
  };
  ops["geom mc-Ry"] = [&] {
    return EstimateOut(g, McVolumeRy(d, eta_value(), t, samples, RequireSeed(g), floor_constant));
  };
  ops["geom check-lemma45"] = [&] {
    RequireJson(g);
    IntersectionCheck r = CheckIntersectionLemma(d, eta_value(), trials, RequireSeed(g));
    Json j = ToJson(r);
    j["seed"] = *g.seed;
    if (r.violations != 0) throw std::logic_error("distance bound violated");
    return JsonOut(j);
  };
  ops["geom check-prop42"] = [&] {
    double eta = eta_value();
    double budget = mass_budget >= 0 ? mass_budget : DefaultCarveBudget(d, eta);
    CarvedDeficitReport r = McCarvedDeficit(d, eta, Carve::Parse(carve), samples, RequireSeed(g), budget,
                                   witness_budget);
    if (g.format == "csv") return Output{EstimateCsv(r.deficit), ".csv"};
    return JsonOut(ToJson(r));
  };
  ops["search shrink"] = [&] {
    RequireJson(g);
    SearchConfig cfg;
    cfg.epsilon = ParseRational(epsilon_arg);
    cfg.strategy = ParseStrategy(strategy);
    cfg.max_steps = max_steps;
    if (cfg.strategy == Strategy::kLocalSearch) cfg.seed = RequireSeed(g);
    return JsonOut(ToJson(ShrinkSearch(ParseIntSetArg(a_arg), cfg)));
  };
  ops["search frontier"] = [&] {
    IntSet a = ParseIntSetArg(a_arg);
    FrontierResult f = FrontierProbe(a, ParseGammaArg(gamma_arg), ParseRationalList(eps_grid));
    if (g.format == "csv") return Output{FrontierCsv(f), ".csv"};
    return JsonOut(ToJson(f));
  };
  ops["pipeline counterexample"] = [&] {
    RequireJson(g);
    Require(!g.out.empty(), "pipeline needs --out DIR");
    PipelineOptions o;
    o.spec.annulus = spec();
    o.spec.lambda = ParseRational(lambda_arg);
    o.spec.C_exp = C_exp;
    o.point_cap = PointBudget(g);
    if (!eps_grid.empty()) o.eps_grid = ParseRationalList(eps_grid);
    PipelineBundle b = RunCounterexamplePipeline(o);
    auto digests = WriteBundle(b, g.out);
    Json j;
    j["out"] = g.out;
    for (const auto& [name, sha] : digests) j["sha256"][name] = sha;
    j["summary"] = b.report["counterexample"];
    j["greedy_at_epsilon"] = b.report["greedy_at_epsilon"];
    return JsonOut(j);
  };
  bool suite_failed = false;
  ops["suite verify"] = [&] {
    SuiteOptions so;
    so.level = ParseSuiteLevel(level);
    so.golden_dir = golden_dir;
    so.artifact_dir = g.out;
    std::string csv = "criterion,name,passed,seconds,detail\n";
    auto results = RunAcceptance(so, [](const CriterionResult& r) {
      std::cout << FormatResultLine(r) << std::endl;
    });
    Json arr = Json::array();
    for (const auto& r : results) {
      suite_failed = suite_failed || !r.passed;
      arr.push_back({{"criterion", r.id}, {"name", r.name}, {"passed", r.passed},
                     {"detail", r.detail}, {"data", r.data}});
    }
    // The summary goes to the artifact directory, never to stdout.
    if (!g.out.empty()) WriteTextFile(g.out + "/suite.json", Json{{"results", arr}}.dump(2) + "\n");
    return Output{};
  };

  auto t0 = std::chrono::steady_clock::now();
  try {
    Output out = ops.at(command)();
    const bool bundle = command == "pipeline counterexample" || command == "suite verify";
    if (!out.text.empty()) {
      if (g.out.empty() || bundle) {
        std::cout << out.text;
      } else {
        WriteTextFile(g.out, out.text);
      }
    }
    if (g.manifest) {
      Require(!g.out.empty(), "--manifest needs --out");
      RunManifest m;
      m.command = command;
      m.params = OptionParams(chosen);
      m.params.erase("manifest");
      m.seed = g.seed.value_or(0);
      for (const std::string& in : {a_arg, b_arg, gamma_arg, a_prime_arg, instance_arg})
        if (!in.empty() && std::filesystem::is_regular_file(in)) m.AddInput(in);
      if (bundle) {
        for (const auto& e : std::filesystem::directory_iterator(g.out))
          if (e.is_regular_file() && e.path().filename() != "manifest.json")
            m.AddOutput(e.path().string());
        std::sort(m.outputs.begin(), m.outputs.end());
      } else {
        m.AddOutput(g.out);
      }
      m.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::string path = bundle ? g.out + "/manifest.json" : g.out + ".manifest.json";
      WriteTextFile(path, ToJson(m).dump(2) + "\n");
    }
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::logic_error& e) {
    std::cerr << "assertion failed: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return suite_failed ? 1 : 0;
}
