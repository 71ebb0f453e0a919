#include "bsglab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <boost/random/uniform_int_distribution.hpp>

#include "bsglab/annulus.hpp"
#include "bsglab/bsg.hpp"
#include "bsglab/error.hpp"
#include "bsglab/geometry.hpp"
#include "bsglab/manifest.hpp"
#include "bsglab/pipeline.hpp"
#include "bsglab/sumset.hpp"

#ifndef BSGLAB_GOLDEN_DIR
#define BSGLAB_GOLDEN_DIR "tests/golden"
#endif

namespace bsglab {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string Fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  int64_t Int(int64_t lo, int64_t hi) {
    return boost::random::uniform_int_distribution<int64_t>(lo, hi)(g_);
  }

 private:
  std::mt19937_64 g_;
};

IntSet RandomIntSet(Rng& rng, int64_t size, int64_t lo, int64_t hi) {
  std::set<int64_t> s;
  while (static_cast<int64_t>(s.size()) < size) s.insert(rng.Int(lo, hi));
  return IntSet::FromSorted({s.begin(), s.end()});
}

// Either a scattered set or a union of a few intervals, so that both the
// short and the long run kernels are exercised.
IntSet RandomMixedSet(Rng& rng, int64_t size) {
  if (size == 0) return IntSet();
  if (rng.Int(0, 2) == 0) {
    int64_t span = std::max<int64_t>(size, rng.Int(size, 4 * size + 10));
    return RandomIntSet(rng, size, -span / 2, span - span / 2);
  }
  if (rng.Int(0, 1) == 0) {
    int64_t lo = rng.Int(-100, 100);
    std::vector<int64_t> v;
    for (int64_t i = 0; i < size; ++i) v.push_back(lo + i);
    return IntSet::FromSorted(v);
  }
  return RandomIntSet(rng, size, -5000, 5000);
}

std::vector<IndexPair> RandomRemoved(Rng& rng, int64_t na, int64_t nb, int64_t count) {
  std::set<IndexPair> s;
  count = std::min(count, na * nb);
  int mode = static_cast<int>(rng.Int(0, 2));
  if (mode == 1 && na > 0 && nb > 0) {
    // Whole rows first.
    for (int64_t i = rng.Int(0, na - 1); static_cast<int64_t>(s.size()) < count; i = (i + 1) % na)
      for (int64_t j = 0; j < nb && static_cast<int64_t>(s.size()) < count; ++j) s.insert({i, j});
  } else if (mode == 2 && na > 0 && nb > 0) {
    // A corner block.
    for (int64_t i = na - 1; i >= 0 && static_cast<int64_t>(s.size()) < count; --i)
      for (int64_t j = nb - 1; j >= 0 && static_cast<int64_t>(s.size()) < count; --j)
        s.insert({i, j});
  }
  while (static_cast<int64_t>(s.size()) < count) s.insert({rng.Int(0, na - 1), rng.Int(0, nb - 1)});
  return {s.begin(), s.end()};
}

std::set<int64_t> BruteRestricted(const IntSet& a, const IntSet& b,
                                  const std::vector<IndexPair>& removed) {
  std::set<IndexPair> rem(removed.begin(), removed.end());
  std::vector<int64_t> ea = a.elements(), eb = b.elements();
  std::set<int64_t> out;
  for (size_t i = 0; i < ea.size(); ++i)
    for (size_t j = 0; j < eb.size(); ++j)
      if (!rem.count({static_cast<int64_t>(i), static_cast<int64_t>(j)})) out.insert(ea[i] + eb[j]);
  return out;
}

bool SameSet(const IntSet& a, const std::set<int64_t>& b) {
  return a.elements() == std::vector<int64_t>(b.begin(), b.end());
}

// State shared across criteria.
struct Context {
  SuiteOptions opts;
  fs::path artifacts;
  bool temp_artifacts = false;
  Json golden;
  std::map<std::pair<int, int64_t>, LatticeSet> lattices;
  std::optional<PipelineBundle> pipeline;
  std::vector<std::pair<std::string, std::string>> pipeline_digests;
  Clock::time_point start = Clock::now();

  bool Full() const { return opts.level == SuiteLevel::kFull; }

  const LatticeSet& Lattice(int d, int64_t M) {
    auto key = std::make_pair(d, M);
    auto it = lattices.find(key);
    if (it == lattices.end())
      it = lattices.emplace(key, BuildAnnulusSet(AnnulusSpec::Make(d, M)).points).first;
    return it->second;
  }
};

CriterionResult C1(Context&) {
  CriterionResult r{1, "restricted sumset oracle", false, "", 0, Json::object()};
  Rng rng(101);
  int mismatches = 0;
  for (int t = 0; t < 200; ++t) {
    IntSet a = RandomMixedSet(rng, rng.Int(0, 60));
    IntSet b = rng.Int(0, 3) == 0 ? a : RandomMixedSet(rng, rng.Int(0, 60));
    int64_t total = a.size() * b.size();
    auto removed = RandomRemoved(rng, a.size(), b.size(), total == 0 ? 0 : rng.Int(0, total));
    auto g = PairConstraint::ForIntSets(a, b, removed);
    if (!SameSet(RestrictedSumset(a, b, g), BruteRestricted(a, b, removed))) ++mismatches;
  }
  r.passed = mismatches == 0;
  r.detail = "200 instances, " + std::to_string(mismatches) + " mismatches";
  r.data["mismatches"] = mismatches;
  return r;
}

CriterionResult C2(Context&) {
  CriterionResult r{2, "near-extremal example", false, "", 0, Json::object()};
  IntSet a = Union(IntSet::Interval(1, 900), IntSet::Interval(1100, 1200));
  std::vector<IndexPair> removed;
  int64_t top = a.index_of(1100);
  for (int64_t i = top; i < a.size(); ++i)
    for (int64_t j = top; j < a.size(); ++j) removed.push_back({i, j});
  auto g = PairConstraint::ForIntSets(a, a, removed);
  int64_t size = RestrictedSumset(a, a, g).size();
  r.passed = size == 2099;
  r.detail = "|A +_G A| = " + std::to_string(size) + " (expected 2099 = 2.1N - 1)";
  r.data["restricted_size"] = size;
  return r;
}

CriterionResult C3(Context&) {
  CriterionResult r{3, "bsg extraction bounds", false, "", 0, Json::object()};
  Rng rng(303);
  int violations = 0;
  double worst = 0;
  for (int t = 0; t < 500; ++t) {
    int64_t n = rng.Int(1, 60);
    IntSet a = RandomMixedSet(rng, n);
    IntSet b = rng.Int(0, 2) == 0 ? a : RandomMixedSet(rng, n);
    int64_t max_removed = (n * n - 1) / 4;  // 4 r < n^2
    auto removed = RandomRemoved(rng, n, n, rng.Int(0, max_removed));
    auto g = PairConstraint::ForIntSets(a, b, removed);
    ExtractionResult e = BsgExtract(a, b, g);
    double floor = (1 - std::sqrt(e.delta)) * n;
    bool ok = e.sizes_hold && e.bound_holds && e.a_prime.size() >= floor - 1e-9 &&
              e.b_prime.size() >= floor - 1e-9 && IsSubset(e.a_prime, a) && IsSubset(e.b_prime, b);
    if (!ok) ++violations;
    if (e.bound > 0) worst = std::max(worst, e.extracted_sumset_size / e.bound);
  }
  r.passed = violations == 0;
  r.detail = "500 instances, " + std::to_string(violations) + " violations, max |A'+B'|/bound " +
             Fmt("%.4f", worst);
  r.data["violations"] = violations;
  r.data["max_ratio"] = worst;
  return r;
}

CriterionResult C4(Context&) {
  CriterionResult r{4, "removal duality", false, "", 0, Json::object()};
  Rng rng(404);
  int violations = 0;
  for (int t = 0; t < 200; ++t) {
    IntSet a = RandomMixedSet(rng, rng.Int(1, 40));
    IntSet b = RandomMixedSet(rng, rng.Int(1, 40));
    auto removed = RandomRemoved(rng, a.size(), b.size(), rng.Int(0, a.size() * b.size() / 3));
    auto g = PairConstraint::ForIntSets(a, b, removed);
    RemovalInstance inst = BsgToRemoval(a, b, g);
    auto [a2, b2, g2] = RemovalToBsg(inst);
    std::set<IndexPair> old_removed(removed.begin(), removed.end());
    bool superset = std::all_of(g2.removed().begin(), g2.removed().end(),
                                [&](const IndexPair& p) { return old_removed.count(p) > 0; });
    IntSet r1 = RestrictedSumset(a, b, g), r2 = RestrictedSumset(a2, b2, g2);
    bool ok = a2 == a && b2 == b && superset && r1 == r2 &&
              Intersection(r1, inst.c).empty() && Intersection(r2, inst.c).empty();
    if (!ok) ++violations;
  }
  r.passed = violations == 0;
  r.detail = "200 round trips, " + std::to_string(violations) + " violations";
  r.data["violations"] = violations;
  return r;
}

CriterionResult C5(Context&) {
  CriterionResult r{5, "Freiman embedding", false, "", 0, Json::object()};
  Rng rng(505);
  int violations = 0;
  int64_t quadruples = 0;
  for (int t = 0; t < 20; ++t) {
    int d = static_cast<int>(rng.Int(1, 4));
    int64_t M = rng.Int(1, 6);
    int64_t n = rng.Int(1, 15);
    std::vector<std::vector<int64_t>> pts;
    for (int64_t i = 0; i < n; ++i) {
      std::vector<int64_t> p(d);
      for (auto& c : p) c = rng.Int(-M, M);
      pts.push_back(p);
    }
    LatticeSet a = LatticeSet::FromPoints(d, M, pts);
    const int64_t base = 10 * M;
    std::vector<int64_t> img(a.size());
    for (int64_t i = 0; i < a.size(); ++i) img[i] = FreimanImage(a.point(i), base);
    IntSet embedded = FreimanEmbed(a, base);
    bool ok = embedded.size() == a.size();
    const int64_t m = a.size();
    for (int64_t i = 0; i < m; ++i)
      for (int64_t j = 0; j < m; ++j)
        for (int64_t k = 0; k < m; ++k)
          for (int64_t l = 0; l < m; ++l) {
            ++quadruples;
            bool vec = true;
            for (int c = 0; c < d; ++c)
              vec = vec && a.point(i)[c] + a.point(j)[c] == a.point(k)[c] + a.point(l)[c];
            if (vec != (img[i] + img[j] == img[k] + img[l])) ok = false;
          }
    ok = ok && Sumset(embedded, embedded).size() == LatticeSumset(a, a).size();
    if (!ok) ++violations;
  }
  r.passed = violations == 0;
  r.detail = "20 sets, " + std::to_string(quadruples) + " quadruples, " +
             std::to_string(violations) + " violations";
  r.data["violations"] = violations;
  return r;
}

CriterionResult C6(Context& ctx) {
  CriterionResult r{6, "doubled points missing", false, "", 0, Json::object()};
  int violations = 0;
  std::string detail;
  for (int d : {2, 3}) {
    for (int64_t M : {20, 30}) {
      const LatticeSet& a = ctx.Lattice(d, M);
      PairConstraint g = BuildMidpointGamma(a);
      LatticeSet s = LatticeSumset(a, a);
      LatticeSet rs = LatticeRestrictedSumset(a, a, g);
      LatticeSet doubled = LatticeDilate(a, 2);
      int64_t bad = 0;
      for (int64_t i = 0; i < doubled.size(); ++i) {
        auto p = doubled.point(i);
        if (!s.contains(p) || rs.contains(p)) ++bad;
      }
      violations += static_cast<int>(bad);
      detail += "d=" + std::to_string(d) + ",M=" + std::to_string(M) + ":|A|=" +
                std::to_string(a.size()) + " ";
    }
  }
  r.passed = violations == 0;
  r.detail = detail + "violations " + std::to_string(violations);
  r.data["violations"] = violations;
  return r;
}

CriterionResult C7(Context& ctx) {
  CriterionResult r{7, "lattice count sandwich", false, "", 0, Json::object()};
  bool upper = true, monotone = true;
  std::string table = "d,M,count,normalized,volume,gap\n";
  for (int d : {2, 3}) {
    double prev_gap = INFINITY;
    for (int64_t M : {20, 40, 80}) {
      SandwichPoint p = CheckSandwich(AnnulusSpec::Make(d, M));
      upper = upper && p.upper_holds;
      if (d == 3) {
        monotone = monotone && p.gap < prev_gap;
        prev_gap = p.gap;
      }
      char buf[160];
      std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%.12g,%.12g,%.12g\n", d,
                    static_cast<long long>(M), static_cast<long long>(p.count), p.normalized,
                    p.volume, p.gap);
      table += buf;
      r.data["points"].push_back({{"d", d}, {"M", M}, {"gap", p.gap}});
    }
  }
  WriteTextFile((ctx.artifacts / "sandwich.csv").string(), table);
  r.passed = upper && monotone;
  r.detail = std::string("upper bound ") + (upper ? "holds" : "FAILS") + ", d=3 gap " +
             (monotone ? "decreasing" : "NOT decreasing");
  return r;
}

CriterionResult C8(Context& ctx) {
  CriterionResult r{8, "midpoint pair density", false, "", 0, Json::object()};
  const LatticeSet& a = ctx.Lattice(3, 30);
  int64_t pairs = static_cast<int64_t>(MidpointPairs(a).size());
  double n = static_cast<double>(a.size());
  double density = pairs / (n * n);
  double shape = std::pow(6.0, 3) * std::pow(1.0 / 8, 0.5);
  auto gold = ctx.golden.value("annulus_d3_M30", Json::object());
  bool golden_ok = gold.value("points", int64_t{-1}) == a.size() &&
                   gold.value("midpoint_pairs", int64_t{-1}) == pairs;
  r.passed = density < 0.1 && golden_ok;
  r.detail = "|A|=" + std::to_string(a.size()) + " pairs=" + std::to_string(pairs) +
             " density " + Fmt("%.6g", density) + " ratio to 6^d eta^(d/2-1) " +
             Fmt("%.4g", density / shape) + (golden_ok ? "" : " golden MISMATCH");
  r.data["density"] = density;
  r.data["ratio"] = density / shape;
  return r;
}

CriterionResult C9(Context& ctx) {
  CriterionResult r{9, "geometry cross-validation", false, "", 0, Json::object()};
  const int64_t n_vol = ctx.Full() ? 2'000'000 : 500'000;
  const int64_t n_sum = ctx.Full() ? 400'000 : 100'000;
  struct Row {
    std::string name;
    double mc, se, oracle;
  };
  std::vector<Row> rows;
  uint64_t seed = 900;
  for (double eta : {0.25, 0.5, 0.125}) {
    VolumeEstimate v = McVolumeT(2, eta, n_vol, ++seed);
    rows.push_back({"T eta=" + Fmt("%g", eta), v.value, v.std_error, OracleVolumeT2(eta)});
  }
  for (auto [eta, t] : std::vector<std::pair<double, double>>{
           {0.25, 0.5}, {0.25, 1.0}, {0.125, 0.25}, {0.25, 2.0}}) {
    VolumeEstimate v = McVolumeRy(2, eta, t, n_vol, ++seed);
    double oracle = t == 2.0 ? AnnulusVolume(2, eta) : OracleVolumeRy2(eta, t);
    rows.push_back({"Ry eta=" + Fmt("%g", eta) + " t=" + Fmt("%g", t), v.value, v.std_error,
                    oracle});
  }
  for (const char* spec : {"cap:0.02", "slab:0.02", "radial:0.05"}) {
    Carve c = Carve::Parse(spec);
    CarvedDeficitReport p = McCarvedDeficit(2, 0.25, c, n_sum, ++seed, 0.1);
    rows.push_back({std::string("deficit ") + spec, p.deficit.value, p.deficit.std_error,
                    OracleDeficit2(0.25, c)});
  }
  int bad = 0;
  std::string table = "config,estimate,std_error,oracle,z\n";
  for (const Row& row : rows) {
    double diff = std::abs(row.mc - row.oracle);
    bool ok = diff <= 3 * row.se + 1e-12 * std::max(1.0, std::abs(row.oracle));
    if (!ok) ++bad;
    double z = row.se > 0 ? diff / row.se : 0;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s,%.12g,%.6g,%.12g,%.3f\n", row.name.c_str(), row.mc, row.se,
                  row.oracle, z);
    table += buf;
  }
  WriteTextFile((ctx.artifacts / "geometry_crosscheck.csv").string(), table);
  IntersectionCheck lemma = CheckIntersectionLemma(3, 0.125, 100'000, 45);
  bool crude = true;
  for (int d = 1; d <= 64; ++d) crude = crude && CrudeBallBoundsHold(d);
  r.passed = bad == 0 && lemma.violations == 0 && lemma.witnesses > 0 && crude;
  r.detail = std::to_string(rows.size() - bad) + "/" + std::to_string(rows.size()) +
             " within 3 se; intersection check " + std::to_string(lemma.trials) + " trials, " +
             std::to_string(lemma.witnesses) + " witnesses, " +
             std::to_string(lemma.violations) + " violations; V_d bounds " +
             (crude ? "hold" : "FAIL");
  r.data["outside_3se"] = bad;
  r.data["lemma"] = ToJson(lemma);
  return r;
}

PipelineOptions ReferencePipeline() {
  PipelineOptions o;
  o.spec.lambda = Rational(1, 4);
  o.spec.annulus = AnnulusSpec::Make(3, 30);
  o.spec.C_exp = 3;
  return o;
}

CriterionResult C10(Context& ctx) {
  CriterionResult r{10, "counterexample frontier", false, "", 0, Json::object()};
  ctx.pipeline = RunCounterexamplePipeline(ReferencePipeline());
  const PipelineBundle& b = *ctx.pipeline;
  ctx.pipeline_digests = WriteBundle(b, (ctx.artifacts / "bundle").string());
  WriteTextFile((ctx.artifacts / "frontier.csv").string(), FrontierCsv(b.frontier));
  std::string props = "property,value\n";
  const PropertyReport& p = b.properties;
  props += "interval_ratio," + Fmt("%.12g", p.interval_ratio) + "\n";
  props += "doubling," + Fmt("%.12g", p.doubling) + "\n";
  props += "doubling_over_4_pow_d," + Fmt("%.12g", p.doubling_over_4d) + "\n";
  props += std::string("doubles_missing,") + (p.doubles_missing ? "1" : "0") + "\n";
  props += "shrink_min_sumset," + std::to_string(p.shrink_min_sumset) + "\n";
  props += "min_neighbor_fraction," + Fmt("%.12g", p.min_neighbor_fraction) + "\n";
  WriteTextFile((ctx.artifacts / "property_ratios.csv").string(), props);

  const Counterexample& cx = b.cx;
  bool floor_ok = cx.restricted_size <= cx.sumset_size - cx.missing_floor;
  bool ok = floor_ok && !b.frontier.rows.empty() && p.doubles_missing &&
            b.split.anomalies.empty() && b.extraction.sizes_hold && b.extraction.bound_holds;
  r.passed = ok;
  r.detail = "|A+A|-|A+_G A| = " + std::to_string(cx.sumset_size - cx.restricted_size) +
             " >= floor " + std::to_string(cx.missing_floor) + (floor_ok ? "" : " FAILS") +
             "; greedy margin at eps=" + FormatRational(cx.spec.epsilon()) + " is " +
             Fmt("%.6g", b.greedy_margin) + "; " + std::to_string(b.frontier.rows.size()) +
             " frontier rows";
  r.data["greedy_margin"] = b.greedy_margin;
  return r;
}

CriterionResult C11(Context& ctx) {
  CriterionResult r{11, "determinism", false, "", 0, Json::object()};
  std::vector<std::string> failures;
  auto twice = [&](const std::string& name, const std::function<Json()>& f) {
    if (f().dump() != f().dump()) failures.push_back(name);
  };
  twice("mc-T", [] { return ToJson(McVolumeT(3, 0.125, 200'000, 7)); });
  twice("mc-Ry", [] { return ToJson(McVolumeRy(3, 0.125, 0.5, 200'000, 8)); });
  twice("check-lemma45", [] { return ToJson(CheckIntersectionLemma(3, 0.125, 20'000, 9)); });
  twice("check-prop42",
        [] { return ToJson(McCarvedDeficit(2, 0.25, Carve::Parse("cap:0.02"), 50'000, 10, 0.1)); });
  RunManifest m1, m2;
  m1.command = m2.command = "geom mc-T";
  m1.params = m2.params = Json{{"d", 3}, {"eta", "1/8"}, {"samples", 200000}};
  m1.seed = m2.seed = 7;
  if (m1.Key() != m2.Key()) failures.push_back("manifest key");

  auto gold = ctx.golden.value("pipeline_d3_M30_lambda_1_4", Json::object());
  for (const auto& [name, digest] : ctx.pipeline_digests)
    if (gold.value(name, std::string()) != digest) failures.push_back("golden " + name);
  if (ctx.pipeline_digests.empty()) failures.push_back("pipeline bundle missing");

  if (ctx.Full()) {
    PipelineBundle again = RunCounterexamplePipeline(ReferencePipeline());
    auto digests = WriteBundle(again, (ctx.artifacts / "bundle_rerun").string());
    if (digests != ctx.pipeline_digests) failures.push_back("pipeline rerun");
  }
  double total = Since(ctx.start);
  if (total > 1800) failures.push_back("suite time");
  r.passed = failures.empty();
  std::string list;
  for (const auto& f : failures) list += (list.empty() ? "" : ", ") + f;
  r.detail = (failures.empty() ? std::string("identical reruns and golden digests")
                               : "mismatch: " + list) +
             "; suite time " + Fmt("%.1f", total) + " s";
  return r;
}

}  // namespace

SuiteLevel ParseSuiteLevel(const std::string& name) {
  if (name == "quick") return SuiteLevel::kQuick;
  if (name == "full") return SuiteLevel::kFull;
  throw PreconditionError("level must be quick or full");
}

std::string DefaultGoldenDir() { return BSGLAB_GOLDEN_DIR; }

std::vector<CriterionResult> RunAcceptance(
    const SuiteOptions& opts, const std::function<void(const CriterionResult&)>& on_result) {
  Context ctx;
  ctx.opts = opts;
  if (opts.artifact_dir.empty()) {
    ctx.artifacts = fs::temp_directory_path() /
                    ("bsglab_suite_" + std::to_string(
                                           Clock::now().time_since_epoch().count()));
    ctx.temp_artifacts = true;
  } else {
    ctx.artifacts = opts.artifact_dir;
  }
  fs::create_directories(ctx.artifacts);
  std::string golden_dir = opts.golden_dir.empty() ? DefaultGoldenDir() : opts.golden_dir;
  try {
    ctx.golden = ReadJsonFile(golden_dir + "/reference.json");
  } catch (const std::exception&) {
    ctx.golden = Json::object();
  }

  using Fn = CriterionResult (*)(Context&);
  const std::vector<std::pair<Fn, double>> criteria = {
      {C1, 5}, {C2, 1}, {C3, 30}, {C4, 0}, {C5, 60}, {C6, 0},
      {C7, 0}, {C8, 0}, {C9, 0}, {C10, 0}, {C11, 0}};
  std::vector<CriterionResult> results;
  for (size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = Clock::now();
    CriterionResult r;
    try {
      r = criteria[i].first(ctx);
    } catch (const std::exception& e) {
      r.id = static_cast<int>(i + 1);
      r.name = "criterion " + std::to_string(i + 1);
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = Since(t0);
    double limit = criteria[i].second;
    if (limit > 0 && r.seconds > limit) {
      r.passed = false;
      r.detail += "; exceeded " + Fmt("%.0f", limit) + " s";
    }
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  if (ctx.temp_artifacts) {
    std::error_code ec;
    fs::remove_all(ctx.artifacts, ec);
  }
  return results;
}

std::string FormatResultLine(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %2d  ", r.passed ? "PASS" : "FAIL", r.id);
  return std::string(buf) + r.name + "  (" + r.detail + "; " + Fmt("%.2f", r.seconds) + " s)";
}

}  // namespace bsglab
