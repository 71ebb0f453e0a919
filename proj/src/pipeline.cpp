#include "bsglab/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "bsglab/error.hpp"
#include "bsglab/manifest.hpp"

namespace bsglab {

namespace {

template <class F>
auto Stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw PreconditionError(std::string(name) + ": " + e.what());
  } catch (const BudgetError& e) {
    throw BudgetError(std::string(name) + ": " + e.what());
  } catch (const std::logic_error& e) {
    throw std::logic_error(std::string(name) + ": " + e.what());
  }
}

Json ExtractionSummary(const ExtractionResult& r) {
  Json j = ToJson(r);
  j.erase("A_prime");
  j.erase("B_prime");
  j["a_prime_size"] = r.a_prime.size();
  j["b_prime_size"] = r.b_prime.size();
  return j;
}

}  // namespace

std::vector<Rational> DefaultEpsGrid(const Rational& epsilon) {
  return {Rational(0), epsilon / 8, epsilon / 4, epsilon / 2, epsilon};
}

PipelineBundle RunCounterexamplePipeline(const PipelineOptions& opts) {
  PipelineBundle b;
  b.cx = Stage("counterexample", [&] { return BuildCounterexample(opts.spec, opts.point_cap); });
  const Counterexample& cx = b.cx;
  b.properties = Stage("properties", [&] {
    return VerifyProperties(cx.a0, cx.gamma0, opts.spec.annulus.d);
  });
  const Rational eps = opts.spec.epsilon();
  std::vector<Rational> grid = opts.eps_grid.empty() ? DefaultEpsGrid(eps) : opts.eps_grid;
  bool has_eps = false;
  for (const Rational& e : grid) has_eps = has_eps || e == eps;
  if (!has_eps) grid.push_back(eps);
  b.frontier = Stage("frontier", [&] {
    return FrontierProbe(cx.a, cx.gamma, grid, cx.restricted_size);
  });
  b.extraction = Stage("bsg_extract", [&] { return BsgExtract(cx.a, cx.a, cx.gamma); });

  b.greedy_removals = RemovalBudget(cx.a.size(), eps);
  int64_t min_size = cx.sumset_size;
  for (const FrontierRow& row : b.frontier.rows) {
    if (row.epsilon == eps) {
      min_size = row.min_sumset_size;
      b.greedy_margin = row.margin;
    }
  }
  b.split = Stage("classify", [&] {
    IntSet missing = b.frontier.greedy ? b.frontier.greedy->MissingAfter(b.greedy_removals)
                                       : IntSet();
    return ClassifyMissing(missing, cx.N, opts.spec.L());
  });

  Json& r = b.report;
  r["counterexample"] = CounterexampleReport(cx);
  r["properties"] = ToJson(b.properties);
  r["bsg_extract"] = ExtractionSummary(b.extraction);
  Json shrink;
  shrink["epsilon"] = FormatRational(eps);
  shrink["removals"] = b.greedy_removals;
  shrink["min_sumset_size"] = min_size;
  shrink["margin"] = b.greedy_margin;
  shrink["margin_exceeds_epsilon"] = b.greedy_margin > ToDouble(eps);
  shrink["missing"] = ToJson(b.split);
  double u_total = static_cast<double>(b.split.u1.size() + b.split.u2.size() + b.split.u3.size());
  shrink["missing_over_0_4_a0"] = u_total / (0.4 * static_cast<double>(cx.a0.size()));
  r["greedy_at_epsilon"] = shrink;
  Json fr = ToJson(b.frontier);
  r["frontier"] = fr;
  return b;
}

std::vector<std::pair<std::string, std::string>> WriteBundle(const PipelineBundle& b,
                                                             const std::string& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::pair<std::string, std::string>> digests;
  auto finish = [&](const std::string& name) {
    digests.emplace_back(name, Sha256File(dir + "/" + name));
  };
  {
    std::ofstream os(dir + "/a.json", std::ios::binary);
    WriteJson(os, b.cx.a);
    os << "\n";
  }
  finish("a.json");
  {
    std::ofstream os(dir + "/gamma.json", std::ios::binary);
    WriteJson(os, b.cx.gamma);
    os << "\n";
  }
  finish("gamma.json");
  WriteTextFile(dir + "/report.json", b.report.dump(2) + "\n");
  finish("report.json");
  WriteTextFile(dir + "/frontier.csv", FrontierCsv(b.frontier));
  finish("frontier.csv");
  return digests;
}

}  // namespace bsglab
