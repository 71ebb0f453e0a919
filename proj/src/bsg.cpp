#include "bsglab/bsg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/integer.hpp>

#include "bsglab/error.hpp"
#include "bsglab/sumset.hpp"

namespace bsglab {

using boost::multiprecision::cpp_int;

Group Group::Cyclic(int64_t m) {
  Require(m >= 1, "cyclic group order must be positive");
  Group g;
  g.kind = Kind::kCyclic;
  g.modulus = m;
  return g;
}

Group Group::VectorSpace(int64_t p, int n) {
  Require(p >= 2 && n >= 1, "vector space needs p >= 2 and n >= 1");
  for (int64_t q = 2; q * q <= p; ++q) Require(p % q != 0, "F_p^n needs p prime");
  Group g;
  g.kind = Kind::kVectorSpace;
  g.prime = p;
  g.exponent = n;
  double order = std::pow(static_cast<double>(p), n);
  Require(order < 4e18, "F_p^n encoding does not fit in 64 bits");
  return g;
}

int64_t Group::Order() const {
  switch (kind) {
    case Kind::kIntegers:
      return 0;
    case Kind::kCyclic:
      return modulus;
    case Kind::kVectorSpace: {
      int64_t o = 1;
      for (int i = 0; i < exponent; ++i) o *= prime;
      return o;
    }
  }
  return 0;
}

bool Group::IsValid(int64_t x) const {
  if (kind == Kind::kIntegers) return true;
  return x >= 0 && x < Order();
}

int64_t Group::Add(int64_t x, int64_t y) const {
  switch (kind) {
    case Kind::kIntegers:
      return x + y;
    case Kind::kCyclic:
      return (x + y) % modulus;
    case Kind::kVectorSpace: {
      int64_t out = 0, place = 1;
      for (int i = 0; i < exponent; ++i) {
        out += ((x % prime + y % prime) % prime) * place;
        x /= prime;
        y /= prime;
        place *= prime;
      }
      return out;
    }
  }
  return 0;
}

std::string Group::Name() const {
  switch (kind) {
    case Kind::kIntegers:
      return "integers";
    case Kind::kCyclic:
      return "cyclic(" + std::to_string(modulus) + ")";
    case Kind::kVectorSpace:
      return "vector_space(" + std::to_string(prime) + "," + std::to_string(exponent) + ")";
  }
  return "";
}

namespace {

void CheckEncodings(const RemovalInstance& inst) {
  for (const IntSet* s : {&inst.a, &inst.b, &inst.c}) {
    if (s->empty()) continue;
    Require(inst.group.IsValid(s->min()) && inst.group.IsValid(s->max()),
            "element is not a valid encoding for " + inst.group.Name());
  }
}

}  // namespace

std::vector<std::array<int64_t, 3>> Solutions(const RemovalInstance& inst) {
  CheckEncodings(inst);
  std::vector<std::array<int64_t, 3>> out;
  if (inst.c.empty()) return out;
  RequireBudget(static_cast<double>(inst.a.size()) * inst.b.size() <= kPairWorkLimit,
                "solution enumeration exceeds the pair budget");
  for (int64_t i = 0; i < inst.a.size(); ++i) {
    int64_t x = inst.a.at(i);
    for (int64_t j = 0; j < inst.b.size(); ++j) {
      int64_t k = inst.c.index_of(inst.group.Add(x, inst.b.at(j)));
      if (k >= 0) out.push_back({i, j, k});
    }
  }
  return out;
}

int64_t SolutionCount(const RemovalInstance& inst) {
  if (inst.group.kind == Group::Kind::kIntegers) {
    // r(c) summed over C without listing the triples.
    if (inst.a.empty() || inst.b.empty() || inst.c.empty()) return 0;
    IntSet sums = Intersection(Sumset(inst.a, inst.b), inst.c);
    int64_t total = 0;
    sums.for_each([&](int64_t s) {
      for (const Run& r : inst.a.runs()) total += inst.b.count_in(s - r.hi, s - r.lo);
    });
    return total;
  }
  return static_cast<int64_t>(Solutions(inst).size());
}

ExtractionResult BsgExtract(const IntSet& a, const IntSet& b, const PairConstraint& g) {
  g.CheckReferences(a, b);
  const int64_t n = a.size();
  Require(n >= 1 && b.size() == n, "extraction needs |A| = |B| = N >= 1");
  const int64_t r = g.removed_count();
  Require(cpp_int(4) * r < cpp_int(n) * n,
          "removed-pair density must be below 1/4");
  ExtractionResult out;
  out.n = n;
  out.removed_pairs = r;
  int64_t root = static_cast<int64_t>(boost::multiprecision::sqrt(cpp_int(r)));
  out.min_degree = n - root;
  out.delta = g.density();
  out.threshold = (1.0 - std::sqrt(out.delta)) * static_cast<double>(n);

  // An element is dropped when it lies in more than isqrt(R) removed pairs.
  auto keep = [&](const IntSet& s, const std::vector<IndexPair>& counts) {
    std::vector<int64_t> drop;
    for (const auto& [idx, c] : counts)
      if (c > root) drop.push_back(s.at(idx));
    return Difference(s, IntSet::FromSorted(drop));
  };
  out.a_prime = keep(a, g.RowCounts());
  out.b_prime = keep(b, g.ColumnCounts());
  out.sizes_hold = out.a_prime.size() >= out.min_degree &&
                   out.b_prime.size() >= out.min_degree;

  out.restricted_size = RestrictedSumset(a, b, g).size();
  out.k = static_cast<double>(out.restricted_size) / static_cast<double>(n);
  out.extracted_sumset_size = Sumset(out.a_prime, out.b_prime).size();
  double shrink = 1.0 - 2.0 * std::sqrt(out.delta);
  out.bound = out.k * out.k * out.k * static_cast<double>(n) / (shrink * shrink);

  // X (N - 2 sqrt R)^2 <= S^3, with X = |A'+B'| and S = |A +_Gamma B|.
  cpp_int x = out.extracted_sumset_size, s = out.restricted_size, nn = n, rr = r;
  cpp_int lhs = x * (nn * nn + 4 * rr) - s * s * s;
  out.bound_holds = lhs <= 0 || lhs * lhs <= 16 * x * x * nn * nn * rr;
  return out;
}

RemovalInstance BsgToRemoval(const IntSet& a, const IntSet& b, const PairConstraint& g) {
  g.CheckReferences(a, b);
  RemovalInstance inst;
  inst.a = a;
  inst.b = b;
  inst.c = Difference(Sumset(a, b), RestrictedSumset(a, b, g));
  return inst;
}

std::tuple<IntSet, IntSet, PairConstraint> RemovalToBsg(const RemovalInstance& inst) {
  CheckEncodings(inst);
  std::vector<IndexPair> removed;
  const double pairs = static_cast<double>(inst.a.size()) * inst.b.size();
  if (inst.group.kind == Group::Kind::kIntegers &&
      static_cast<double>(inst.c.size()) * inst.a.size() < pairs) {
    std::vector<int64_t> cs = inst.c.elements();
    for (int64_t i = 0; i < inst.a.size(); ++i) {
      int64_t x = inst.a.at(i);
      for (int64_t c : cs) {
        int64_t j = inst.b.index_of(c - x);
        if (j >= 0) removed.push_back({i, j});
      }
    }
    std::sort(removed.begin(), removed.end());
  } else {
    for (const auto& t : Solutions(inst)) removed.push_back({t[0], t[1]});
  }
  PairConstraint g = PairConstraint::ForIntSets(inst.a, inst.b, std::move(removed));
  return {inst.a, inst.b, std::move(g)};
}

namespace {

// Hypergraph view: vertex ids are [0, |A|) for A, then B, then C.
struct Hypergraph {
  int64_t na = 0, nb = 0, nc = 0;
  std::vector<std::array<int64_t, 3>> edges;
};

Hypergraph BuildHypergraph(const RemovalInstance& inst) {
  Hypergraph h;
  h.na = inst.a.size();
  h.nb = inst.b.size();
  h.nc = inst.c.size();
  for (const auto& t : Solutions(inst))
    h.edges.push_back({t[0], h.na + t[1], h.na + h.nb + t[2]});
  return h;
}

std::vector<char> GreedyCover(const Hypergraph& h, const RemovalInstance& inst) {
  const int64_t nv = h.na + h.nb + h.nc;
  std::vector<char> removed(nv, 0);
  std::vector<char> alive(h.edges.size(), 1);
  std::vector<int64_t> count(nv, 0);
  std::vector<std::vector<int64_t>> incident(nv);
  for (size_t e = 0; e < h.edges.size(); ++e)
    for (int64_t v : h.edges[e]) {
      ++count[v];
      incident[v].push_back(static_cast<int64_t>(e));
    }
  auto value_of = [&](int64_t v) {
    if (v < h.na) return inst.a.at(v);
    if (v < h.na + h.nb) return inst.b.at(v - h.na);
    return inst.c.at(v - h.na - h.nb);
  };
  auto part_rank = [&](int64_t v) { return v < h.na ? 2 : (v < h.na + h.nb ? 1 : 0); };
  using Key = std::tuple<int64_t, int64_t, int, int64_t>;  // (-count, value, rank, v)
  std::set<Key> queue;
  auto key_of = [&](int64_t v) { return Key{-count[v], value_of(v), part_rank(v), v}; };
  for (int64_t v = 0; v < nv; ++v)
    if (count[v] > 0) queue.insert(key_of(v));
  while (!queue.empty()) {
    int64_t v = std::get<3>(*queue.begin());
    queue.erase(queue.begin());
    removed[v] = 1;
    for (int64_t e : incident[v]) {
      if (!alive[e]) continue;
      alive[e] = 0;
      for (int64_t u : h.edges[e]) {
        if (u == v || removed[u]) continue;
        queue.erase(key_of(u));
        if (--count[u] > 0) queue.insert(key_of(u));
      }
    }
    count[v] = 0;
  }
  return removed;
}

// Minimum vertex cover of a 3-uniform hypergraph by branching on the first
// uncovered edge, with a disjoint-edge packing as the lower bound.
class CoverSearch {
 public:
  CoverSearch(const Hypergraph& h, std::vector<char> incumbent)
      : h_(h), best_(std::move(incumbent)) {
    best_size_ = std::count(best_.begin(), best_.end(), 1);
    chosen_.assign(best_.size(), 0);
  }

  std::vector<char> Run() {
    Recurse(0);
    return best_;
  }

 private:
  bool Covered(const std::array<int64_t, 3>& e) const {
    return chosen_[e[0]] || chosen_[e[1]] || chosen_[e[2]];
  }

  int64_t PackingBound(size_t from) {
    std::vector<int64_t> used;
    int64_t bound = 0;
    for (size_t k = from; k < h_.edges.size(); ++k) {
      const auto& e = h_.edges[k];
      if (Covered(e)) continue;
      bool clash = false;
      for (int64_t v : e)
        if (std::find(used.begin(), used.end(), v) != used.end()) clash = true;
      if (clash) continue;
      used.insert(used.end(), e.begin(), e.end());
      ++bound;
    }
    return bound;
  }

  void Recurse(size_t from) {
    while (from < h_.edges.size() && Covered(h_.edges[from])) ++from;
    if (from == h_.edges.size()) {
      if (size_ < best_size_) {
        best_size_ = size_;
        best_ = chosen_;
      }
      return;
    }
    if (size_ + PackingBound(from) >= best_size_) return;
    // C first, then B, then A: the same preference order as the greedy rule.
    const auto& e = h_.edges[from];
    for (int k = 2; k >= 0; --k) {
      int64_t v = e[k];
      chosen_[v] = 1;
      ++size_;
      Recurse(from + 1);
      --size_;
      chosen_[v] = 0;
    }
  }

  const Hypergraph& h_;
  std::vector<char> best_;
  int64_t best_size_ = 0;
  std::vector<char> chosen_;
  int64_t size_ = 0;
};

}  // namespace

RemovalSolution SolveRemoval(const RemovalInstance& inst, RemovalMode mode) {
  if (mode == RemovalMode::kExhaustive)
    RequireBudget(inst.a.size() + inst.b.size() + inst.c.size() <= kExhaustiveRemovalCap,
                  "exhaustive removal is limited to |A|+|B|+|C| <= " +
                      std::to_string(kExhaustiveRemovalCap));
  Hypergraph h = BuildHypergraph(inst);
  std::vector<char> cover = GreedyCover(h, inst);
  if (mode == RemovalMode::kExhaustive) cover = CoverSearch(h, cover).Run();

  RemovalSolution out;
  out.solutions_before = static_cast<int64_t>(h.edges.size());
  std::vector<int64_t> keep[3], drop[3];
  const IntSet* parts[3] = {&inst.a, &inst.b, &inst.c};
  int64_t base = 0;
  for (int p = 0; p < 3; ++p) {
    for (int64_t i = 0; i < parts[p]->size(); ++i)
      (cover[base + i] ? drop[p] : keep[p]).push_back(parts[p]->at(i));
    base += parts[p]->size();
  }
  out.a = IntSet::FromSorted(keep[0]);
  out.b = IntSet::FromSorted(keep[1]);
  out.c = IntSet::FromSorted(keep[2]);
  out.removed_a = IntSet::FromSorted(drop[0]);
  out.removed_b = IntSet::FromSorted(drop[1]);
  out.removed_c = IntSet::FromSorted(drop[2]);
  out.removed_count = static_cast<int64_t>(drop[0].size() + drop[1].size() + drop[2].size());
  out.solutions_after = SolutionCount({out.a, out.b, out.c, inst.group});
  if (out.solutions_after != 0)
    throw std::logic_error("removal left surviving solutions");
  out.certified_minimum = mode == RemovalMode::kExhaustive;
  return out;
}

Json ToJson(const ExtractionResult& r) {
  Json j;
  j["type"] = "bsg_extraction";
  j["N"] = r.n;
  j["removed_pairs"] = r.removed_pairs;
  j["delta"] = r.delta;
  j["threshold"] = r.threshold;
  j["min_degree"] = r.min_degree;
  j["restricted_sumset_size"] = r.restricted_size;
  j["K"] = r.k;
  j["bound"] = r.bound;
  j["extracted_sumset_size"] = r.extracted_sumset_size;
  j["sizes_hold"] = r.sizes_hold;
  j["bound_holds"] = r.bound_holds;
  j["A_prime"] = ToJson(r.a_prime);
  j["B_prime"] = ToJson(r.b_prime);
  return j;
}

namespace {

Json GroupToJson(const Group& g) {
  Json j;
  j["kind"] = g.kind == Group::Kind::kIntegers ? "integers"
              : g.kind == Group::Kind::kCyclic ? "cyclic"
                                               : "vector_space";
  if (g.kind == Group::Kind::kCyclic) j["modulus"] = g.modulus;
  if (g.kind == Group::Kind::kVectorSpace) {
    j["prime"] = g.prime;
    j["exponent"] = g.exponent;
  }
  return j;
}

Group GroupFromJson(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "integers") return Group::Integers();
  if (kind == "cyclic") return Group::Cyclic(j.at("modulus").get<int64_t>());
  if (kind == "vector_space")
    return Group::VectorSpace(j.at("prime").get<int64_t>(), j.at("exponent").get<int>());
  throw PreconditionError("unknown group kind " + kind);
}

}  // namespace

Json ToJson(const RemovalInstance& inst) {
  Json j;
  j["type"] = "removal_instance";
  j["group"] = GroupToJson(inst.group);
  j["A"] = ToJson(inst.a);
  j["B"] = ToJson(inst.b);
  j["C"] = ToJson(inst.c);
  // Ordered triples (a, b, c) with a + b = c, each counted once.
  j["solution_count"] = SolutionCount(inst);
  return j;
}

RemovalInstance RemovalInstanceFromJson(const Json& j) {
  Require(j.is_object() && j.value("type", "") == "removal_instance",
          "expected a JSON object of type removal_instance");
  RemovalInstance inst;
  inst.group = j.contains("group") ? GroupFromJson(j.at("group")) : Group::Integers();
  inst.a = IntSetFromJson(j.at("A"));
  inst.b = IntSetFromJson(j.at("B"));
  inst.c = IntSetFromJson(j.at("C"));
  CheckEncodings(inst);
  return inst;
}

Json ToJson(const RemovalSolution& s) {
  Json j;
  j["type"] = "removal_solution";
  j["removed_count"] = s.removed_count;
  j["solutions_before"] = s.solutions_before;
  j["solutions_after"] = s.solutions_after;
  j["certified_minimum"] = s.certified_minimum;
  j["A"] = ToJson(s.a);
  j["B"] = ToJson(s.b);
  j["C"] = ToJson(s.c);
  j["removed_A"] = ToJson(s.removed_a);
  j["removed_B"] = ToJson(s.removed_b);
  j["removed_C"] = ToJson(s.removed_c);
  return j;
}

}  // namespace bsglab
