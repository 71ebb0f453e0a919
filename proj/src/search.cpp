#include "bsglab/search.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "bsglab/error.hpp"
#include "bsglab/representation.hpp"
#include "bsglab/sumset.hpp"

namespace bsglab {

using i128 = __int128;

std::string StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kExhaustive:
      return "exhaustive";
    case Strategy::kGreedy:
      return "greedy";
    case Strategy::kLocalSearch:
      return "local_search";
  }
  return "";
}

Strategy ParseStrategy(const std::string& name) {
  if (name == "exhaustive") return Strategy::kExhaustive;
  if (name == "greedy") return Strategy::kGreedy;
  if (name == "local_search" || name == "local-search") return Strategy::kLocalSearch;
  throw PreconditionError("unknown strategy " + name);
}

int64_t RemovalBudget(int64_t n, const Rational& epsilon) {
  Require(epsilon >= 0 && epsilon <= 1, "epsilon must lie in [0, 1]");
  return std::clamp<int64_t>(FloorTimes(epsilon, n), 0, n);
}

bool ExhaustiveFeasible(int64_t n, int64_t k) {
  return k == 0 || (n <= kExhaustiveMaxSize && BinomialCount(n, k) <= kExhaustiveSubsetCap);
}

double BinomialCount(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  double c = 1;
  for (int64_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(c);
}

namespace {

// Range add / minimum with leftmost position, over a fixed index range.
class MinTree {
 public:
  static constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

  explicit MinTree(const std::vector<int64_t>& values) : n_(values.size()) {
    size_t cap = 1;
    while (cap < std::max<size_t>(n_, 1)) cap <<= 1;
    size_ = cap;
    mn_.assign(2 * cap, kInf);
    lz_.assign(2 * cap, 0);
    for (size_t i = 0; i < n_; ++i) mn_[cap + i] = values[i];
    for (size_t v = cap - 1; v >= 1; --v) mn_[v] = std::min(mn_[2 * v], mn_[2 * v + 1]);
  }

  void Add(size_t l, size_t r, int64_t delta) {  // inclusive
    if (l > r || l >= n_) return;
    Add(1, 0, size_ - 1, l, std::min(r, n_ - 1), delta);
  }
  void Set(size_t i, int64_t value) { Set(1, 0, size_ - 1, i, value); }
  int64_t Min() const { return mn_[1]; }
  // Leftmost index attaining the minimum.
  size_t ArgMin() {
    size_t v = 1;
    while (v < size_) {
      Push(v);
      v = mn_[2 * v] <= mn_[2 * v + 1] ? 2 * v : 2 * v + 1;
    }
    return v - size_;
  }

 private:
  void Apply(size_t v, int64_t d) {
    mn_[v] += d;
    if (v < size_) lz_[v] += d;
  }
  void Push(size_t v) {
    if (lz_[v]) {
      Apply(2 * v, lz_[v]);
      Apply(2 * v + 1, lz_[v]);
      lz_[v] = 0;
    }
  }
  void Add(size_t v, size_t lo, size_t hi, size_t l, size_t r, int64_t d) {
    if (r < lo || hi < l) return;
    if (l <= lo && hi <= r) {
      Apply(v, d);
      return;
    }
    Push(v);
    size_t mid = (lo + hi) / 2;
    Add(2 * v, lo, mid, l, r, d);
    Add(2 * v + 1, mid + 1, hi, l, r, d);
    mn_[v] = std::min(mn_[2 * v], mn_[2 * v + 1]);
  }
  void Set(size_t v, size_t lo, size_t hi, size_t i, int64_t value) {
    if (lo == hi) {
      mn_[v] = value;
      return;
    }
    Push(v);
    size_t mid = (lo + hi) / 2;
    if (i <= mid) {
      Set(2 * v, lo, mid, i, value);
    } else {
      Set(2 * v + 1, mid + 1, hi, i, value);
    }
    mn_[v] = std::min(mn_[2 * v], mn_[2 * v + 1]);
  }

  size_t n_ = 0;
  size_t size_ = 1;
  std::vector<int64_t> mn_;
  std::vector<int64_t> lz_;
};

// Range add of quadratics c2 s^2 + c1 s + c0, point evaluation at s.
class QuadraticFenwick {
 public:
  explicit QuadraticFenwick(size_t n) : n_(n), t_(n + 1) {}

  void Add(size_t l, size_t r, i128 c2, i128 c1, i128 c0) {
    if (l > r || l >= n_) return;
    Update(l, c2, c1, c0);
    if (r + 1 < n_) Update(r + 1, -c2, -c1, -c0);
  }
  i128 Eval(size_t i, int64_t s) const {
    i128 c2 = 0, c1 = 0, c0 = 0;
    for (size_t k = i + 1; k > 0; k -= k & (~k + 1)) {
      c2 += t_[k][0];
      c1 += t_[k][1];
      c0 += t_[k][2];
    }
    i128 x = s;
    return c2 * x * x + c1 * x + c0;
  }

 private:
  void Update(size_t i, i128 c2, i128 c1, i128 c0) {
    for (size_t k = i + 1; k <= n_; k += k & (~k + 1)) {
      t_[k][0] += c2;
      t_[k][1] += c1;
      t_[k][2] += c0;
    }
  }
  size_t n_;
  std::vector<std::array<i128, 3>> t_;
};

// 6 * sum_{a <= n} a^2 as a polynomial identity.
i128 SixF(i128 n) { return 2 * n * n * n + 3 * n * n + n; }

// Coefficients (s^3, s^2, s, 1) of 6 * F(s - c).
std::array<i128, 4> SixFShifted(i128 c) {
  return {2, -6 * c + 3, 6 * c * c - 6 * c + 1, -2 * c * c * c + 3 * c * c - c};
}

int64_t ISqrt(i128 v) {
  if (v <= 0) return 0;
  int64_t r = static_cast<int64_t>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<i128>(r) * r > v) --r;
  while (static_cast<i128>(r + 1) * (r + 1) <= v) ++r;
  return r;
}

class GreedyEngine {
 public:
  GreedyEngine(const IntSet& a, int64_t steps) : a_(a), steps_(steps) {}

  GreedyTrajectory Execute() {
    GreedyTrajectory out;
    out.initial_sumset_size = Sumset(a_, a_).size();
    out.deaths_offset.push_back(0);
    if (steps_ <= 0 || a_.empty()) return out;
    Require(steps_ <= a_.size(), "cannot remove more elements than the set has");
    Setup();
    int64_t dead = 0;
    for (int64_t step = 0; step < steps_; ++step) {
      int64_t x = by_gain_.empty() ? SmallestAlive() : by_gain_.begin()->second;
      dead += Remove(x, out.deaths);
      out.removed.push_back(x);
      out.sumset_sizes.push_back(out.initial_sumset_size - dead);
      out.deaths_offset.push_back(static_cast<int64_t>(out.deaths.size()));
      ExtractFragile();
    }
    return out;
  }

 private:
  int64_t FindCandidate(int64_t s) const {
    auto it = std::lower_bound(cand_.begin(), cand_.end(), s);
    return (it != cand_.end() && *it == s) ? it - cand_.begin() : -1;
  }

  void Setup() {
    RunSplit split = RunSplit::Of(a_);
    shorts_ = split.shorts;
    short_alive_.assign(shorts_.size(), 1);
    longs_ = split.longs;
    RequireBudget(std::max(std::llabs(a_.min()), std::llabs(a_.max())) <= 2'000'000'000,
                  "greedy engine supports elements of absolute value <= 2e9");

    LowRepresentationSums low =
        SumsWithFewRepresentations(a_, a_, 2 * steps_ + 2, 200'000'000);
    cand_ = std::move(low.sums);
    const size_t nc = cand_.size();
    tree_ = std::make_unique<MinTree>(low.counts);
    delta_ = std::make_unique<QuadraticFenwick>(nc);
    state_.assign(nc, kNormal);
    InitialSquares(split);
    ExtractFragile();
  }

  // s2_[i]: sum of first^2 over ordered representations (first, second) of
  // cand_[i] in the initial set.
  void InitialSquares(const RunSplit& split) {
    const size_t nc = cand_.size();
    s2_.assign(nc, 0);
    if (nc == 0) return;
    const auto& ps = shorts_;
    if (!ps.empty()) {
      int64_t lo = 2 * ps.front(), span = 2 * ps.back() - lo + 1;
      std::vector<int32_t> dense;
      bool use_dense = span <= kDenseSpanLimit;
      if (use_dense) {
        dense.assign(span, -1);
        auto first = std::lower_bound(cand_.begin(), cand_.end(), lo);
        for (auto it = first; it != cand_.end() && *it < lo + span; ++it)
          dense[*it - lo] = static_cast<int32_t>(it - cand_.begin());
      }
      RequireBudget(static_cast<double>(ps.size()) * ps.size() / 2 <= kPairWorkLimit,
                    "too many short elements for the greedy engine");
      for (size_t i = 0; i < ps.size(); ++i) {
        const i128 ai = ps[i];
        for (size_t j = i; j < ps.size(); ++j) {
          int64_t s = ps[i] + ps[j];
          int64_t idx = use_dense ? dense[s - lo] : FindCandidate(s);
          if (idx < 0) continue;
          const i128 bj = ps[j];
          s2_[idx] += i == j ? ai * ai : ai * ai + bj * bj;
        }
      }
    }
    // Pieces with a long run as one coordinate: second-difference style
    // events of the cubic 6 * sum a^2 over the piece's diagonal.
    if (split.longs.empty()) return;
    std::vector<std::pair<int64_t, std::array<i128, 4>>> ev;
    auto add_piece = [&](Run x, Run y) {
      const i128 fx0 = SixF(static_cast<i128>(x.lo) - 1), fx1 = SixF(x.hi);
      auto gy0 = SixFShifted(y.lo), gy1 = SixFShifted(static_cast<i128>(y.hi) + 1);
      std::array<i128, 4> e1 = gy0, e2{}, e3{}, e4 = gy1;
      e1[3] -= fx0;
      for (int k = 0; k < 4; ++k) {
        e2[k] = -gy0[k];
        e3[k] = -gy1[k];
        e4[k] = gy1[k];
      }
      e2[3] += fx1;
      e3[3] += fx0;
      e4[3] -= fx1;
      ev.push_back({x.lo + y.lo, e1});
      ev.push_back({x.hi + y.lo + 1, e2});
      ev.push_back({x.lo + y.hi + 1, e3});
      ev.push_back({x.hi + y.hi + 1, e4});
    };
    for (const Run& r : split.longs)
      for (const Run& y : a_.runs()) add_piece(r, y);
    for (int64_t x : split.shorts)
      for (const Run& r : split.longs) add_piece({x, x}, r);
    std::sort(ev.begin(), ev.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    std::array<i128, 4> acc{};
    size_t k = 0;
    for (size_t i = 0; i < nc; ++i) {
      const int64_t s = cand_[i];
      while (k < ev.size() && ev[k].first <= s) {
        for (int t = 0; t < 4; ++t) acc[t] += ev[k].second[t];
        ++k;
      }
      const i128 x = s;
      i128 six = ((acc[0] * x + acc[1]) * x + acc[2]) * x + acc[3];
      if (six % 6 != 0) throw std::logic_error("square-sum profile is not integral");
      s2_[i] += six / 6;
    }
  }

  bool Alive(int64_t v) const {
    auto it = std::lower_bound(shorts_.begin(), shorts_.end(), v);
    if (it != shorts_.end() && *it == v) return short_alive_[it - shorts_.begin()];
    auto r = std::upper_bound(longs_.begin(), longs_.end(), v,
                              [](int64_t x, const Run& run) { return x < run.lo; });
    return r != longs_.begin() && std::prev(r)->hi >= v;
  }

  int64_t SmallestAlive() {
    while (first_alive_ < shorts_.size() && !short_alive_[first_alive_]) ++first_alive_;
    int64_t best = std::numeric_limits<int64_t>::max();
    if (first_alive_ < shorts_.size()) best = shorts_[first_alive_];
    if (!longs_.empty()) best = std::min(best, longs_.front().lo);
    return best;
  }

  void AddGain(int64_t v, int64_t d) {
    int64_t& g = gain_[v];
    if (g > 0) by_gain_.erase({-g, v});
    g += d;
    if (g > 0) by_gain_.insert({-g, v});
  }

  void ExtractFragile() {
    while (tree_->Min() <= 2) {
      size_t idx = tree_->ArgMin();
      int64_t r = tree_->Min();
      tree_->Set(idx, MinTree::kInf);
      const int64_t s = cand_[idx];
      i128 sq = s2_[idx] + delta_->Eval(idx, s);
      int64_t a, b;
      if (r == 1) {
        a = b = s / 2;
        if (s % 2 != 0 || sq != static_cast<i128>(a) * a)
          throw std::logic_error("inconsistent single representation");
      } else if (r == 2) {
        i128 disc = 2 * sq - static_cast<i128>(s) * s;
        int64_t d = ISqrt(disc);
        if (d <= 0 || static_cast<i128>(d) * d != disc || (s - d) % 2 != 0)
          throw std::logic_error("inconsistent pair representation");
        a = (s - d) / 2;
        b = (s + d) / 2;
      } else {
        throw std::logic_error("sum lost all representations outside the fragile state");
      }
      if (!Alive(a) || !Alive(b)) throw std::logic_error("recovered representation is not alive");
      state_[idx] = kFragile;
      pair_.emplace(idx, std::make_pair(a, b));
      AddGain(a, 1);
      members_[a].push_back(idx);
      if (b != a) {
        AddGain(b, 1);
        members_[b].push_back(idx);
      }
    }
  }

  // Removes x, returns the number of sums that died.
  int64_t Remove(int64_t x, std::vector<int64_t>& deaths) {
    int64_t killed = 0;
    auto mit = members_.find(x);
    if (mit != members_.end()) {
      for (int64_t idx : mit->second) {
        if (state_[idx] != kFragile) continue;
        state_[idx] = kDead;
        deaths.push_back(cand_[idx]);
        ++killed;
        auto [p, q] = pair_.at(idx);
        int64_t partner = p == x ? q : p;
        if (partner != x) AddGain(partner, -1);
      }
      members_.erase(mit);
    }
    auto git = gain_.find(x);
    if (git != gain_.end()) {
      if (git->second > 0) by_gain_.erase({-git->second, x});
      gain_.erase(git);
    }
    std::sort(deaths.end() - killed, deaths.end());

    const i128 xx = x;
    for (const Run& piece : longs_) {
      auto l = std::lower_bound(cand_.begin(), cand_.end(), x + piece.lo) - cand_.begin();
      auto r = std::upper_bound(cand_.begin(), cand_.end(), x + piece.hi) - cand_.begin();
      if (l >= r) continue;
      tree_->Add(l, r - 1, -2);
      // x^2 + (s - x)^2 leaves with the two ordered pairs.
      delta_->Add(l, r - 1, -1, 2 * xx, -2 * xx * xx);
    }
    for (size_t j = 0; j < shorts_.size(); ++j) {
      if (!short_alive_[j]) continue;
      int64_t idx = FindCandidate(x + shorts_[j]);
      if (idx < 0) continue;
      tree_->Add(idx, idx, -2);
      const i128 b = shorts_[j];
      delta_->Add(idx, idx, 0, 0, -(xx * xx + b * b));
    }
    // The pair (x, x) was counted twice above.
    int64_t self = FindCandidate(2 * x);
    if (self >= 0) {
      tree_->Add(self, self, 1);
      delta_->Add(self, self, 0, 0, xx * xx);
    }

    auto it = std::lower_bound(shorts_.begin(), shorts_.end(), x);
    if (it != shorts_.end() && *it == x) {
      short_alive_[it - shorts_.begin()] = 0;
    } else {
      auto r = std::upper_bound(longs_.begin(), longs_.end(), x,
                                [](int64_t v, const Run& run) { return v < run.lo; });
      auto run = std::prev(r);
      Run left{run->lo, x - 1}, right{x + 1, run->hi};
      auto pos = longs_.erase(run);
      if (right.lo <= right.hi) pos = longs_.insert(pos, right);
      if (left.lo <= left.hi) longs_.insert(pos, left);
    }
    return killed;
  }

  static constexpr uint8_t kNormal = 0, kFragile = 1, kDead = 2;

  const IntSet& a_;
  int64_t steps_;
  std::vector<int64_t> shorts_;
  std::vector<char> short_alive_;
  size_t first_alive_ = 0;
  std::vector<Run> longs_;
  std::vector<int64_t> cand_;
  std::vector<i128> s2_;
  std::unique_ptr<MinTree> tree_;
  std::unique_ptr<QuadraticFenwick> delta_;
  std::vector<uint8_t> state_;
  std::unordered_map<int64_t, std::pair<int64_t, int64_t>> pair_;
  std::unordered_map<int64_t, std::vector<int64_t>> members_;
  std::unordered_map<int64_t, int64_t> gain_;
  std::set<std::pair<int64_t, int64_t>> by_gain_;
};

// Minimum |A'+A'| over all ways to drop k elements, by depth-first
// enumeration with incremental representation counts.
class ExhaustiveShrink {
 public:
  ExhaustiveShrink(const IntSet& a, int64_t k) : e_(a.elements()), k_(k) {
    sums_ = Sumset(a, a);
    rep_.assign(sums_.size(), 0);
    for (size_t i = 0; i < e_.size(); ++i)
      for (size_t j = 0; j < e_.size(); ++j) ++rep_[sums_.index_of(e_[i] + e_[j])];
    idx_.assign(e_.size(), std::vector<int32_t>(e_.size()));
    for (size_t i = 0; i < e_.size(); ++i)
      for (size_t j = 0; j < e_.size(); ++j)
        idx_[i][j] = static_cast<int32_t>(sums_.index_of(e_[i] + e_[j]));
    alive_.assign(e_.size(), 1);
    live_ = sums_.size();
    best_ = live_ + 1;
  }

  std::vector<int64_t> Execute(int64_t* evaluations) {
    chosen_.clear();
    Recurse(0);
    *evaluations = evaluations_;
    return best_set_;
  }
  int64_t best() const { return best_; }

 private:
  void Toggle(size_t i, int sign) {
    // sign = -1 removes e_[i], +1 restores it; alive_ excludes i itself.
    for (size_t j = 0; j < e_.size(); ++j) {
      if (!alive_[j] || j == i) continue;
      int32_t s = idx_[i][j];
      if (sign < 0 && (rep_[s] -= 2) == 0) --live_;
      if (sign > 0 && (rep_[s] += 2) == 2) ++live_;
    }
    int32_t s = idx_[i][i];
    if (sign < 0 && (rep_[s] -= 1) == 0) --live_;
    if (sign > 0 && (rep_[s] += 1) == 1) ++live_;
  }

  void Recurse(size_t from) {
    if (static_cast<int64_t>(chosen_.size()) == k_) {
      ++evaluations_;
      if (live_ < best_) {
        best_ = live_;
        best_set_ = chosen_;
      }
      return;
    }
    size_t need = k_ - chosen_.size();
    for (size_t i = from; i + need <= e_.size(); ++i) {
      Toggle(i, -1);
      alive_[i] = 0;
      chosen_.push_back(e_[i]);
      Recurse(i + 1);
      chosen_.pop_back();
      alive_[i] = 1;
      Toggle(i, +1);
    }
  }

  std::vector<int64_t> e_;
  int64_t k_;
  IntSet sums_;
  std::vector<int64_t> rep_;
  std::vector<std::vector<int32_t>> idx_;
  std::vector<char> alive_;
  int64_t live_ = 0;
  int64_t best_ = 0;
  std::vector<int64_t> chosen_, best_set_;
  int64_t evaluations_ = 0;
};

ShrinkResult Finish(const IntSet& a, std::vector<int64_t> removed, Strategy s) {
  ShrinkResult out;
  std::sort(removed.begin(), removed.end());
  out.removed = IntSet::FromSorted(removed);
  out.a_prime = Difference(a, out.removed);
  out.achieved = Sumset(out.a_prime, out.a_prime).size();
  out.strategy = s;
  return out;
}

ShrinkResult LocalSearch(const IntSet& a, int64_t k, const SearchConfig& cfg) {
  RequireBudget(a.size() <= 2000, "local search is limited to sets of at most 2000 elements");
  GreedyTrajectory g = GreedyShrink(a, k);
  ShrinkResult cur = Finish(a, g.removed, Strategy::kLocalSearch);
  std::mt19937_64 rng(cfg.seed);
  int64_t evaluations = 0;
  bool improved = k > 0;
  while (improved && evaluations < cfg.max_steps) {
    improved = false;
    std::vector<int64_t> out_list = cur.removed.elements();
    std::vector<int64_t> in_list = cur.a_prime.elements();
    std::vector<std::pair<int64_t, int64_t>> moves;
    for (int64_t r : out_list)
      for (int64_t y : in_list) moves.push_back({r, y});
    std::shuffle(moves.begin(), moves.end(), rng);
    for (const auto& [r, y] : moves) {
      if (evaluations >= cfg.max_steps) break;
      ++evaluations;
      std::vector<int64_t> next;
      for (int64_t v : out_list)
        if (v != r) next.push_back(v);
      next.push_back(y);
      ShrinkResult cand = Finish(a, next, Strategy::kLocalSearch);
      if (cand.achieved < cur.achieved) {
        cur = std::move(cand);
        improved = true;
        break;
      }
    }
  }
  cur.evaluations = evaluations;
  return cur;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

int64_t GreedyTrajectory::SizeAfter(int64_t steps) const {
  Require(steps >= 0 && steps <= static_cast<int64_t>(removed.size()),
          "trajectory is shorter than the requested number of steps");
  return steps == 0 ? initial_sumset_size : sumset_sizes[steps - 1];
}

IntSet GreedyTrajectory::SurvivorsAfter(const IntSet& a, int64_t steps) const {
  SizeAfter(steps);
  std::vector<int64_t> r(removed.begin(), removed.begin() + steps);
  std::sort(r.begin(), r.end());
  return Difference(a, IntSet::FromSorted(r));
}

IntSet GreedyTrajectory::MissingAfter(int64_t steps) const {
  SizeAfter(steps);
  std::vector<int64_t> d(deaths.begin(), deaths.begin() + deaths_offset[steps]);
  return IntSet::FromUnsorted(std::move(d));
}

GreedyTrajectory GreedyShrink(const IntSet& a, int64_t steps) {
  return GreedyEngine(a, steps).Execute();
}

ShrinkResult ShrinkSearch(const IntSet& a, const SearchConfig& cfg) {
  const int64_t k = RemovalBudget(a.size(), cfg.epsilon);
  switch (cfg.strategy) {
    case Strategy::kExhaustive: {
      Require(ExhaustiveFeasible(a.size(), k),
              "exhaustive search needs C(|A|, k) <= 1e7 and |A| <= 3000");
      if (k == 0) {
        ShrinkResult out = Finish(a, {}, Strategy::kExhaustive);
        out.certified_minimum = true;
        out.evaluations = 1;
        return out;
      }
      ExhaustiveShrink ex(a, k);
      int64_t evaluations = 0;
      std::vector<int64_t> removed = ex.Execute(&evaluations);
      ShrinkResult out = Finish(a, removed, Strategy::kExhaustive);
      if (out.achieved != ex.best()) throw std::logic_error("exhaustive minimum mismatch");
      out.certified_minimum = true;
      out.evaluations = evaluations;
      return out;
    }
    case Strategy::kGreedy: {
      GreedyTrajectory g = GreedyShrink(a, k);
      ShrinkResult out = Finish(a, g.removed, Strategy::kGreedy);
      if (out.achieved != g.SizeAfter(k)) throw std::logic_error("greedy sumset mismatch");
      out.evaluations = k;
      return out;
    }
    case Strategy::kLocalSearch:
      return LocalSearch(a, k, cfg);
  }
  return {};
}

FrontierResult FrontierProbe(const IntSet& a, const PairConstraint& g,
                             const std::vector<Rational>& eps_grid,
                             std::optional<int64_t> restricted_size) {
  FrontierResult f;
  f.n = a.size();
  f.restricted_size = restricted_size ? *restricted_size : RestrictedSumset(a, a, g).size();
  int64_t greedy_steps = 0;
  std::vector<int64_t> budgets;
  for (const Rational& e : eps_grid) {
    int64_t k = RemovalBudget(a.size(), e);
    budgets.push_back(k);
    if (!ExhaustiveFeasible(a.size(), k)) greedy_steps = std::max(greedy_steps, k);
  }
  if (greedy_steps > 0) f.greedy = GreedyShrink(a, greedy_steps);
  f.sumset_size = f.greedy ? f.greedy->initial_sumset_size : Sumset(a, a).size();
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    FrontierRow row;
    row.epsilon = eps_grid[i];
    row.removal_budget = budgets[i];
    row.delta = g.density();
    if (ExhaustiveFeasible(a.size(), budgets[i])) {
      SearchConfig cfg;
      cfg.epsilon = eps_grid[i];
      cfg.strategy = Strategy::kExhaustive;
      row.min_sumset_size = ShrinkSearch(a, cfg).achieved;
      row.strategy = Strategy::kExhaustive;
    } else {
      row.min_sumset_size = f.greedy->SizeAfter(budgets[i]);
      row.strategy = Strategy::kGreedy;
    }
    row.margin = static_cast<double>(row.min_sumset_size - f.restricted_size) /
                 static_cast<double>(f.n);
    // margin > epsilon, decided exactly: (min - restricted) > epsilon * n.
    Rational lhs(row.min_sumset_size - f.restricted_size);
    bool beats = lhs > eps_grid[i] * Rational(f.n);
    row.certified = row.strategy == Strategy::kExhaustive && beats;
    f.rows.push_back(row);
  }
  return f;
}

std::string FrontierCsv(const FrontierResult& f) {
  std::ostringstream os;
  os << "epsilon,delta,margin,strategy,certified\n";
  for (const auto& r : f.rows) {
    os << FormatDouble(ToDouble(r.epsilon)) << ',' << FormatDouble(r.delta) << ','
       << FormatDouble(r.margin) << ',' << StrategyName(r.strategy) << ','
       << (r.certified ? "true" : "false") << '\n';
  }
  return os.str();
}

Json ToJson(const ShrinkResult& r) {
  Json j;
  j["type"] = "shrink_result";
  j["strategy"] = StrategyName(r.strategy);
  j["achieved"] = r.achieved;
  j["size"] = r.a_prime.size();
  j["certified_minimum"] = r.certified_minimum;
  j["evaluations"] = r.evaluations;
  j["removed"] = ToJson(r.removed);
  j["A_prime"] = ToJson(r.a_prime);
  return j;
}

Json ToJson(const FrontierResult& f) {
  Json j;
  j["type"] = "frontier";
  j["N"] = f.n;
  j["sumset_size"] = f.sumset_size;
  j["restricted_sumset_size"] = f.restricted_size;
  Json rows = Json::array();
  for (const auto& r : f.rows) {
    Json row;
    row["epsilon"] = FormatRational(r.epsilon);
    row["epsilon_value"] = ToDouble(r.epsilon);
    row["removal_budget"] = r.removal_budget;
    row["delta"] = r.delta;
    row["min_sumset_size"] = r.min_sumset_size;
    row["margin"] = r.margin;
    row["strategy"] = StrategyName(r.strategy);
    row["certified"] = r.certified;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace bsglab
