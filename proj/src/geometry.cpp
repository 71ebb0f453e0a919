#include "bsglab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

#include "bsglab/error.hpp"

namespace bsglab {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  double Uniform() { return uni_(rng_); }

  void Direction(std::vector<double>& v) {
    double n2 = 0;
    do {
      n2 = 0;
      for (double& c : v) {
        c = normal_(rng_);
        n2 += c * c;
      }
    } while (n2 == 0);
    double inv = 1.0 / std::sqrt(n2);
    for (double& c : v) c *= inv;
  }

  // Uniform in {rmin <= |x| <= rmax} by radial inversion.
  void InShell(std::vector<double>& x, double rmin, double rmax) {
    const double d = static_cast<double>(x.size());
    Direction(x);
    double lo = std::pow(rmin, d), hi = std::pow(rmax, d);
    double r = std::pow(lo + Uniform() * (hi - lo), 1.0 / d);
    for (double& c : x) c *= r;
  }

 private:
  std::mt19937_64 rng_;
  boost::random::normal_distribution<double> normal_{0.0, 1.0};
  boost::random::uniform_real_distribution<double> uni_{0.0, 1.0};
};

double Norm2(const std::vector<double>& x) {
  double s = 0;
  for (double c : x) s += c * c;
  return s;
}

bool InAnnulus(double n2, double eta) {
  return n2 <= 1.0 && n2 >= (1.0 - eta) * (1.0 - eta);
}

void CheckDimEta(int d, double eta) {
  Require(d >= 1, "dimension must be positive");
  Require(eta > 0 && eta <= 1, "eta must lie in (0, 1]");
}

VolumeEstimate BinomialEstimate(double scale, int64_t hits, int64_t samples, uint64_t seed) {
  VolumeEstimate v;
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  v.value = scale * p;
  v.std_error = scale * std::sqrt(p * (1 - p) / static_cast<double>(samples));
  v.samples = samples;
  v.seed = seed;
  v.method = "monte_carlo";
  v.details["hits"] = hits;
  return v;
}

template <class F>
double TanhSinh(F f, double a, double b) {
  if (b <= a) return 0;
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(f, a, b, 1e-12);
}

}  // namespace

double BallVolume(int d) {
  Require(d >= 0, "dimension must be non-negative");
  return std::exp(0.5 * d * std::log(kPi) - std::lgamma(0.5 * d + 1.0));
}

bool CrudeBallBoundsHold(int d) {
  double lv = 0.5 * d * std::log(kPi) - std::lgamma(0.5 * d + 1.0);
  double lower = -0.5 * d * std::log(static_cast<double>(d));
  double upper = d * std::log(10.0) + lower;
  return lower <= lv && lv <= upper;
}

VolumeEstimate BallVolumeEstimate(int d) {
  Require(d >= 1, "dimension must be positive");
  VolumeEstimate v;
  v.value = BallVolume(d);
  v.details["crude_bounds_hold"] = CrudeBallBoundsHold(d);
  v.details["lower_bound"] = std::pow(static_cast<double>(d), -0.5 * d);
  v.details["upper_bound"] = std::pow(10.0, d) * std::pow(static_cast<double>(d), -0.5 * d);
  return v;
}

double AnnulusVolume(int d, double eta) {
  CheckDimEta(d, eta);
  return -std::expm1(d * std::log1p(-eta)) * BallVolume(d);
}

VolumeEstimate AnnulusVolumeEstimate(int d, double eta) {
  VolumeEstimate v;
  v.value = AnnulusVolume(d, eta);
  double first = d * eta * BallVolume(d);
  v.details["first_order"] = first;
  v.details["ratio"] = v.value / first;
  return v;
}

double CapVolume(int d, double h) {
  Require(d >= 1, "dimension must be positive");
  Require(h > 0 && h <= 1, "cap height must lie in (0, 1]");
  const double vd1 = BallVolume(d - 1);
  const double e = 0.5 * (d - 1);
  // x = 1 - u^2 removes the endpoint singularity.
  auto f = [&](double u) {
    double w = u * u * (2 - u * u);
    return 2 * u * vd1 * (w > 0 ? std::pow(w, e) : (e == 0 ? 1.0 : 0.0));
  };
  double err = 0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, std::sqrt(h), 20,
                                                                        1e-13, &err);
}

VolumeEstimate CapVolumeEstimate(int d, double h) {
  VolumeEstimate v;
  v.value = CapVolume(d, h);
  v.method = "quadrature";
  double shape = std::pow(2.0, d) * BallVolume(d - 1) * std::pow(h, 0.5 * (d + 1));
  v.details["upper_shape"] = shape;
  v.details["ratio_to_shape"] = v.value / shape;
  return v;
}

double AnnulusSliceVolume(int d, double eta, double lo, double hi, double outer) {
  CheckDimEta(d, eta);
  const double inner = 1.0 - eta;
  lo = std::max(lo, -outer);
  hi = std::min(hi, outer);
  if (hi <= lo) return 0;
  const double vd1 = BallVolume(d - 1);
  const double e = 0.5 * (d - 1);
  auto section = [&](double r, double x) {
    double w = r * r - x * x;
    if (w <= 0) return 0.0;
    return e == 0 ? 1.0 : std::pow(w, e);
  };
  auto f = [&](double x) { return vd1 * (section(outer, x) - section(inner, x)); };
  std::vector<double> cuts = {lo, hi};
  for (double c : {-inner, inner, 0.0})
    if (c > lo && c < hi) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) total += TanhSinh(f, cuts[i], cuts[i + 1]);
  return total;
}

double TrimmedAnnulusVolume(int d, double eta, double trim) {
  CheckDimEta(d, eta);
  Require(trim > 0 && trim <= 1, "trim must lie in (0, 1]");
  if (trim >= 1) return AnnulusVolume(d, eta);
  Require(trim >= 1.0 / std::sqrt(2.0), "corner caps overlap for trim < 1/sqrt(2)");
  return AnnulusVolume(d, eta) - 2.0 * d * AnnulusSliceVolume(d, eta, trim, 1.0);
}

VolumeEstimate McVolumeT(int d, double eta, int64_t samples, uint64_t seed) {
  CheckDimEta(d, eta);
  Require(samples >= 1000, "at least 1000 samples are required");
  Sampler rng(seed);
  const double radius = std::sqrt(2 * eta);
  const double y_cap = 1.0 - (1.0 - eta) * (1.0 - eta);
  std::vector<double> x(d), y(d), u(d), v(d);
  int64_t hits = 0;
  for (int64_t s = 0; s < samples; ++s) {
    rng.InShell(x, 1.0 - eta, 1.0);
    rng.InShell(y, 0.0, radius);
    for (int k = 0; k < d; ++k) {
      u[k] = x[k] - y[k];
      v[k] = x[k] + y[k];
    }
    if (!InAnnulus(Norm2(u), eta) || !InAnnulus(Norm2(v), eta)) continue;
    ++hits;
    double y2 = Norm2(y);
    if (y2 > y_cap + 1e-12 || y2 > 2 * eta + 1e-12)
      throw std::logic_error("three-term progression in S with |y|^2 above 1-(1-eta)^2");
  }
  const double vol_s = AnnulusVolume(d, eta);
  VolumeEstimate out = BinomialEstimate(vol_s * BallVolume(d) * std::pow(radius, d), hits,
                                        samples, seed);
  double shape = std::pow(2 * eta, 0.5 * d - 1) * vol_s * vol_s;
  out.details["ratio_to_shape"] = out.value / shape;
  out.details["y_filter_violations"] = 0;
  return out;
}

double RyLowerBoundShape(int d, double eta, double t) {
  return BallVolume(d - 1) * std::pow(2.0, -d) * eta * std::pow(t, 0.5 * (d - 1)) *
         std::min(t, eta);
}

VolumeEstimate McVolumeRy(int d, double eta, double t, int64_t samples, uint64_t seed,
                          double floor_constant) {
  CheckDimEta(d, eta);
  Require(t > 0 && t <= 2, "t must lie in (0, 2]");
  Require(samples >= 1, "samples must be positive");
  Sampler rng(seed);
  std::vector<double> x(d);
  const double y1 = 2.0 - t;
  const double slab_lo = 1.0 - t / 2, slab_hi = 1.0 - t / 2 + eta / 8;
  const double slab_r = (1.0 - eta / 2) * (1.0 - eta / 2);
  const bool check_slab = eta <= 2.0 / 3.0;
  int64_t hits = 0, slab_hits = 0, slab_violations = 0;
  for (int64_t s = 0; s < samples; ++s) {
    rng.InShell(x, 1.0 - eta, 1.0);
    double n2 = Norm2(x);
    // |y - x|^2 = |x|^2 + |y|^2 - 2 x.y
    double m2 = n2 + y1 * y1 - 2 * y1 * x[0];
    bool in_r = InAnnulus(m2, eta);
    if (in_r) ++hits;
    if (x[0] >= slab_lo && x[0] <= slab_hi && n2 >= slab_r) {
      ++slab_hits;
      double inner = (1 - eta) * (1 - eta);
      if (check_slab && (m2 > 1 + 1e-12 || m2 < inner - 1e-12)) ++slab_violations;
    }
  }
  if (slab_violations > 0) throw std::logic_error("slab point outside R_y");
  const double vol_s = AnnulusVolume(d, eta);
  VolumeEstimate out = BinomialEstimate(vol_s, hits, samples, seed);
  VolumeEstimate slab = BinomialEstimate(vol_s, slab_hits, samples, seed);
  double shape = RyLowerBoundShape(d, eta, t);
  out.details["t"] = t;
  out.details["slab_value"] = slab.value;
  out.details["slab_std_error"] = slab.std_error;
  out.details["slab_containment_checked"] = check_slab;
  out.details["slab_violations"] = slab_violations;
  out.details["lower_bound_shape"] = shape;
  out.details["ratio_to_lower_bound"] = out.value / shape;
  out.details["floor_constant"] = floor_constant;
  bool floor_ok = out.value >= floor_constant * shape;
  out.details["floor_holds"] = floor_ok;
  if (!floor_ok) throw std::logic_error("R_y estimate below the configured floor");
  return out;
}

IntersectionCheck CheckIntersectionLemma(int d, double eta, int64_t trials, uint64_t seed) {
  CheckDimEta(d, eta);
  Sampler rng(seed);
  IntersectionCheck out;
  std::vector<double> dir(d), y1(d), y2(d), v(d), x(d), w(d);
  constexpr int kTries = 16;
  for (int64_t trial = 0; trial < trials; ++trial) {
    ++out.trials;
    // Small t is where the inequality is tight.
    double u = rng.Uniform();
    double t1 = std::max(2 * u * u, 1e-9);
    rng.Direction(dir);
    for (int k = 0; k < d; ++k) y1[k] = (2 - t1) * dir[k];
    rng.Direction(dir);
    double step = rng.Uniform() * 6 * std::sqrt(t1);
    for (int k = 0; k < d; ++k) y2[k] = y1[k] + step * dir[k];
    double n2 = std::sqrt(Norm2(y2));
    if (n2 >= 2) continue;
    double t2 = 2 - n2;
    for (int attempt = 0; attempt < kTries; ++attempt) {
      rng.InShell(v, 0.0, std::sqrt(t1));
      for (int k = 0; k < d; ++k) x[k] = y1[k] / 2 + v[k];
      if (!InAnnulus(Norm2(x), eta)) continue;
      for (int k = 0; k < d; ++k) w[k] = y1[k] - x[k];
      if (!InAnnulus(Norm2(w), eta)) continue;
      for (int k = 0; k < d; ++k) w[k] = y2[k] - x[k];
      if (!InAnnulus(Norm2(w), eta)) continue;
      ++out.witnesses;
      double dist = 0;
      for (int k = 0; k < d; ++k) dist += (y1[k] - y2[k]) * (y1[k] - y2[k]);
      if (!(std::sqrt(dist) < 2 * (std::sqrt(t1) + std::sqrt(t2)))) ++out.violations;
      break;
    }
  }
  return out;
}

Carve Carve::Parse(const std::string& text) {
  Carve c;
  if (text == "none" || text.empty()) return c;
  auto colon = text.find(':');
  Require(colon != std::string::npos, "carve must be none, radial:s, cap:h or slab:s");
  std::string kind = text.substr(0, colon);
  c.size = std::stod(text.substr(colon + 1));
  if (kind == "radial") {
    c.kind = Kind::kRadial;
    Require(c.size > 0 && c.size < 1, "radial carve needs 0 < s < 1");
  } else if (kind == "cap") {
    c.kind = Kind::kCap;
    Require(c.size > 0 && c.size <= 1, "cap carve needs 0 < h <= 1");
  } else if (kind == "slab") {
    c.kind = Kind::kSlab;
    Require(c.size > 0 && c.size < 1, "slab carve needs 0 < s < 1");
  } else {
    throw PreconditionError("unknown carve " + kind);
  }
  return c;
}

std::string Carve::Describe() const {
  char buf[64];
  switch (kind) {
    case Kind::kNone:
      return "none";
    case Kind::kRadial:
      std::snprintf(buf, sizeof buf, "radial:%.17g", size);
      return buf;
    case Kind::kCap:
      std::snprintf(buf, sizeof buf, "cap:%.17g", size);
      return buf;
    case Kind::kSlab:
      std::snprintf(buf, sizeof buf, "slab:%.17g", size);
      return buf;
  }
  return "";
}

bool Carve::Keeps(const double* x, int d, double eta) const {
  double n2 = 0;
  for (int k = 0; k < d; ++k) n2 += x[k] * x[k];
  if (!InAnnulus(n2, eta)) return false;
  switch (kind) {
    case Kind::kNone:
      return true;
    case Kind::kRadial:
      return n2 <= (1 - size * eta) * (1 - size * eta);
    case Kind::kCap:
      return x[0] < 1 - size;
    case Kind::kSlab:
      return std::abs(x[0]) > size;
  }
  return true;
}

double CarvedMass(int d, double eta, const Carve& carve) {
  switch (carve.kind) {
    case Carve::Kind::kNone:
      return 0;
    case Carve::Kind::kRadial:
      return BallVolume(d) * -std::expm1(d * std::log1p(-carve.size * eta));
    case Carve::Kind::kCap:
      return AnnulusSliceVolume(d, eta, 1 - carve.size, 1);
    case Carve::Kind::kSlab:
      return AnnulusSliceVolume(d, eta, -carve.size, carve.size);
  }
  return 0;
}

double DefaultCarveBudget(int d, double eta) { return std::pow(25.0, -d) * eta * eta * eta; }

namespace {

struct Interval {
  double lo, hi;
};

// Whether pieces minus the union of `holes` keeps positive length.
bool SurvivesHoles(const std::vector<Interval>& pieces, std::vector<Interval> holes) {
  std::sort(holes.begin(), holes.end(), [](auto& a, auto& b) { return a.lo < b.lo; });
  for (Interval p : pieces) {
    double pos = p.lo;
    for (const Interval& h : holes) {
      if (h.hi <= pos) continue;
      if (h.lo >= p.hi) break;
      if (h.lo > pos) return true;
      pos = std::max(pos, h.hi);
      if (pos >= p.hi) break;
    }
    if (pos < p.hi) return true;
  }
  return false;
}

// Whether the first coordinates admissible for x (and z - x) meet the carve.
bool FirstCoordinateAdmits(const std::vector<Interval>& pieces, const Carve& carve, double z1) {
  switch (carve.kind) {
    case Carve::Kind::kNone:
    case Carve::Kind::kRadial:
      return !pieces.empty();
    case Carve::Kind::kCap: {
      double lo = z1 - (1 - carve.size), hi = 1 - carve.size;
      for (Interval p : pieces)
        if (std::max(p.lo, lo) < std::min(p.hi, hi)) return true;
      return false;
    }
    case Carve::Kind::kSlab:
      return SurvivesHoles(pieces, {{-carve.size, carve.size},
                                    {z1 - carve.size, z1 + carve.size}});
  }
  return false;
}

// Witness search along x = z/2 + alpha zhat + w, w orthogonal to z: both x
// and z - x lie in the annulus iff |w|^2 falls in a window set by alpha, and
// the carve only constrains the first coordinate.
bool InCarvedSumset(const std::vector<double>& z, double eta, const Carve& carve, int64_t grid) {
  const int d = static_cast<int>(z.size());
  double rho = std::sqrt(Norm2(z));
  double zhat1 = rho > 1e-15 ? z[0] / rho : 0.0;
  double c = std::sqrt(std::max(0.0, 1 - zhat1 * zhat1));
  const double inner2 = (1 - eta) * (1 - eta);
  const double outer = carve.kind == Carve::Kind::kRadial ? 1 - carve.size * eta : 1.0;
  const double outer2 = outer * outer;
  const double amax = outer - rho / 2;
  if (amax < 0) return false;
  std::vector<Interval> pieces;
  for (int64_t i = 0; i < grid; ++i) {
    double alpha = grid == 1 ? 0 : amax * static_cast<double>(i) / static_cast<double>(grid - 1);
    double p = rho / 2 + alpha, q = rho / 2 - alpha;
    double lo_w = std::max({0.0, inner2 - p * p, inner2 - q * q});
    double hi_w = std::min(outer2 - p * p, outer2 - q * q);
    if (hi_w < lo_w) continue;
    double m = z[0] / 2 + alpha * zhat1;
    double a = std::sqrt(lo_w) * c, b = std::sqrt(hi_w) * c;
    pieces.clear();
    if (d >= 3) {
      pieces.push_back({m - b, m + b});
    } else {
      pieces.push_back({m - b, m - a});
      pieces.push_back({m + a, m + b});
    }
    if (carve.kind == Carve::Kind::kNone || carve.kind == Carve::Kind::kRadial) return true;
    // Degenerate pieces still give a single admissible point.
    for (auto& pc : pieces)
      if (pc.hi - pc.lo < 1e-15) pc.hi = pc.lo + 1e-15;
    if (FirstCoordinateAdmits(pieces, carve, z[0])) return true;
  }
  return false;
}

}  // namespace

CarvedDeficitReport McCarvedDeficit(int d, double eta, const Carve& carve, int64_t samples,
                           uint64_t seed, double mass_budget, int64_t witness_budget) {
  CheckDimEta(d, eta);
  Require(d >= 2, "the sumset check needs d >= 2");
  Require(samples >= 1 && witness_budget >= 1, "samples and witness budget must be positive");
  CarvedDeficitReport r;
  const double vol_s = AnnulusVolume(d, eta);
  r.carved_fraction = CarvedMass(d, eta, carve) / vol_s;
  r.mass_budget = mass_budget;
  r.witness_budget = witness_budget;
  Require(r.carved_fraction <= mass_budget, "carve removes more than the mass budget");
  Sampler rng(seed);
  std::vector<double> z(d);
  int64_t missing = 0;
  for (int64_t s = 0; s < samples; ++s) {
    rng.InShell(z, 0.0, 2.0);
    if (!InCarvedSumset(z, eta, carve, witness_budget)) ++missing;
  }
  const double vol_sum = std::pow(2.0, d) * BallVolume(d);
  r.deficit = BinomialEstimate(vol_sum / vol_s, missing, samples, seed);
  r.deficit.details["carve"] = carve.Describe();
  r.deficit.details["carved_fraction"] = r.carved_fraction;
  r.deficit.details["target"] = 0.01;
  return r;
}

namespace {

// Angle measure of {phi : |p - w| in [lo, hi]} for |p| = rho, |w| = r (d=2).
double AngleMeasure(double rho, double r, double lo, double hi) {
  if (rho <= 0 || r <= 0) return (r >= lo && r <= hi) ? 2 * kPi : 0.0;
  auto clamp = [](double v) { return std::clamp(v, -1.0, 1.0); };
  double c_lo = clamp((rho * rho + r * r - hi * hi) / (2 * rho * r));
  double c_hi = clamp((rho * rho + r * r - lo * lo) / (2 * rho * r));
  return 2 * (std::acos(c_lo) - std::acos(c_hi));
}

// Area of S cap (p - S) in the plane, |p| = rho.
double SliceArea2(double eta, double rho) {
  const double lo = 1 - eta;
  auto f = [&](double r) { return r * AngleMeasure(rho, r, lo, 1.0); };
  std::vector<double> cuts = {lo, 1.0};
  for (double c : {rho + 1, rho - 1, 1 - rho, rho + lo, rho - lo, lo - rho})
    if (c > lo && c < 1.0) cuts.push_back(c);
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) total += TanhSinh(f, cuts[i], cuts[i + 1]);
  return total;
}

}  // namespace

double OracleVolumeT2(double eta) {
  // vol(T) = int_S area(S cap (2x - S)) dx.
  auto f = [&](double r) { return 2 * kPi * r * SliceArea2(eta, 2 * r); };
  double err = 0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 1 - eta, 1.0, 12,
                                                                        1e-10, &err);
}

double OracleVolumeRy2(double eta, double t) { return SliceArea2(eta, 2 - t); }

double OracleDeficit2(double eta, const Carve& carve, int radial_steps, int angular_steps,
                      int fibre_steps) {
  const double inner = 1 - eta;
  const double outer = carve.kind == Carve::Kind::kRadial ? 1 - carve.size * eta : 1.0;
  auto x1_ok = [&](double x1, double z1) {
    switch (carve.kind) {
      case Carve::Kind::kCap:
        return x1 < 1 - carve.size && z1 - x1 < 1 - carve.size;
      case Carve::Kind::kSlab:
        return std::abs(x1) > carve.size && std::abs(z1 - x1) > carve.size;
      default:
        return true;
    }
  };
  // x2 window for a point with first coordinate u inside the annulus.
  auto fibre = [&](double u, Interval* parts) -> int {
    double b2 = outer * outer - u * u;
    if (b2 < 0) return 0;
    double b = std::sqrt(b2), a = std::sqrt(std::max(0.0, inner * inner - u * u));
    parts[0] = {-b, -a};
    parts[1] = {a, b};
    return 2;
  };
  auto member = [&](double z1, double z2) {
    const double h = 2.0 / fibre_steps;
    for (int k = 0; k < fibre_steps; ++k) {
      // Alternate outward from z1 / 2, where witnesses usually sit.
      int off = (k + 1) / 2 * (k % 2 ? 1 : -1);
      double x1 = z1 / 2 + off * h;
      if (x1 < -1 || x1 > 1) continue;
      if (!x1_ok(x1, z1)) continue;
      Interval p[2], q[2];
      if (!fibre(x1, p) || !fibre(z1 - x1, q)) continue;
      for (auto& iv : q) iv = {z2 - iv.hi, z2 - iv.lo};
      for (auto& a : p)
        for (auto& b : q)
          if (std::max(a.lo, b.lo) <= std::min(a.hi, b.hi)) return true;
    }
    return false;
  };
  const double dr = 2.0 / radial_steps, dt = 2 * kPi / angular_steps;
  double missing = 0;
  for (int i = 0; i < radial_steps; ++i) {
    double rho = (i + 0.5) * dr;
    for (int j = 0; j < angular_steps; ++j) {
      double th = (j + 0.5) * dt;
      if (!member(rho * std::cos(th), rho * std::sin(th))) missing += rho * dr * dt;
    }
  }
  return missing / AnnulusVolume(2, eta);
}

Json ToJson(const VolumeEstimate& v) {
  Json j;
  j["value"] = v.value;
  j["std_error"] = v.std_error;
  j["samples"] = v.samples;
  j["seed"] = v.seed;
  j["method"] = v.method;
  for (auto it = v.details.begin(); it != v.details.end(); ++it) j[it.key()] = it.value();
  return j;
}

Json ToJson(const IntersectionCheck& c) {
  Json j;
  j["trials"] = c.trials;
  j["witnesses"] = c.witnesses;
  j["violations"] = c.violations;
  return j;
}

Json ToJson(const CarvedDeficitReport& r) {
  Json j = ToJson(r.deficit);
  j["mass_budget"] = r.mass_budget;
  j["witness_budget"] = r.witness_budget;
  return j;
}

}  // namespace bsglab
