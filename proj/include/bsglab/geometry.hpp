#pragma once

#include <cstdint>
#include <string>

#include "bsglab/io.hpp"

namespace bsglab {

// S = {x in R^d : 1 - eta <= |x| <= 1}.
struct VolumeEstimate {
  double value = 0;
  double std_error = 0;
  int64_t samples = 0;
  uint64_t seed = 0;
  std::string method = "exact";  // exact | monte_carlo | quadrature
  Json details = Json::object();
};

double BallVolume(int d);
// d^{-d/2} <= V_d <= 10^d d^{-d/2}, compared in logarithms.
bool CrudeBallBoundsHold(int d);
VolumeEstimate BallVolumeEstimate(int d);

double AnnulusVolume(int d, double eta);
VolumeEstimate AnnulusVolumeEstimate(int d, double eta);

// int_{1-h}^{1} (1 - x^2)^{(d-1)/2} V_{d-1} dx, relative tolerance 1e-10.
double CapVolume(int d, double h);
VolumeEstimate CapVolumeEstimate(int d, double h);

// Volume of the part of S (with outer radius `outer`) whose first
// coordinate lies in [lo, hi].
double AnnulusSliceVolume(int d, double eta, double lo, double hi, double outer = 1.0);

// vol of S with the 2d corner caps {|x_i| > trim} removed; requires the caps
// to be disjoint (1 - trim <= 1 - 1/sqrt 2).
double TrimmedAnnulusVolume(int d, double eta, double trim);

VolumeEstimate McVolumeT(int d, double eta, int64_t samples, uint64_t seed);

// R_y = S cap (y - S) for y = (2 - t, 0, ..., 0). Also estimates the slab
// subset used in the lower-bound argument and checks it lies inside R_y.
VolumeEstimate McVolumeRy(int d, double eta, double t, int64_t samples, uint64_t seed,
                          double floor_constant = 0.0);
double RyLowerBoundShape(int d, double eta, double t);

struct IntersectionCheck {
  int64_t trials = 0;
  int64_t witnesses = 0;
  int64_t violations = 0;
};
// Samples nearby y1, y2 and looks for x in R_{y1} cap R_{y2}; each witness
// must satisfy |y1 - y2| < 2 (t1^{1/2} + t2^{1/2}).
IntersectionCheck CheckIntersectionLemma(int d, double eta, int64_t trials, uint64_t seed);

struct Carve {
  enum class Kind { kNone, kRadial, kCap, kSlab };
  Kind kind = Kind::kNone;
  // radial: removes |x| > 1 - size * eta; cap: removes x_1 >= 1 - size;
  // slab: removes |x_1| <= size.
  double size = 0;

  static Carve Parse(const std::string& text);  // "none", "radial:0.1", ...
  std::string Describe() const;
  bool Keeps(const double* x, int d, double eta) const;
};

double CarvedMass(int d, double eta, const Carve& carve);

struct CarvedDeficitReport {
  VolumeEstimate deficit;  // vol((S+S) \ (S'+S')) / vol(S)
  double carved_fraction = 0;
  double mass_budget = 0;
  int64_t witness_budget = 0;
};

// Default mass budget 25^{-d} eta^3.
double DefaultCarveBudget(int d, double eta);

CarvedDeficitReport McCarvedDeficit(int d, double eta, const Carve& carve, int64_t samples,
                           uint64_t seed, double mass_budget, int64_t witness_budget = 256);

// Deterministic two-dimensional oracles.
double OracleVolumeT2(double eta);
double OracleVolumeRy2(double eta, double t);
double OracleDeficit2(double eta, const Carve& carve, int radial_steps = 400,
                      int angular_steps = 720, int fibre_steps = 2000);

Json ToJson(const VolumeEstimate& v);
Json ToJson(const IntersectionCheck& c);
Json ToJson(const CarvedDeficitReport& r);

}  // namespace bsglab
