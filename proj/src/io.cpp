#include "bsglab/io.hpp"

#include <fstream>
#include <sstream>

#include "bsglab/error.hpp"

namespace bsglab {

Json ToJson(const IntSet& a) {
  Json j;
  j["type"] = "int_set";
  if (a.size() > kElementListLimit) {
    j["size"] = a.size();
    Json runs = Json::array();
    for (const Run& r : a.runs()) runs.push_back({r.lo, r.hi});
    j["runs"] = std::move(runs);
  } else {
    j["elements"] = a.elements();
  }
  return j;
}

Json ToJson(const LatticeSet& a) {
  Json j;
  j["type"] = "lattice_set";
  j["dim"] = a.dim();
  j["box_radius"] = a.box_radius();
  Json pts = Json::array();
  for (int64_t i = 0; i < a.size(); ++i) {
    auto p = a.point(i);
    pts.push_back(std::vector<int64_t>(p.begin(), p.end()));
  }
  j["points"] = std::move(pts);
  return j;
}

Json ToJson(const PairConstraint& g) {
  Json j;
  j["type"] = "pair_complement";
  j["left_size"] = g.left_size();
  j["right_size"] = g.right_size();
  Json removed = Json::array();
  for (const auto& [i, k] : g.removed()) removed.push_back({i, k});
  j["removed"] = std::move(removed);
  return j;
}

IntSet IntSetFromJson(const Json& j) {
  Require(j.is_object() && j.value("type", "") == "int_set",
          "expected a JSON object of type int_set");
  if (j.contains("runs")) {
    std::vector<Run> runs;
    for (const auto& r : j.at("runs")) {
      Require(r.is_array() && r.size() == 2, "int_set runs must be [lo, hi] pairs");
      Run run{r[0].get<int64_t>(), r[1].get<int64_t>()};
      Require(run.lo <= run.hi, "int_set run with lo > hi");
      runs.push_back(run);
    }
    IntSet s = IntSet::FromRuns(std::move(runs));
    if (j.contains("size"))
      Require(j.at("size").get<int64_t>() == s.size(), "int_set size field mismatch");
    return s;
  }
  return IntSet::FromSorted(j.at("elements").get<std::vector<int64_t>>());
}

LatticeSet LatticeSetFromJson(const Json& j) {
  Require(j.is_object() && j.value("type", "") == "lattice_set",
          "expected a JSON object of type lattice_set");
  int dim = j.at("dim").get<int>();
  int64_t radius = j.at("box_radius").get<int64_t>();
  std::vector<int64_t> flat;
  for (const auto& p : j.at("points")) {
    Require(p.is_array() && static_cast<int>(p.size()) == dim,
            "lattice point has the wrong dimension");
    for (const auto& c : p) flat.push_back(c.get<int64_t>());
  }
  return LatticeSet::FromSortedFlat(dim, radius, std::move(flat));
}

PairConstraint PairConstraintFromJson(const Json& j) {
  Require(j.is_object() && j.value("type", "") == "pair_complement",
          "expected a JSON object of type pair_complement");
  std::vector<IndexPair> removed;
  int64_t max_i = -1, max_j = -1;
  for (const auto& p : j.at("removed")) {
    Require(p.is_array() && p.size() == 2, "removed entries must be [i, j] pairs");
    IndexPair q{p[0].get<int64_t>(), p[1].get<int64_t>()};
    max_i = std::max(max_i, q.first);
    max_j = std::max(max_j, q.second);
    removed.push_back(q);
  }
  int64_t left = j.contains("left_size") ? j.at("left_size").get<int64_t>() : max_i + 1;
  int64_t right = j.contains("right_size") ? j.at("right_size").get<int64_t>() : max_j + 1;
  return PairConstraint::Unbound(left, right, std::move(removed));
}

void WriteJson(std::ostream& os, const IntSet& a) {
  if (a.size() > kElementListLimit) {
    os << "{\"type\":\"int_set\",\"size\":" << a.size() << ",\"runs\":[";
    bool first = true;
    for (const Run& r : a.runs()) {
      if (!first) os << ',';
      first = false;
      os << '[' << r.lo << ',' << r.hi << ']';
    }
  } else {
    os << "{\"type\":\"int_set\",\"elements\":[";
    bool first = true;
    a.for_each([&](int64_t x) {
      if (!first) os << ',';
      first = false;
      os << x;
    });
  }
  os << "]}";
}

void WriteJson(std::ostream& os, const PairConstraint& g) {
  os << "{\"type\":\"pair_complement\",\"left_size\":" << g.left_size()
     << ",\"right_size\":" << g.right_size() << ",\"removed\":[";
  bool first = true;
  for (const auto& [i, k] : g.removed()) {
    if (!first) os << ',';
    first = false;
    os << '[' << i << ',' << k << ']';
  }
  os << "]}";
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  Require(static_cast<bool>(in), "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  Require(static_cast<bool>(out), "cannot write " + path);
  out << text;
  Require(static_cast<bool>(out), "write failed for " + path);
}

}  // namespace bsglab
