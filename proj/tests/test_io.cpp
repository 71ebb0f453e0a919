#include <filesystem>
#include <sstream>

#include "doctest.h"

#include "bsglab/error.hpp"
#include "bsglab/io.hpp"
#include "bsglab/manifest.hpp"
#include "bsglab/rational.hpp"

using namespace bsglab;

TEST_CASE("int set JSON round trip") {
  IntSet a = IntSet::FromSorted({-4, 0, 1, 2, 9});
  Json j = ToJson(a);
  CHECK(j["type"] == "int_set");
  CHECK(j["elements"].size() == 5);
  CHECK(IntSetFromJson(j) == a);
  std::ostringstream os;
  WriteJson(os, a);
  CHECK(os.str() == j.dump());
}

TEST_CASE("large int sets are written as runs") {
  IntSet a = Union(IntSet::Interval(0, 2'000'000), IntSet::FromSorted({5'000'000}));
  Json j = ToJson(a);
  CHECK(j.contains("runs"));
  CHECK(IntSetFromJson(j) == a);
  std::ostringstream os;
  WriteJson(os, a);
  CHECK(os.str() == j.dump());
}

TEST_CASE("lattice set JSON round trip") {
  LatticeSet a = LatticeSet::FromPoints(2, 3, {{1, 2}, {-3, 0}, {0, 0}});
  Json j = ToJson(a);
  CHECK(j["type"] == "lattice_set");
  CHECK(j["dim"] == 2);
  CHECK(j["box_radius"] == 3);
  CHECK(LatticeSetFromJson(j) == a);
}

TEST_CASE("pair constraint JSON round trip") {
  IntSet a = IntSet::Interval(1, 5);
  PairConstraint g = PairConstraint::ForIntSets(a, a, {{0, 1}, {4, 4}});
  Json j = ToJson(g);
  CHECK(j["type"] == "pair_complement");
  PairConstraint back = PairConstraintFromJson(j);
  CHECK(back == g);
  back.CheckReferences(a, a);
  CHECK_THROWS_AS(back.CheckReferences(a, IntSet::Interval(1, 3)), PreconditionError);
  std::ostringstream os;
  WriteJson(os, g);
  CHECK(os.str() == j.dump());
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(IntSetFromJson(Json{{"type", "lattice_set"}}), PreconditionError);
  CHECK_THROWS_AS(IntSetFromJson(Json{{"type", "int_set"}, {"elements", {3, 1}}}),
                  PreconditionError);
  CHECK_THROWS_AS(PairConstraintFromJson(Json{{"type", "pair_complement"}, {"removed", {{1}}}}),
                  PreconditionError);
  CHECK_THROWS_AS(
      LatticeSetFromJson(Json{{"type", "lattice_set"}, {"dim", 2}, {"box_radius", 1},
                              {"points", {{0, 5}}}}),
      PreconditionError);
}

TEST_CASE("rationals") {
  CHECK(ParseRational("1/8") == Rational(1, 8));
  CHECK(ParseRational("0.125") == Rational(1, 8));
  CHECK(ParseRational("1.5e-4") == Rational(3, 20000));
  CHECK(ParseRational("-2") == Rational(-2));
  CHECK(FormatRational(Rational(6, 4)) == "3/2");
  CHECK(FloorTimes(Rational(1, 3), 10) == 3);
  CHECK(FloorTimes(Rational(-1, 3), 10) == -4);
  CHECK_THROWS_AS(ParseRational("x"), PreconditionError);
  CHECK_THROWS_AS(ParseRational("1/0"), PreconditionError);
}

TEST_CASE("sha256 and manifests") {
  CHECK(Sha256Hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  RunManifest m1, m2;
  m1.command = m2.command = "geom mc-T";
  m1.params = m2.params = Json{{"d", 3}};
  m1.seed = m2.seed = 5;
  CHECK(m1.Key() == m2.Key());
  m2.seed = 6;
  CHECK(m1.Key() != m2.Key());
  auto path = (std::filesystem::temp_directory_path() / "bsglab_io_test.txt").string();
  WriteTextFile(path, "abc");
  m1.AddOutput(path);
  CHECK(m1.outputs[0].second == Sha256Hex("abc"));
  Json j = ToJson(m1);
  CHECK(j["outputs"][0]["sha256"] == Sha256Hex("abc"));
  std::filesystem::remove(path);
}
