#include <doctest.h>

#include <random>
#include <set>

#include "congrkit/transf.hpp"

using namespace congrkit;

namespace {
  MonoidSpec const T2{Family::T, 2};
  MonoidSpec const T3{Family::T, 3};
  MonoidSpec const PT2{Family::PT, 2};
  MonoidSpec const PT3{Family::PT, 3};
  MonoidSpec const I2{Family::I, 2};
  MonoidSpec const I3{Family::I, 3};
}  // namespace

TEST_CASE("monoid literals and sizes") {
  CHECK(MonoidSpec::parse("T3") == T3);
  CHECK(MonoidSpec::parse("PT3") == PT3);
  CHECK(MonoidSpec::parse("I3") == I3);
  CHECK(T2.size() == 4);
  CHECK(PT2.size() == 9);
  CHECK(I3.size() == 34);  // 1 + 9 + 18 + 6
  CHECK(T2.rank_floor() == 1);
  CHECK(PT2.rank_floor() == 0);
  CHECK(I2.rank_floor() == 0);
  CHECK_THROWS(MonoidSpec::parse("X2"));
  CHECK_THROWS(MonoidSpec(Family::T, 0));
}

TEST_CASE("element literals") {
  auto f = Transformation::parse(PT3, "[2,1,-]");
  CHECK(f[1] == 2);
  CHECK(f[2] == 1);
  CHECK(!f.defined(3));
  CHECK(f.rank() == 2);
  CHECK(f.to_string() == "[2,1,-]");
  CHECK_THROWS(Transformation::parse(T3, "[1,2,-]"));   // total map undefined
  CHECK_THROWS(Transformation::parse(I3, "[1,1,-]"));   // not injective
  CHECK_THROWS(Transformation::parse(T3, "[1,2]"));     // wrong length
}

TEST_CASE("composition") {
  auto id = Transformation::identity(PT3);
  for (auto const& f : enumerate_elements(PT3)) {
    CHECK(compose(id, f) == f);
    CHECK(compose(f, id) == f);
  }
  // constant-to-1 then swap is constant-to-2
  auto c1   = Transformation::parse(T2, "[1,1]");
  auto c2   = Transformation::parse(T2, "[2,2]");
  auto swap = Transformation::parse(T2, "[2,1]");
  CHECK(compose(c1, swap) == c2);
  // partial injective maps can compose to the empty map
  auto p = Transformation::parse(I2, "[2,-]");
  CHECK(compose(p, p) == Transformation::empty_map(I2));
  CHECK_THROWS(compose(c1, Transformation::identity(T3)));
}

TEST_CASE("composition is associative and bounded in rank") {
  std::mt19937 rng(42);
  for (auto spec : {T3, PT3, I3}) {
    auto elems = enumerate_elements(spec);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 500; ++t) {
      auto const& f = elems[pick(rng)];
      auto const& g = elems[pick(rng)];
      auto const& h = elems[pick(rng)];
      CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      CHECK(compose(f, g).rank() <= std::min(f.rank(), g.rank()));
    }
  }
}

TEST_CASE("Green's relations") {
  auto c1 = Transformation::parse(T2, "[1,1]");
  auto c2 = Transformation::parse(T2, "[2,2]");
  CHECK(green_related(c1, c2, GreenRelation::D));
  CHECK(!green_related(c1, c2, GreenRelation::L));
  auto f = Transformation::parse(PT3, "[1,1,2]");
  auto g = Transformation::parse(PT3, "[2,2,3]");
  CHECK(green_related(f, g, GreenRelation::R));
  CHECK(!green_related(f, g, GreenRelation::L));
  CHECK(!green_related(f, g, GreenRelation::H));
  for (auto spec : {T2, PT2, I2}) {
    for (auto const& x : enumerate_elements(spec)) {
      for (auto rel : {GreenRelation::H, GreenRelation::L, GreenRelation::R,
                       GreenRelation::D}) {
        CHECK(green_related(x, x, rel));
      }
    }
  }
  // D coincides with equal rank on every enumerated monoid
  for (auto spec : {T3, PT2, I3}) {
    auto elems = enumerate_elements(spec);
    for (auto const& x : elems) {
      for (auto const& y : elems) {
        CHECK(green_related(x, y, GreenRelation::D) == (x.rank() == y.rank()));
      }
    }
  }
}

TEST_CASE("the right action on a rank class") {
  auto f = Transformation::parse(T2, "[1,2]");
  CHECK(act(f, Permutation::identity(2)) == f);
  CHECK(act(f, Permutation::parse(2, "(1 2)"))
        == Transformation::parse(T2, "[2,1]"));
  auto g = Transformation::parse(T3, "[3,3,1]");
  CHECK(act(g, Permutation::parse(2, "(1 2)"))
        == Transformation::parse(T3, "[1,1,3]"));
  CHECK_THROWS(act(g, Permutation::identity(3)));
}

TEST_CASE("the action is a right action and is simply transitive on H-classes") {
  for (auto spec : {T3, PT2, I3}) {
    auto elems = enumerate_elements(spec);
    for (auto const& f : elems) {
      if (f.rank() < 1) {
        continue;
      }
      auto perms = Permutation::all(f.rank());
      for (auto const& w : perms) {
        CHECK(act(f, Permutation::identity(f.rank())) == f);
        for (auto const& t : perms) {
          CHECK(act(act(f, w), t) == act(f, w * t));
        }
        CHECK(green_related(act(f, w), f, GreenRelation::H));
      }
      // transitivity with a unique witness
      for (auto const& g : elems) {
        if (!green_related(f, g, GreenRelation::H)) {
          CHECK(!hclass_witness(f, g).has_value());
          continue;
        }
        int count = 0;
        for (auto const& w : perms) {
          if (act(f, w) == g) {
            ++count;
          }
        }
        CHECK(count == 1);
        auto s = hclass_witness(f, g);
        REQUIRE(s.has_value());
        CHECK(act(f, *s) == g);
      }
    }
  }
}

TEST_CASE("H-class witnesses") {
  auto id   = Transformation::identity(T2);
  auto swap = Transformation::parse(T2, "[2,1]");
  auto c1   = Transformation::parse(T2, "[1,1]");
  auto c2   = Transformation::parse(T2, "[2,2]");
  CHECK(hclass_witness(id, id) == Permutation::identity(2));
  CHECK(hclass_witness(id, swap) == Permutation::parse(2, "(1 2)"));
  CHECK(!hclass_witness(c1, c2).has_value());
  // the empty map forms its own singleton class
  auto e = Transformation::empty_map(I2);
  auto s = hclass_witness(e, e);
  REQUIRE(s.has_value());
  CHECK(s->degree() == 0);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_elements(T2).size() == 4);
  CHECK(enumerate_elements(PT2).size() == 9);
  CHECK(enumerate_elements(I3).size() == 34);
  for (auto spec : {T3, PT3, I2}) {
    auto        elems = enumerate_elements(spec);
    std::set<Transformation> unique(elems.begin(), elems.end());
    CHECK(unique.size() == elems.size());
    CHECK(elems.size() == spec.size());
  }
  CHECK_THROWS(enumerate_elements(MonoidSpec(Family::T, 5)));
}

TEST_CASE("ideals") {
  Ideal i(T3, 2);
  CHECK(i.contains(Transformation::parse(T3, "[1,1,2]")));
  CHECK(!i.contains(Transformation::identity(T3)));
  CHECK_THROWS(Ideal(T3, 0));   // below the rank floor
  CHECK_THROWS(Ideal(PT2, 3));  // above the degree
}
