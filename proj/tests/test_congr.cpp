#include <doctest.h>

#include "congrkit/congr.hpp"
#include "congrkit/oracle.hpp"

using namespace congrkit;

namespace {
  MonoidSpec const T2{Family::T, 2};
  MonoidSpec const T3{Family::T, 3};

  // the relation as a partition over the full element list
  Partition materialize(MonoidCongruence const&            c,
                        std::vector<Transformation> const& elems) {
    std::vector<int> block(elems.size(), -1);
    int next = 0;
    for (std::size_t x = 0; x < elems.size(); ++x) {
      if (block[x] >= 0) {
        continue;
      }
      block[x] = next;
      for (std::size_t y = x + 1; y < elems.size(); ++y) {
        if (block[y] < 0 && c.related(elems[x], elems[y])) {
          block[y] = next;
        }
      }
      ++next;
    }
    return Partition(std::move(block));
  }
}  // namespace

TEST_CASE("membership in the level-and-group form") {
  auto c1   = Transformation::parse(T2, "[1,1]");
  auto c2   = Transformation::parse(T2, "[2,2]");
  auto id   = Transformation::identity(T2);
  auto swap = Transformation::parse(T2, "[2,1]");
  auto t2eps = MonoidCongruence::theta(T2, 2, SymNormalSubgroup::trivial(2));
  CHECK(t2eps.related(c1, c2));
  CHECK(!t2eps.related(id, swap));
  auto t2full = MonoidCongruence::theta(T2, 2, SymNormalSubgroup::full(2));
  CHECK(t2full.related(id, swap));
  for (auto const& f : enumerate_elements(T2)) {
    CHECK(t2eps.related(f, f));
    CHECK(t2full.related(f, f));
  }
  CHECK(MonoidCongruence::universal(T2).related(id, c1));
  CHECK_THROWS(MonoidCongruence::theta(T2, 3, SymNormalSubgroup::trivial(3)));
}

TEST_CASE("congruence literals") {
  CHECK(MonoidCongruence::parse(T3, "iota") == MonoidCongruence::identity(T3));
  CHECK(MonoidCongruence::parse(T3, "universal").is_universal());
  auto c = MonoidCongruence::parse(T3, "theta(3,A)");
  CHECK(c.level() == 3);
  CHECK(c.group().kind() == SkKind::alternating);
  CHECK(c.to_string() == "theta(3,A)");
  CHECK(MonoidCongruence::identity(T3).to_string() == "iota");
}

TEST_CASE("principal congruences on a single monoid") {
  auto id   = Transformation::identity(T2);
  auto swap = Transformation::parse(T2, "[2,1]");
  auto c1   = Transformation::parse(T2, "[1,1]");
  CHECK(principal_congruence(id, id) == MonoidCongruence::identity(T2));
  auto p = principal_congruence(id, swap);
  CHECK(p == MonoidCongruence::theta(T2, 2, SymNormalSubgroup::full(2)));
  // collapsing ranks 1 and 2 in T_2 is universal (the ideal is everything)
  CHECK(principal_congruence(id, c1).is_universal());
  auto f = Transformation::parse(T3, "[1,1,1]");
  auto g = Transformation::parse(T3, "[1,1,2]");
  CHECK(principal_congruence(f, g)
        == MonoidCongruence::theta(T3, 3, SymNormalSubgroup::trivial(3)));
}

TEST_CASE("principal congruences equal the closure partitions exhaustively") {
  for (auto spec : {MonoidSpec(Family::T, 2), MonoidSpec(Family::T, 3),
                    MonoidSpec(Family::PT, 2), MonoidSpec(Family::I, 2),
                    MonoidSpec(Family::I, 3)}) {
    auto universe = TransformationUniverse::make(spec);
    auto table    = universe.table();
    for (int x = 0; x < universe.size(); ++x) {
      for (int y = x; y < universe.size(); ++y) {
        auto c = principal_congruence(universe.elements[x], universe.elements[y]);
        CHECK(materialize(c, universe.elements)
              == congruence_closure(table, {{x, y}}));
      }
    }
  }
}

TEST_CASE("the chain of congruences") {
  CHECK(congruence_chain(T2).size() == 4);
  CHECK(congruence_chain(T3).size() == 7);
  CHECK(congruence_chain(MonoidSpec(Family::PT, 3)).size() == 7);
  CHECK(congruence_chain(MonoidSpec(Family::I, 3)).size() == 7);
  // degree 4 inserts the Klein step: 1 + 2 + 3 + 4 levels plus universal
  CHECK(congruence_chain(MonoidSpec(Family::T, 4)).size() == 11);
  CHECK_THROWS(congruence_chain(MonoidSpec(Family::T, 1)));

  // strictly increasing as relations
  auto elems = enumerate_elements(T3);
  auto chain = congruence_chain(T3);
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    bool strict = false;
    for (auto const& x : elems) {
      for (auto const& y : elems) {
        bool lo = chain[t].related(x, y);
        bool hi = chain[t + 1].related(x, y);
        CHECK((!lo || hi));  // inclusion
        strict = strict || (hi && !lo);
      }
    }
    CHECK(strict);
  }
}

TEST_CASE("every congruence in the chain is a congruence") {
  for (auto spec : {MonoidSpec(Family::T, 3), MonoidSpec(Family::PT, 2),
                    MonoidSpec(Family::I, 3)}) {
    auto universe = TransformationUniverse::make(spec);
    auto table    = universe.table();
    for (auto const& c : congruence_chain(spec)) {
      CHECK(is_congruence(table, materialize(c, universe.elements)));
    }
  }
}

TEST_CASE("membership is independent of the H-class ordering") {
  // conjugating every witness by a fixed relabelling of the image positions
  // leaves the relation unchanged, because the group is normal
  for (auto spec : {MonoidSpec(Family::T, 3), MonoidSpec(Family::I, 3)}) {
    auto elems = enumerate_elements(spec);
    for (auto const& c : congruence_chain(spec)) {
      if (c.is_universal()) {
        continue;
      }
      int k = c.level();
      std::vector<int> rev(k);
      for (int t = 0; t < k; ++t) {
        rev[t] = k - 1 - t;
      }
      Permutation reorder{std::vector<int>(rev)};
      for (auto const& x : elems) {
        for (auto const& y : elems) {
          if (x.rank() != k || y.rank() != k) {
            continue;
          }
          auto s = hclass_witness(x, y);
          if (!s) {
            continue;
          }
          auto conj = reorder * *s * reorder.inverse();
          CHECK(c.group().contains(*s) == c.group().contains(conj));
        }
      }
    }
  }
}
