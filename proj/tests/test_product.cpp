#include <doctest.h>

#include <random>

#include "congrkit/product.hpp"

using namespace congrkit;

namespace {
  Partition closure_of(ProductUniverse const& u, MonoidTable const& table,
                       int x, int y) {
    return congruence_closure(table, {{x, y}});
  }

  // exhaustive comparison of the closed form against the oracle closure
  void sweep(ProductSpec spec) {
    auto u     = ProductUniverse::make(spec.left, spec.right);
    auto table = u.table();
    for (int x = 0; x < u.size(); ++x) {
      auto ex = u.element(x);
      for (int y = 0; y < u.size(); ++y) {
        auto ey = u.element(y);
        auto pc = ProductPrincipal::make(spec, ex, ey);
        auto cl = closure_of(u, table, x, y);
        for (int a = 0; a < u.size(); ++a) {
          auto ea = u.element(a);
          for (int b = 0; b < u.size(); ++b) {
            if (pc.related(ea.first, ea.second, u.element(b).first,
                           u.element(b).second)
                != cl.same(a, b)) {
              CAPTURE(spec.to_string());
              CAPTURE(to_string(ex));
              CAPTURE(to_string(ey));
              CAPTURE(to_string(ea));
              CAPTURE(to_string(u.element(b)));
              REQUIRE(false);
            }
          }
        }
      }
    }
  }
}  // namespace

TEST_CASE("product literals") {
  auto spec = ProductSpec::parse("PT3xI2");
  CHECK(spec.left == MonoidSpec(Family::PT, 3));
  CHECK(spec.right == MonoidSpec(Family::I, 2));
  CHECK(spec.to_string() == "PT3xI2");
  CHECK_THROWS(ProductSpec::parse("T1xT2"));  // trivial factor excluded
  CHECK_THROWS(ProductSpec::parse("T2"));
  auto e = parse_product_element(ProductSpec::parse("T2xT2"), "([1,2],[2,1])");
  CHECK(e.first == Transformation::identity(MonoidSpec(Family::T, 2)));
}

TEST_CASE("case dispatch") {
  auto spec = ProductSpec::parse("T2xT2");
  auto id   = Transformation::identity(spec.left);
  auto sw   = Transformation::parse(spec.left, "[2,1]");
  auto c1   = Transformation::parse(spec.left, "[1,1]");
  auto c2   = Transformation::parse(spec.left, "[2,2]");

  CHECK(ProductPrincipal::make(spec, {id, id}, {id, id}).tag()
        == ProductPrincipal::Case::identity);
  CHECK(ProductPrincipal::make(spec, {c1, id}, {c1, sw}).tag()
        == ProductPrincipal::Case::fixed_left);
  CHECK(ProductPrincipal::make(spec, {c1, id}, {c2, id}).tag()
        == ProductPrincipal::Case::fixed_right);
  CHECK(ProductPrincipal::make(spec, {c1, c1}, {c2, c2}).tag()
        == ProductPrincipal::Case::rees);
  CHECK(ProductPrincipal::make(spec, {c1, id}, {c2, sw}).tag()
        == ProductPrincipal::Case::h_right);
  CHECK(ProductPrincipal::make(spec, {id, c1}, {sw, c2}).tag()
        == ProductPrincipal::Case::h_left);
  auto both = ProductPrincipal::make(spec, {id, id}, {sw, sw});
  CHECK(both.tag() == ProductPrincipal::Case::h_both);
  REQUIRE(both.joint_group().has_value());
  CHECK(both.joint_group()->is_parity_diagonal());
}

TEST_CASE("the doubly H-related case on the smallest product") {
  auto spec = ProductSpec::parse("T2xT2");
  auto id   = Transformation::identity(spec.left);
  auto sw   = Transformation::parse(spec.left, "[2,1]");
  auto pc   = ProductPrincipal::make(spec, {id, id}, {sw, sw});
  // five classes: 4 + 4 + 4 + 2 + 2
  auto u     = ProductUniverse::make(spec.left, spec.right);
  auto table = u.table();
  auto cl    = closure_of(u, table, u.index_of(id, id), u.index_of(sw, sw));
  CHECK(cl.number_of_blocks() == 5);
  CHECK(pc.related({id, sw}, {sw, id}));
  CHECK(!pc.related({id, id}, {id, sw}));
}

TEST_CASE("principal congruences of products match the oracle exhaustively") {
  sweep(ProductSpec::parse("T2xT2"));
  sweep(ProductSpec::parse("I2xT2"));  // mixed families and rank floors
}

TEST_CASE("sampled sweep on a larger product") {
  auto spec  = ProductSpec::parse("T3xT2");
  auto u     = ProductUniverse::make(spec.left, spec.right);
  auto table = u.table();
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(0, u.size() - 1);
  for (int t = 0; t < 40; ++t) {
    int  x  = pick(rng), y = pick(rng);
    auto pc = ProductPrincipal::make(spec, u.element(x), u.element(y));
    auto cl = closure_of(u, table, x, y);
    for (int a = 0; a < u.size(); ++a) {
      for (int b = 0; b < u.size(); ++b) {
        REQUIRE(pc.related(u.element(a), u.element(b)) == cl.same(a, b));
      }
    }
  }
}

TEST_CASE("slices of a product congruence") {
  auto spec = ProductSpec::parse("T2xT2");
  auto id   = Transformation::identity(spec.left);
  auto sw   = Transformation::parse(spec.left, "[2,1]");
  auto c1   = Transformation::parse(spec.left, "[1,1]");
  auto c2   = Transformation::parse(spec.left, "[2,2]");
  auto pc   = ProductPrincipal::make(spec, {c1, id}, {c1, sw});
  auto rel  = [&](Transformation const& a, Transformation const& b,
                  Transformation const& c, Transformation const& d) {
    return pc.related(a, b, c, d);
  };
  auto elems = enumerate_elements(spec.right);
  auto slice = theta_slice(rel, c2, elems);
  // the slice at the other constant equals theta(2, S) on the right factor
  auto expected = MonoidCongruence::theta(spec.right, 2, SymNormalSubgroup::full(2));
  for (std::size_t x = 0; x < elems.size(); ++x) {
    for (std::size_t y = 0; y < elems.size(); ++y) {
      CHECK(slice.same(static_cast<int>(x), static_cast<int>(y))
            == expected.related(elems[x], elems[y]));
    }
  }
  // identity and universal slices
  auto idp = ProductPrincipal::make(spec, {id, id}, {id, id});
  auto idr = [&](Transformation const& a, Transformation const& b,
                 Transformation const& c, Transformation const& d) {
    return idp.related(a, b, c, d);
  };
  CHECK(theta_slice(idr, c1, elems) == Partition::discrete(4));
}

TEST_CASE("slices are monotone in the rank of the fixed element") {
  auto spec  = ProductSpec::parse("T2xT2");
  auto u     = ProductUniverse::make(spec.left, spec.right);
  auto table = u.table();
  auto elems = enumerate_elements(spec.right);
  for (int x = 0; x < u.size(); ++x) {
    for (int y = x + 1; y < u.size(); ++y) {
      auto cl  = closure_of(u, table, x, y);
      auto rel = [&](Transformation const& a, Transformation const& b,
                     Transformation const& c, Transformation const& d) {
        return cl.same(u.index_of(a, b), u.index_of(c, d));
      };
      for (auto const& f : enumerate_elements(spec.left)) {
        for (auto const& f2 : enumerate_elements(spec.left)) {
          if (f2.rank() > f.rank()) {
            continue;
          }
          CHECK(theta_slice(rel, f, elems).refines(theta_slice(rel, f2, elems)));
          if (f2.rank() == f.rank()) {
            CHECK(theta_slice(rel, f, elems) == theta_slice(rel, f2, elems));
          }
        }
      }
    }
  }
}

TEST_CASE("ideal classes are unions of rank rectangles") {
  auto spec  = ProductSpec::parse("PT2xPT2");
  auto u     = ProductUniverse::make(spec.left, spec.right);
  auto table = u.table();
  auto zero  = u.index_of(Transformation::empty_map(spec.left),
                          Transformation::empty_map(spec.right));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, u.size() - 1);
  for (int t = 0; t < 60; ++t) {
    auto cl = closure_of(u, table, pick(rng), pick(rng));
    // the class of the zero element, rebuilt from rank rectangles
    std::vector<bool> in_class(u.size()), in_union(u.size());
    for (int x = 0; x < u.size(); ++x) {
      in_class[x] = cl.same(zero, x);
    }
    for (int x = 0; x < u.size(); ++x) {
      if (!in_class[x]) {
        continue;
      }
      auto [a, b] = u.element(x);
      for (int y = 0; y < u.size(); ++y) {
        auto [c, d] = u.element(y);
        if (c.rank() <= a.rank() && d.rank() <= b.rank()) {
          in_union[y] = true;
        }
      }
    }
    CHECK(in_class == in_union);
  }
}

TEST_CASE("the two readings of the fixed-coordinate case differ as flagged") {
  auto spec = ProductSpec::parse("T2xT2");
  auto id   = Transformation::identity(spec.left);
  auto sw   = Transformation::parse(spec.left, "[2,1]");
  auto c1   = Transformation::parse(spec.left, "[1,1]");
  auto u    = ProductUniverse::make(spec.left, spec.right);
  auto pc   = ProductPrincipal::make(spec, {c1, id}, {c1, sw});
  auto diff = fixed_case_reading_differences(pc, u);
  CHECK(!diff.empty());
  // the oracle sides with the bounded reading
  auto table = u.table();
  auto cl    = closure_of(u, table, u.index_of(c1, id), u.index_of(c1, sw));
  for (auto [x, y] : diff) {
    CHECK(cl.same(x, y) == pc.related(u.element(x), u.element(y)));
    CHECK(cl.same(x, y) != pc.related_unbounded_variant(
                               u.element(x).first, u.element(x).second,
                               u.element(y).first, u.element(y).second));
  }
}
