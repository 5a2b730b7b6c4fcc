#include <doctest.h>

#include <set>

#include "congrkit/landscape.hpp"

using namespace congrkit;

namespace {
  Landscape universal_landscape(ProductSpec spec) {
    std::vector<GridCell> cells;
    for (int i = spec.left.rank_floor(); i <= spec.left.degree; ++i) {
      for (int j = spec.right.rank_floor(); j <= spec.right.degree; ++j) {
        cells.push_back({i, j});
      }
    }
    return Landscape(spec, {LandscapePart::ff(std::move(cells))});
  }

  Landscape identity_landscape(ProductSpec spec) {
    std::vector<LandscapePart> parts;
    for (int i = spec.left.rank_floor(); i <= spec.left.degree; ++i) {
      for (int j = spec.right.rank_floor(); j <= spec.right.degree; ++j) {
        parts.push_back(LandscapePart::single_cell(
            PartKind::EE, {i, j},
            ProductNormalSubgroup::product(SymNormalSubgroup::trivial(i),
                                           SymNormalSubgroup::trivial(j))));
      }
    }
    return Landscape(spec, std::move(parts));
  }

  Landscape parity_corner_landscape() {
    auto spec = ProductSpec::parse("T2xT2");
    std::vector<LandscapePart> parts;
    parts.push_back(LandscapePart::ff({{1, 1}}));
    parts.push_back(LandscapePart::row_strip(PartKind::HF, 2, 1, 1,
                                             SymNormalSubgroup::full(2)));
    parts.push_back(LandscapePart::column_strip(PartKind::FH, 2, 1, 1,
                                                SymNormalSubgroup::full(2)));
    parts.push_back(LandscapePart::single_cell(
        PartKind::HH, {2, 2}, ProductNormalSubgroup::parity_diagonal(2, 2)));
    return Landscape(spec, std::move(parts));
  }
}  // namespace

TEST_CASE("validation accepts the basic shapes") {
  CHECK(validate(universal_landscape(ProductSpec::parse("T2xT2"))).empty());
  CHECK(validate(identity_landscape(ProductSpec::parse("PT2xI2"))).empty());
  CHECK(validate(parity_corner_landscape()).empty());
}

TEST_CASE("validation rejects an unsupported strip") {
  auto spec = ProductSpec::parse("T2xT2");
  std::vector<LandscapePart> parts;
  parts.push_back(LandscapePart::single_cell(
      PartKind::EE, {1, 1},
      ProductNormalSubgroup::product(SymNormalSubgroup::trivial(1),
                                     SymNormalSubgroup::trivial(1))));
  parts.push_back(LandscapePart::row_strip(PartKind::HF, 2, 1, 1,
                                           SymNormalSubgroup::full(2)));
  parts.push_back(LandscapePart::column_strip(PartKind::FE, 2, 1, 2,
                                              SymNormalSubgroup::trivial(2)));
  auto violations = validate(Landscape(spec, std::move(parts)));
  REQUIRE(!violations.empty());
  bool found = false;
  for (auto const& v : violations) {
    found = found || v.condition == 4;
  }
  CHECK(found);
}

TEST_CASE("validation flags incomplete covers") {
  auto spec = ProductSpec::parse("T2xT2");
  auto violations
      = validate(Landscape(spec, {LandscapePart::ff({{1, 1}, {1, 2}})}));
  REQUIRE(!violations.empty());
  CHECK(violations.front().condition == 0);
}

TEST_CASE("membership through a landscape") {
  auto l    = parity_corner_landscape();
  auto spec = l.spec();
  auto id   = Transformation::identity(spec.left);
  auto sw   = Transformation::parse(spec.left, "[2,1]");
  auto c1   = Transformation::parse(spec.left, "[1,1]");
  auto c2   = Transformation::parse(spec.left, "[2,2]");
  CHECK(related(l, {id, sw}, {sw, id}));
  CHECK(!related(l, {id, id}, {id, sw}));
  CHECK(related(l, {c1, c2}, {c2, c1}));   // inside FF
  CHECK(related(l, {id, c1}, {sw, c2}));   // HF strip
  CHECK(!related(l, {id, c1}, {c1, id}));  // different parts

  auto u = universal_landscape(spec);
  CHECK(related(u, {id, id}, {c1, c2}));
  auto i = identity_landscape(spec);
  CHECK(related(i, {id, sw}, {id, sw}));
  CHECK(!related(i, {id, sw}, {id, id}));
}

TEST_CASE("landscapes of principal congruences") {
  auto spec = ProductSpec::parse("T2xT2");
  auto id   = Transformation::identity(spec.left);
  auto sw   = Transformation::parse(spec.left, "[2,1]");

  auto pc = ProductPrincipal::make(spec, {id, id}, {sw, sw});
  auto l  = landscape_of_principal(pc);
  CHECK(l == parity_corner_landscape());
  CHECK(validate(l).empty());

  auto ident = landscape_of_principal(
      ProductPrincipal::make(spec, {id, id}, {id, id}));
  CHECK(ident == identity_landscape(spec));
}

TEST_CASE("landscapes agree with the closed form pointwise") {
  for (auto name : {"T2xT2", "I2xT2"}) {
    auto spec = ProductSpec::parse(name);
    auto u    = ProductUniverse::make(spec.left, spec.right);
    for (int x = 0; x < u.size(); ++x) {
      for (int y = 0; y < u.size(); ++y) {
        auto pc = ProductPrincipal::make(spec, u.element(x), u.element(y));
        auto l  = landscape_of_principal(pc);
        CHECK(validate(l).empty());
        for (int a = 0; a < u.size(); ++a) {
          for (int b = 0; b < u.size(); ++b) {
            if (related(l, u.element(a), u.element(b))
                != pc.related(u.element(a), u.element(b))) {
              CAPTURE(to_string(u.element(x)));
              CAPTURE(to_string(u.element(y)));
              CAPTURE(to_string(u.element(a)));
              CAPTURE(to_string(u.element(b)));
              REQUIRE(false);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration matches the oracle lattice") {
  for (auto name : {"T2xT2", "I2xT2"}) {
    auto spec       = ProductSpec::parse(name);
    auto landscapes = enumerate_landscapes(spec);
    auto u          = ProductUniverse::make(spec.left, spec.right);
    auto table      = u.table();
    auto lattice    = all_congruences(table);
    CHECK(landscapes.size() == lattice.size());
    // every landscape is valid and its relation is one of the lattice's
    std::set<Partition> relations;
    for (auto const& l : landscapes) {
      CHECK(validate(l).empty());
      std::vector<int> block(u.size(), -1);
      int next = 0;
      for (int x = 0; x < u.size(); ++x) {
        if (block[x] >= 0) {
          continue;
        }
        block[x] = next;
        for (int y = x + 1; y < u.size(); ++y) {
          if (block[y] < 0 && related(l, u.element(x), u.element(y))) {
            block[y] = next;
          }
        }
        ++next;
      }
      Partition p(std::move(block));
      CHECK(is_congruence(table, p));
      relations.insert(p);
    }
    CHECK(relations.size() == landscapes.size());  // pairwise distinct
    CHECK(relations == std::set<Partition>(lattice.begin(), lattice.end()));
  }
}

TEST_CASE("enumeration rejects excluded factors") {
  CHECK_THROWS(ProductSpec::parse("T1xT2"));
  CHECK_THROWS(
      enumerate_landscapes(ProductSpec::parse("T2xT3"), /* degree_cap = */ 2));
}

TEST_CASE("rendering and parsing round trip") {
  for (auto const& l : enumerate_landscapes(ProductSpec::parse("T2xT2"))) {
    CHECK(parse_landscape(render(l)) == l);
    CHECK(parse_landscape(render(l, true)) == l);
    CHECK(landscape_from_json(to_json(l)) == l);
  }
  auto u = universal_landscape(ProductSpec::parse("T2xT2"));
  auto text = render(u);
  CHECK(text.find("FF") != std::string::npos);
  CHECK(parse_landscape(text) == u);
}
