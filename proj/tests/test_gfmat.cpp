#include <doctest.h>

#include <random>

#include "congrkit/gfmat.hpp"

using namespace congrkit;

TEST_CASE("field arithmetic") {
  Gf f3(3);
  CHECK(f3.add(2, 2) == 1);
  CHECK(f3.inv(2) == 2);
  CHECK(f3.unit_generator() == 2);
  CHECK(f3.unit_subgroups().size() == 2);
  Gf f5(5);
  CHECK(f5.unit_subgroups().size() == 3);  // {1}, {1,4}, all
  CHECK(f5.unit_closure(4) == std::set<int>({1, 4}));
  CHECK_THROWS(Gf(4));
}

TEST_CASE("matrix literals and products") {
  auto a = GfMatrix::parse("1,0;1,1@GF(2)");
  CHECK(a.at(1, 0) == 1);
  CHECK(a.to_string() == "1,0;1,1@GF(2)");
  CHECK(a * a == GfMatrix::identity(Gf(2), 2));
  CHECK(GfMatrix::from_code(Gf(2), 2, a.code()) == a);
  CHECK_THROWS(GfMatrix::parse("1,0;1@GF(2)"));
  CHECK_THROWS(GfMatrix::parse("1,0;1,1"));
}

TEST_CASE("rank, image and kernel") {
  CHECK(GfMatrix::identity(Gf(2), 2).rank() == 2);
  auto zero = GfMatrix(Gf(2), 2);
  CHECK(zero.rank() == 0);
  CHECK(zero.kernel_basis().size() == 2);
  auto a = GfMatrix::parse("1,0;1,0@GF(2)");
  CHECK(a.rank() == 1);
  CHECK(a.image_basis() == std::vector<std::vector<int>>{{1, 1}});
  // rank-nullity across a whole monoid
  for (auto const& m : all_matrices(Gf(3), 2)) {
    CHECK(m.rank() + static_cast<int>(m.kernel_basis().size()) == 2);
  }
}

TEST_CASE("Green's relations on matrices") {
  auto a = GfMatrix::parse("1,0;1,0@GF(2)");
  auto b = GfMatrix::parse("1,1;1,1@GF(2)");
  // same column space, different kernels
  CHECK(green_related(a, b, GreenRelation::R));
  CHECK(!green_related(a, b, GreenRelation::L));
  CHECK(green_related(a, b, GreenRelation::D));
  for (auto const& m : all_matrices(Gf(2), 2)) {
    CHECK(green_related(m, m, GreenRelation::H));
  }
}

TEST_CASE("scalar ratios") {
  auto e2 = GfMatrix::identity(Gf(3), 2);
  CHECK(scalar_ratio(e2, e2) == 1);
  CHECK(scalar_ratio(e2.scaled(2), e2) == 2);
  CHECK(!scalar_ratio(GfMatrix::identity(Gf(2), 2),
                      GfMatrix::parse("1,1;0,1@GF(2)"))
             .has_value());
}

TEST_CASE("reduction to the partial identity") {
  for (auto p : {2, 3}) {
    for (auto const& m : all_matrices(Gf(p), 2)) {
      auto [s1, s2] = reduce_to_partial_identity(m);
      CHECK(s1.invertible());
      CHECK(s2.invertible());
      CHECK(s1 * m * s2 == GfMatrix::partial_identity(Gf(p), 2, m.rank()));
    }
  }
  auto a = GfMatrix::parse("0,1;0,0@GF(2)");
  auto [s1, s2] = reduce_to_partial_identity(a);
  CHECK(s1 * a * s2 == GfMatrix::partial_identity(Gf(2), 2, 1));
}

TEST_CASE("only scalar multiples of the identity fix every hyperplane") {
  for (auto p : {2, 3}) {
    for (int n : {2, 3}) {
      for (auto const& m : all_matrices(Gf(p), n)) {
        bool scalar = scalar_ratio(m, GfMatrix::identity(Gf(p), n)).has_value();
        CHECK(fixes_all_hyperplanes(m) == scalar);
      }
    }
  }
}

TEST_CASE("general linear groups") {
  CHECK(general_linear_group(Gf(2), 2).size() == 6);
  CHECK(general_linear_group(Gf(3), 2).size() == 48);
  CHECK(general_linear_group(Gf(2), 3).size() == 168);
  CHECK(general_linear_group(Gf(2), 0).size() == 1);
  // the generator set generates
  for (auto p : {2, 3, 5}) {
    auto gl = general_linear_group(Gf(p), 2);
    MatrixGroup closure = gl_normal_closure(Gf(p), 2, gl_generators(Gf(p), 2));
    CHECK(closure.size() == gl.size());
  }
}

TEST_CASE("normal closures inside a general linear group") {
  // GL(2,2) is the symmetric group on three points: three normal subgroups
  CHECK(gl_all_normal_subgroups(Gf(2), 2).size() == 3);
  // GL(2,3): trivial, centre, the quaternion group, SL, GL
  auto subs = gl_all_normal_subgroups(Gf(3), 2);
  CHECK(subs.size() == 5);
  std::vector<std::size_t> sizes;
  for (auto const& s : subs) {
    sizes.push_back(s.size());
  }
  CHECK(sizes == std::vector<std::size_t>({1, 2, 8, 24, 48}));
  // closures are minimal over the classified list
  for (auto const& m : general_linear_group(Gf(3), 2)) {
    auto c = gl_normal_closure(Gf(3), 2, {m});
    CHECK(c.contains(m));
    for (auto const& s : subs) {
      if (s.contains(m)) {
        CHECK(c.subgroup_of(s));
      }
    }
  }
}
