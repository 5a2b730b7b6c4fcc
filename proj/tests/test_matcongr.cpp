#include <doctest.h>

#include <set>

#include "congrkit/matcongr.hpp"
#include "congrkit/oracle.hpp"

using namespace congrkit;

namespace {
  Partition materialize(MatrixPrincipal const& c, MatrixUniverse const& u) {
    std::vector<int> block(u.size(), -1);
    int next = 0;
    for (int x = 0; x < u.size(); ++x) {
      if (block[x] >= 0) {
        continue;
      }
      block[x] = next;
      for (int y = x + 1; y < u.size(); ++y) {
        if (block[y] < 0 && c.related(u.elements[x], u.elements[y])) {
          block[y] = next;
        }
      }
      ++next;
    }
    return Partition(std::move(block));
  }

  Partition materialize(MatrixCongruence const& c, MatrixUniverse const& u) {
    return materialize(MatrixPrincipal{"", c}, u);
  }
}  // namespace

TEST_CASE("membership in the level form") {
  Gf f2(2), f3(3);
  // identity parameters relate nothing but equal matrices
  auto ident = MatrixCongruence::identity(f2, 2);
  auto u2    = MatrixUniverse::make(f2, 2);
  CHECK(materialize(ident, u2) == Partition::discrete(16));

  // scalar chain over GF(3): E_2 related to its double
  auto e2 = GfMatrix::identity(f3, 2);
  MatrixCongruence scal(f3, 2, 0, MatrixGroup::trivial(f3, 0),
                        {{1, 2}, {1, 2}});
  CHECK(scal.related(e2, e2.scaled(2)));
  CHECK(scal.related(GfMatrix(f3, 2), GfMatrix(f3, 2)));

  // full unit block at the top level relates all invertibles
  MatrixCongruence top(f2, 2, 2,
                       gl_all_normal_subgroups(f2, 2).back(), {});
  CHECK(top.related(GfMatrix::identity(f2, 2), GfMatrix::parse("0,1;1,0@GF(2)")));

  CHECK_THROWS(MatrixCongruence(f3, 2, 1, MatrixGroup::trivial(f3, 1),
                                {{1, 2}}));  // scalars not inside the level
  CHECK_THROWS(MatrixCongruence(f3, 2, 0, MatrixGroup::trivial(f3, 0),
                                {{1}, {1, 2}}));  // chain not nested
}

TEST_CASE("principal congruence parameters") {
  Gf f2(2), f3(3);
  auto e2 = GfMatrix::identity(f3, 2);
  CHECK(principal_congruence(e2, e2).case_name == "identity");
  auto p = principal_congruence(e2, e2.scaled(2));
  CHECK(p.case_name == "scalar-both");
  CHECK(p.congruence->mu() == 0);
  CHECK(p.congruence->scalar_chain()
        == std::vector<std::set<int>>({{1, 2}, {1, 2}}));

  auto a = GfMatrix::partial_identity(f2, 2, 1);
  auto b = GfMatrix::parse("0,1;0,0@GF(2)");
  auto q = principal_congruence(a, b);  // equal rank, not H-related
  CHECK(q.case_name == "rees");
  CHECK(q.congruence->mu() == 2);

  // not H-related at full rank: universal
  CHECK(principal_congruence(GfMatrix::identity(f2, 2), a).universal());
}

TEST_CASE("principal congruences match the oracle closures") {
  for (int p : {2, 3}) {
    auto u     = MatrixUniverse::make(Gf(p), 2);
    auto table = u.table();
    for (int x = 0; x < u.size(); ++x) {
      for (int y = x; y < u.size(); ++y) {
        auto c  = principal_congruence(u.elements[x], u.elements[y]);
        auto cl = congruence_closure(table, {{x, y}});
        if (materialize(c, u) != cl) {
          CAPTURE(p);
          CAPTURE(u.elements[x].to_string());
          CAPTURE(u.elements[y].to_string());
          REQUIRE(false);
        }
      }
    }
  }
}

TEST_CASE("the admissible parameter tuples cover the lattice exactly") {
  for (int p : {2, 3}) {
    auto u     = MatrixUniverse::make(Gf(p), 2);
    auto table = u.table();
    std::set<Partition> from_parameters;
    for (auto const& c : all_matrix_congruences(Gf(p), 2)) {
      from_parameters.insert(materialize(c, u));
    }
    // the universal congruence is the one non-parameter relation
    from_parameters.insert(Partition(std::vector<int>(u.size(), 0)));
    auto lattice = all_congruences(table);
    CHECK(from_parameters
          == std::set<Partition>(lattice.begin(), lattice.end()));
  }
}

TEST_CASE("parameter json") {
  auto c = MatrixCongruence::rees(Gf(2), 2, 1);
  auto j = c.to_json();
  CHECK(j.at("mu") == 2);
  CHECK(j.at("chain").size() == 0);
  CHECK(c.to_string() == "mu=2, |Gbar|=1, chain=-");
}
