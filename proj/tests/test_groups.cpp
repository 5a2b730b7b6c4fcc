#include <doctest.h>

#include <set>

#include "congrkit/groups.hpp"

using namespace congrkit;

TEST_CASE("permutation basics") {
  auto p = Permutation::parse(4, "(1 2)(3 4)");
  CHECK(p.to_cycles() == "(1 2)(3 4)");
  CHECK(p * p == Permutation::identity(4));
  CHECK(Permutation::parse(3, "()").is_identity());
  CHECK(Permutation::parse(3, "(1 2 3)").inverse()
        == Permutation::parse(3, "(1 3 2)"));
  // left-to-right composition
  auto a = Permutation::parse(3, "(1 2)");
  auto b = Permutation::parse(3, "(2 3)");
  CHECK((a * b)[0] == 2);  // 1 -> 2 -> 3
  CHECK(Permutation::all(4).size() == 24);
  CHECK_THROWS(Permutation::parse(2, "(1 3)"));
}

TEST_CASE("parity") {
  CHECK(parity(Permutation::identity(3)) == Parity::even);
  CHECK(parity(Permutation::parse(2, "(1 2)")) == Parity::odd);
  CHECK(parity(Permutation::parse(3, "(1 2 3)")) == Parity::even);
  // multiplicative under composition
  for (auto const& a : Permutation::all(4)) {
    for (auto const& b : Permutation::all(4)) {
      CHECK(is_even(a * b) == (is_even(a) == is_even(b)));
    }
  }
}

TEST_CASE("classified normal subgroups of a symmetric group") {
  CHECK(normal_closure(3, Permutation::identity(3)).kind() == SkKind::trivial);
  CHECK(normal_closure(4, Permutation::parse(4, "(1 2)(3 4)")).kind()
        == SkKind::klein4);
  CHECK(normal_closure(3, Permutation::parse(3, "(1 2 3)")).kind()
        == SkKind::alternating);
  CHECK(normal_closure(2, Permutation::parse(2, "(1 2)")).kind() == SkKind::full);
  CHECK(all_normal_subgroups(1).size() == 1);
  CHECK(all_normal_subgroups(2).size() == 2);
  CHECK(all_normal_subgroups(3).size() == 3);
  CHECK(all_normal_subgroups(4).size() == 4);
  CHECK(all_normal_subgroups(5).size() == 3);
  CHECK_THROWS(SymNormalSubgroup(3, SkKind::klein4));
}

TEST_CASE("closures match the breadth-first element sets") {
  for (int k = 1; k <= 4; ++k) {
    for (auto const& p : Permutation::all(k)) {
      auto classified = normal_closure(k, p);
      CHECK(bruteforce::elements(classified)
            == bruteforce::normal_closure_elements(k, p));
      // minimality: contained in every classified subgroup containing p
      for (auto const& n : all_normal_subgroups(k)) {
        if (n.contains(p)) {
          CHECK(classified.subgroup_of(n));
        }
      }
    }
  }
}

TEST_CASE("product closures") {
  auto id2 = Permutation::identity(2);
  CHECK(normal_closure(2, 2, id2, id2)
        == ProductNormalSubgroup::product(SymNormalSubgroup::trivial(2),
                                          SymNormalSubgroup::trivial(2)));
  auto swap = Permutation::parse(2, "(1 2)");
  auto diag = normal_closure(2, 2, swap, swap);
  CHECK(diag.is_parity_diagonal());
  CHECK(diag.size() == 2);
  auto n = normal_closure(3, 3, Permutation::parse(3, "(1 2 3)"),
                          Permutation::parse(3, "(1 2)"));
  CHECK(!n.is_parity_diagonal());
  CHECK(n.left().kind() == SkKind::alternating);
  CHECK(n.right().kind() == SkKind::full);

  for (int i = 2; i <= 3; ++i) {
    for (int k = 2; k <= 3; ++k) {
      for (auto const& a : Permutation::all(i)) {
        for (auto const& b : Permutation::all(k)) {
          CHECK(bruteforce::elements(normal_closure(i, k, a, b))
                == bruteforce::normal_closure_elements(i, k, a, b));
        }
      }
    }
  }
}

TEST_CASE("all normal subgroups of a product") {
  CHECK(all_normal_subgroups(2, 2).size() == 5);
  CHECK(all_normal_subgroups(1, 3).size() == 3);
  CHECK(all_normal_subgroups(3, 4).size() == 13);

  for (auto [i, k] : {std::pair{2, 2}, {1, 3}, {2, 3}, {3, 3}}) {
    std::set<std::set<bruteforce::PermPair>> classified;
    for (auto const& n : all_normal_subgroups(i, k)) {
      classified.insert(bruteforce::elements(n));
    }
    CHECK(classified.size() == all_normal_subgroups(i, k).size());
    auto exhaustive = bruteforce::all_normal_subgroups_elements(i, k);
    CHECK(classified
          == std::set<std::set<bruteforce::PermPair>>(exhaustive.begin(),
                                                      exhaustive.end()));
  }
}

TEST_CASE("the parity diagonal") {
  auto diag = ProductNormalSubgroup::parity_diagonal(3, 4);
  auto even = ProductNormalSubgroup::product(
      SymNormalSubgroup(3, SkKind::alternating),
      SymNormalSubgroup(4, SkKind::alternating));
  CHECK(even.subgroup_of(diag));
  CHECK(diag.size() * 2 == 6u * 24u);
  CHECK(diag.project_left().kind() == SkKind::full);
  CHECK(diag.left_fiber().kind() == SkKind::alternating);
  CHECK_THROWS(ProductNormalSubgroup::parity_diagonal(1, 3));
}

TEST_CASE("subgroup literals") {
  CHECK(SymNormalSubgroup::parse(4, "V4").kind() == SkKind::klein4);
  CHECK(SymNormalSubgroup::parse(3, "A").to_string() == "A");
  CHECK(ProductNormalSubgroup::parse(2, 3, "Sxeps").left().kind() == SkKind::full);
  CHECK(ProductNormalSubgroup::parse(2, 2, "parity").is_parity_diagonal());
  CHECK_THROWS(SymNormalSubgroup::parse(3, "B"));
}
