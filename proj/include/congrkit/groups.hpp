//
// congrkit - congruences on transformation and matrix monoids
//
// Normal subgroups of S_k and of S_i x S_k in classified form, normal
// closures, and an explicit breadth-first closure used as a cross-check.
//

#ifndef CONGRKIT_GROUPS_HPP_
#define CONGRKIT_GROUPS_HPP_

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "congrkit/perm.hpp"

namespace congrkit {

  enum class SkKind { trivial, klein4, alternating, full };

  //! A normal subgroup of S_k in classified form.  Constructors canonicalize
  //! the degenerate degrees: for k <= 1 every kind collapses to trivial, and
  //! for k = 2 the alternating subgroup collapses to trivial.
  class SymNormalSubgroup {
   public:
    SymNormalSubgroup(int degree, SkKind kind);

    static SymNormalSubgroup trivial(int degree) {
      return SymNormalSubgroup(degree, SkKind::trivial);
    }
    static SymNormalSubgroup full(int degree) {
      return SymNormalSubgroup(degree, SkKind::full);
    }
    //! Parse one of "eps", "V4", "A", "S".
    static SymNormalSubgroup parse(int degree, std::string const& text);

    int degree() const {
      return _degree;
    }
    SkKind kind() const {
      return _kind;
    }
    bool is_trivial() const {
      return _kind == SkKind::trivial;
    }

    bool contains(Permutation const& p) const;
    bool subgroup_of(SymNormalSubgroup const& that) const;
    //! True iff every member is an even permutation.
    bool even_only() const;

    std::uint64_t size() const;
    std::string   to_string() const;

    bool operator==(SymNormalSubgroup const& that) const {
      return _degree == that._degree && _kind == that._kind;
    }
    bool operator!=(SymNormalSubgroup const& that) const {
      return !(*this == that);
    }

   private:
    int    _degree;
    SkKind _kind;
  };

  //! Smallest normal subgroup of S_degree containing p, in classified form.
  SymNormalSubgroup normal_closure(int degree, Permutation const& p);

  //! The distinct normal subgroups of S_degree, smallest first.
  std::vector<SymNormalSubgroup> all_normal_subgroups(int degree);

  //! A normal subgroup of S_i x S_k: either a product of normal subgroups of
  //! the factors, or the index-2 subgroup of pairs with equal parity.
  class ProductNormalSubgroup {
   public:
    static ProductNormalSubgroup product(SymNormalSubgroup left,
                                         SymNormalSubgroup right);
    static ProductNormalSubgroup parity_diagonal(int left_degree,
                                                 int right_degree);
    //! Parse "parity" or "<N1>x<N2>" with factors from {eps, V4, A, S}.
    static ProductNormalSubgroup parse(int                left_degree,
                                       int                right_degree,
                                       std::string const& text);

    bool is_parity_diagonal() const {
      return _diagonal;
    }
    int left_degree() const {
      return _left.degree();
    }
    int right_degree() const {
      return _right.degree();
    }
    //! The classified factors; only meaningful for product form.
    SymNormalSubgroup const& left() const;
    SymNormalSubgroup const& right() const;

    bool contains(Permutation const& a, Permutation const& b) const;
    bool subgroup_of(ProductNormalSubgroup const& that) const;

    //! First projection {a : (a, b) in N for some b}, a normal subgroup of
    //! the left factor.
    SymNormalSubgroup project_left() const;
    SymNormalSubgroup project_right() const;
    //! {a : (a, id) in N}.
    SymNormalSubgroup left_fiber() const;
    //! {b : (id, b) in N}.
    SymNormalSubgroup right_fiber() const;

    std::uint64_t size() const;
    std::string   to_string() const;

    bool operator==(ProductNormalSubgroup const& that) const;
    bool operator!=(ProductNormalSubgroup const& that) const {
      return !(*this == that);
    }

   private:
    ProductNormalSubgroup(SymNormalSubgroup l, SymNormalSubgroup r, bool diag);

    SymNormalSubgroup _left;
    SymNormalSubgroup _right;
    bool              _diagonal;
  };

  //! Smallest normal subgroup of S_i x S_k containing (a, b): the parity
  //! diagonal when both are odd, otherwise the product of the closures.
  ProductNormalSubgroup normal_closure(int                left_degree,
                                       int                right_degree,
                                       Permutation const& a,
                                       Permutation const& b);

  //! All normal subgroups of S_i x S_k: every product combination plus the
  //! parity diagonal when both degrees are at least 2.
  std::vector<ProductNormalSubgroup> all_normal_subgroups(int left_degree,
                                                          int right_degree);

  //! Explicit closure machinery, used to cross-check the classified forms.
  namespace bruteforce {

    using PermPair = std::pair<std::uint64_t, std::uint64_t>;

    //! Element set of the normal closure of p in S_degree, as codes.
    std::set<std::uint64_t> normal_closure_elements(int                degree,
                                                    Permutation const& p);

    //! Element set of the normal closure of (a, b) in S_i x S_k.
    std::set<PermPair> normal_closure_elements(int                left_degree,
                                               int                right_degree,
                                               Permutation const& a,
                                               Permutation const& b);

    //! Every normal subgroup of S_i x S_k as an explicit element set, found
    //! by closing the single-element closures under join.
    std::vector<std::set<PermPair>> all_normal_subgroups_elements(
        int left_degree,
        int right_degree);

    //! Element set of a classified subgroup, for comparisons.
    std::set<std::uint64_t> elements(SymNormalSubgroup const& n);
    std::set<PermPair>      elements(ProductNormalSubgroup const& n);

  }  // namespace bruteforce

}  // namespace congrkit

#endif  // CONGRKIT_GROUPS_HPP_
