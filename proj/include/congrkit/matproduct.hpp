//
// congrkit - congruences on transformation and matrix monoids
//
// Principal congruences on a product of two matrix monoids: the associated
// normal subgroup of GL(i,F) x GL(j,F), its scalar-paired variant over
// F* x GL(j,F), and the full case dispatch with exact membership.
//

#ifndef CONGRKIT_MATPRODUCT_HPP_
#define CONGRKIT_MATPRODUCT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "congrkit/gfmat.hpp"
#include "congrkit/matcongr.hpp"

namespace congrkit {

  using MatrixPair = std::pair<GfMatrix, GfMatrix>;

  //! A normal subgroup of GL(i, F) x GL(j, F), stored explicitly.
  class MatrixPairGroup {
   public:
    MatrixPairGroup(Gf field, int left_dim, int right_dim);

    Gf const& field() const {
      return _field;
    }
    int left_dim() const {
      return _left_dim;
    }
    int right_dim() const {
      return _right_dim;
    }
    std::size_t size() const {
      return _codes.size();
    }
    bool contains(GfMatrix const& a, GfMatrix const& b) const;
    void insert(GfMatrix const& a, GfMatrix const& b);
    bool subgroup_of(MatrixPairGroup const& that) const;
    //! {x : (x, y) in H for some y}, a normal subgroup of GL(i, F).
    MatrixGroup project_left() const;
    MatrixGroup project_right() const;
    std::vector<std::uint64_t> sorted_codes() const;

    bool operator==(MatrixPairGroup const& that) const;

   private:
    Gf                                _field;
    int                               _left_dim;
    int                               _right_dim;
    std::unordered_set<std::uint64_t> _codes;
  };

  //! Normal closure of the seed pairs inside GL(i, F) x GL(j, F).
  MatrixPairGroup pair_normal_closure(Gf field, int left_dim, int right_dim,
                                      std::vector<MatrixPair> const& seeds);

  //! The normal subgroup of GL(i,F) x GL(j,F) associated with a pair of
  //! componentwise H-related product elements: reduce the first element to
  //! the partial identities and take the normal closure of the image of the
  //! second.  Independent of the chosen reduction.
  MatrixPairGroup associated_normal_subgroup(MatrixPair const& a,
                                             MatrixPair const& b);

  //! A normal subgroup of F* x GL(j, F), stored explicitly.
  class ScalarMatrixGroup {
   public:
    ScalarMatrixGroup(Gf field, int dim);

    std::size_t size() const {
      return _codes.size();
    }
    bool contains(int lambda, GfMatrix const& m) const;
    void insert(int lambda, GfMatrix const& m);
    bool subgroup_of(ScalarMatrixGroup const& that) const;

    bool operator==(ScalarMatrixGroup const& that) const;

   private:
    Gf                                _field;
    int                               _dim;
    std::unordered_set<std::uint64_t> _codes;
  };

  //! Normal closure of (lambda, m) inside F* x GL(j, F).
  ScalarMatrixGroup scalar_pair_normal_closure(
      Gf field, int dim, std::vector<std::pair<int, GfMatrix>> const& seeds);

  //! The principal congruence on a product of two matrix monoids, as a
  //! tagged case with an exact membership predicate.
  class MatrixProductPrincipal {
   public:
    enum class Case {
      identity,     // generators equal
      scalar_both,  // both coordinates scalar multiples
      rees,         // neither coordinate pair H-related
      h_right,      // right pair H-related, left pair not
      h_left,       // left pair H-related, right pair not
      scalar_h,     // left scalar, right H-related non-scalar
      h_scalar,     // left H-related non-scalar, right scalar
      h_both        // both H-related, neither scalar
    };

    static MatrixProductPrincipal make(MatrixPair const& a, MatrixPair const& b);

    Case tag() const {
      return _tag;
    }
    std::string case_name() const;

    bool related(GfMatrix const& a, GfMatrix const& b, GfMatrix const& c,
                 GfMatrix const& d) const;
    bool related(MatrixPair const& x, MatrixPair const& y) const {
      return related(x.first, x.second, y.first, y.second);
    }

    std::string describe() const;

   private:
    MatrixProductPrincipal(MatrixPair a, MatrixPair b);

    bool in_rees_ideal(GfMatrix const& a, GfMatrix const& b) const;

    Case       _tag;
    MatrixPair _gen_a;
    MatrixPair _gen_b;
    // case payload
    int _left_bound  = -1;
    int _right_bound = -1;
    std::optional<std::set<std::pair<int, int>>> _scalar_pairs;  // scalar_both
    std::optional<MatrixPrincipal>    _side;        // h_right / h_left factor form
    std::optional<ScalarMatrixGroup>  _scalar_side; // scalar_h / h_scalar
    std::optional<std::set<int>>      _scalar_gen;  // cyclic group of the ratio
    std::optional<MatrixPairGroup>    _joint;       // h_both
    std::optional<MatrixGroup>        _joint_left;  // projections of _joint
    std::optional<MatrixGroup>        _joint_right;
    bool _side_is_right = false;
  };

}  // namespace congrkit

#endif  // CONGRKIT_MATPRODUCT_HPP_
