//
// congrkit - congruences on transformation and matrix monoids
//
// Congruences on the multiplicative monoid of n x n matrices over a small
// prime field: the level-mu form with a normal subgroup of GL(mu, F) and a
// nested chain of unit subgroups, membership, principal congruences, and
// exhaustive parameter enumeration.
//

#ifndef CONGRKIT_MATCONGR_HPP_
#define CONGRKIT_MATCONGR_HPP_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "congrkit/gfmat.hpp"

namespace congrkit {

  //! A non-universal congruence on the matrix monoid: a level mu with a
  //! normal subgroup of GL(mu, F), and unit subgroups G_{mu+1} >= ... >= G_n
  //! controlling the scalar relation above the level.  Requires the nesting
  //! G_n <= ... <= G_{mu+1} and {lambda I_mu : lambda in G_{mu+1}} inside the
  //! level group.
  class MatrixCongruence {
   public:
    MatrixCongruence(Gf field, int dim, int mu, MatrixGroup level_group,
                     std::vector<std::set<int>> scalar_chain);

    static MatrixCongruence identity(Gf field, int dim);
    //! Collapses the ideal of rank <= bound, identity above; bound < dim.
    static MatrixCongruence rees(Gf field, int dim, int bound);

    Gf const& field() const {
      return _field;
    }
    int dim() const {
      return _dim;
    }
    int mu() const {
      return _mu;
    }
    MatrixGroup const& level_group() const {
      return _level_group;
    }
    //! G_{mu+1+t} for t = 0 .. n-mu-1.
    std::vector<std::set<int>> const& scalar_chain() const {
      return _scalar_chain;
    }

    bool related(GfMatrix const& a, GfMatrix const& b) const;

    nlohmann::json to_json() const;
    std::string    to_string() const;

   private:
    Gf                         _field;
    int                        _dim;
    int                        _mu;
    MatrixGroup                _level_group;
    std::vector<std::set<int>> _scalar_chain;
  };

  //! A principal congruence on the matrix monoid: either universal or in
  //! parameter form, with the dispatch case recorded.
  struct MatrixPrincipal {
    std::string                     case_name;
    std::optional<MatrixCongruence> congruence;  // empty means universal

    bool universal() const {
      return !congruence.has_value();
    }
    bool related(GfMatrix const& a, GfMatrix const& b) const {
      return universal() || congruence->related(a, b);
    }
  };

  MatrixPrincipal principal_congruence(GfMatrix const& a, GfMatrix const& b);

  //! Every admissible parameter tuple (not deduplicated by relation); the
  //! universal congruence is not included.
  std::vector<MatrixCongruence> all_matrix_congruences(Gf field, int dim);

}  // namespace congrkit

#endif  // CONGRKIT_MATCONGR_HPP_
