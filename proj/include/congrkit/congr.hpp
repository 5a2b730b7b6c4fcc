//
// congrkit - congruences on transformation and matrix monoids
//
// Congruences on a single transformation monoid: the level-and-group form,
// membership, principal congruences, and the full chain.
//

#ifndef CONGRKIT_CONGR_HPP_
#define CONGRKIT_CONGR_HPP_

#include <string>
#include <vector>

#include "congrkit/groups.hpp"
#include "congrkit/transf.hpp"

namespace congrkit {

  //! A congruence on a transformation monoid: either universal or described
  //! by a level k with 1 <= k <= n and a normal subgroup N of S_k.  Two
  //! elements are related iff they are equal above rank k, anything below
  //! rank k, or H-related at rank k with a witness in N.
  class MonoidCongruence {
   public:
    static MonoidCongruence universal(MonoidSpec spec);
    static MonoidCongruence theta(MonoidSpec spec, int level, SymNormalSubgroup group);
    //! The identity congruence, theta(1, eps).
    static MonoidCongruence identity(MonoidSpec spec);
    //! The Rees congruence collapsing the ideal of rank <= bound; universal
    //! when bound = n.
    static MonoidCongruence rees(MonoidSpec spec, int ideal_bound);
    //! Parse "universal", "iota", or "theta(k,N)" with N in {eps, V4, A, S}.
    static MonoidCongruence parse(MonoidSpec spec, std::string const& text);

    MonoidSpec const& monoid() const {
      return _spec;
    }
    bool is_universal() const {
      return _universal;
    }
    bool is_identity() const;
    int  level() const;
    SymNormalSubgroup const& group() const;

    bool related(Transformation const& f, Transformation const& g) const;

    std::string to_string() const;

    //! Structural equality on canonical parameters; distinct parameters give
    //! distinct relations on the ambient monoid.
    bool operator==(MonoidCongruence const& that) const;
    bool operator!=(MonoidCongruence const& that) const {
      return !(*this == that);
    }

   private:
    MonoidCongruence(MonoidSpec spec, bool universal, int level, SymNormalSubgroup group);

    MonoidSpec        _spec;
    bool              _universal;
    int               _level;
    SymNormalSubgroup _group;
  };

  //! The least congruence relating f and g.
  MonoidCongruence principal_congruence(Transformation const& f,
                                        Transformation const& g);

  //! The congruences of the monoid in increasing order, from the identity up
  //! to the universal congruence.  Requires degree >= 2.
  std::vector<MonoidCongruence> congruence_chain(MonoidSpec spec);

}  // namespace congrkit

#endif  // CONGRKIT_CONGR_HPP_
