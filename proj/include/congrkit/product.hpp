//
// congrkit - congruences on transformation and matrix monoids
//
// Principal congruences on a product of two transformation monoids: the
// case analysis produces a closed-form membership predicate per generating
// pair.
//

#ifndef CONGRKIT_PRODUCT_HPP_
#define CONGRKIT_PRODUCT_HPP_

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "congrkit/congr.hpp"
#include "congrkit/groups.hpp"
#include "congrkit/oracle.hpp"
#include "congrkit/transf.hpp"

namespace congrkit {

  //! A direct product of two transformation monoids.  The degenerate factors
  //! T_0, T_1, PT_0 and I_0 are rejected; mixed families are allowed.
  struct ProductSpec {
    MonoidSpec left;
    MonoidSpec right;

    ProductSpec(MonoidSpec l, MonoidSpec r);

    //! Parse a literal such as "T2xT2" or "PT3xI2".
    static ProductSpec parse(std::string const& text);
    std::string to_string() const;

    bool operator==(ProductSpec const& that) const {
      return left == that.left && right == that.right;
    }
    bool operator!=(ProductSpec const& that) const {
      return !(*this == that);
    }
  };

  using ProductElement = std::pair<Transformation, Transformation>;

  //! Parse "([1,2],[2,1])" against a product spec.
  ProductElement parse_product_element(ProductSpec const& spec,
                                       std::string const& text);
  std::string to_string(ProductElement const& e);

  //! The principal congruence on a product, as a tagged closed form with an
  //! exact membership predicate.
  class ProductPrincipal {
   public:
    enum class Case {
      identity,     // generators equal
      fixed_left,   // f = f', g != g'
      fixed_right,  // g = g', f != f'
      rees,         // neither coordinate pair H-related
      h_right,      // right pair H-related, left pair not
      h_left,       // left pair H-related, right pair not
      h_both        // both coordinate pairs H-related and unequal
    };

    static ProductPrincipal make(ProductSpec const&    spec,
                                 ProductElement const& a,
                                 ProductElement const& b);

    Case tag() const {
      return _tag;
    }
    std::string case_name() const;
    ProductSpec const& spec() const {
      return _spec;
    }
    ProductElement const& generator_a() const {
      return _gen_a;
    }
    ProductElement const& generator_b() const {
      return _gen_b;
    }

    //! Rank bound on the left (resp. right) coordinate, where the case has
    //! one; -1 otherwise.
    int left_bound() const {
      return _left_bound;
    }
    int right_bound() const {
      return _right_bound;
    }
    //! The single-factor congruence the case delegates to, when present.
    std::optional<MonoidCongruence> const& theta_left() const {
      return _theta_left;
    }
    std::optional<MonoidCongruence> const& theta_right() const {
      return _theta_right;
    }
    //! The joint normal subgroup for the doubly H-related case.
    std::optional<ProductNormalSubgroup> const& joint_group() const {
      return _joint;
    }

    bool related(Transformation const& a,
                 Transformation const& b,
                 Transformation const& c,
                 Transformation const& d) const;
    bool related(ProductElement const& x, ProductElement const& y) const {
      return related(x.first, x.second, y.first, y.second);
    }

    //! Variant reading of the fixed-coordinate cases that drops the rank
    //! bound on the repeated coordinate at the H-level; diagnostic only, the
    //! bounded reading is the implemented relation.
    bool related_unbounded_variant(Transformation const& a,
                                   Transformation const& b,
                                   Transformation const& c,
                                   Transformation const& d) const;

    std::string describe() const;

   private:
    ProductPrincipal(ProductSpec spec, ProductElement a, ProductElement b);

    bool in_rees_ideal(Transformation const& a, Transformation const& b) const;

    ProductSpec    _spec;
    Case           _tag;
    ProductElement _gen_a;
    ProductElement _gen_b;
    int            _left_bound  = -1;
    int            _right_bound = -1;
    std::optional<MonoidCongruence>      _theta_left;
    std::optional<MonoidCongruence>      _theta_right;
    std::optional<ProductNormalSubgroup> _joint;
  };

  //! The slice {(g, g') : (f, g) ~ (f, g')} of a product relation at a fixed
  //! left element, as a partition of the supplied right-factor elements.
  Partition theta_slice(
      std::function<bool(Transformation const&, Transformation const&,
                         Transformation const&, Transformation const&)> const&
                                         related,
      Transformation const&              f,
      std::vector<Transformation> const& right_elements);

  //! Pairs on which the bounded and unbounded readings of a fixed-coordinate
  //! case disagree, as oracle indices into the product universe.
  std::vector<std::pair<int, int>> fixed_case_reading_differences(
      ProductPrincipal const& pc,
      ProductUniverse const&  universe);

}  // namespace congrkit

#endif  // CONGRKIT_PRODUCT_HPP_
