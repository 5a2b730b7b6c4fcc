//
// congrkit - congruences on transformation and matrix monoids
//
// Elements of the full (T), partial (PT) and injective partial (I)
// transformation monoids on {1, ..., n}: composition, Green's relations,
// ideals, and the right action of the symmetric group on a rank class.
//

#ifndef CONGRKIT_TRANSF_HPP_
#define CONGRKIT_TRANSF_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "congrkit/perm.hpp"

namespace congrkit {

  enum class Family { T, PT, I };

  std::string to_string(Family f);

  //! A monoid of transformations: a family tag together with a degree.
  struct MonoidSpec {
    Family family;
    int    degree;

    MonoidSpec(Family f, int n);

    //! Smallest rank occurring in the monoid: 1 for T, 0 for PT and I.
    int rank_floor() const {
      return family == Family::T ? 1 : 0;
    }

    //! n^n for T, (n+1)^n for PT, sum_k C(n,k)^2 k! for I.
    std::uint64_t size() const;

    std::string to_string() const;
    //! Parse a literal such as "T3", "PT3" or "I3".
    static MonoidSpec parse(std::string const& text);

    bool operator==(MonoidSpec const& that) const {
      return family == that.family && degree == that.degree;
    }
    bool operator!=(MonoidSpec const& that) const {
      return !(*this == that);
    }
  };

  //! A total, partial or injective partial map on {1, ..., n}.  Images are
  //! stored as a fixed-length vector of 1-based points with 0 marking an
  //! undefined value.  Values are immutable after construction.
  class Transformation {
   public:
    Transformation(MonoidSpec spec, std::vector<int> images);

    static Transformation identity(MonoidSpec spec);
    static Transformation constant(MonoidSpec spec, int value);
    static Transformation empty_map(MonoidSpec spec);
    //! Parse a literal such as "[2,1,-]" (1 -> 2, 2 -> 1, 3 undefined).
    static Transformation parse(MonoidSpec spec, std::string const& text);

    MonoidSpec const& monoid() const {
      return _spec;
    }
    int degree() const {
      return _spec.degree;
    }

    //! Value at the 1-based point x, or 0 when undefined.
    int operator[](int x) const {
      return _images[x - 1];
    }
    bool defined(int x) const {
      return _images[x - 1] != 0;
    }

    int rank() const {
      return _rank;
    }

    //! Sorted distinct values.
    std::vector<int> image() const;
    //! Sorted points at which the map is defined.
    std::vector<int> domain() const;
    //! Canonical kernel-and-domain key: entry x is the least point with the
    //! same value as x, or 0 when x is outside the domain.  Two maps have
    //! equal keys iff they have the same domain and kernel.
    std::vector<int> kernel_key() const;

    std::uint64_t code() const;
    std::string   to_string() const;

    bool operator==(Transformation const& that) const {
      return _spec == that._spec && _images == that._images;
    }
    bool operator!=(Transformation const& that) const {
      return !(*this == that);
    }
    bool operator<(Transformation const& that) const {
      return _images < that._images;
    }

   private:
    MonoidSpec       _spec;
    std::vector<int> _images;
    int              _rank;
  };

  //! Left-to-right composition: x(fg) = (xf)g.
  Transformation compose(Transformation const& f, Transformation const& g);

  enum class GreenRelation { H, L, R, D };

  //! D = equal rank, L = equal image, R = equal domain and kernel,
  //! H = L and R.
  bool green_related(Transformation const& f,
                     Transformation const& g,
                     GreenRelation         rel);

  //! Right action of S_i on the rank-i elements: with im f = {a_1 < ... < a_i}
  //! in ascending order, x (f . w) = a_{(j)w} where x f = a_j.
  Transformation act(Transformation const& f, Permutation const& w);

  //! The unique s with act(f, s) == g when f and g are H-related; empty
  //! otherwise.
  std::optional<Permutation> hclass_witness(Transformation const& f,
                                            Transformation const& g);

  //! All elements of the monoid, in a fixed lexicographic order.
  std::vector<Transformation> enumerate_elements(MonoidSpec spec,
                                                 int        degree_cap = 4);

  //! The ideal of all elements of rank at most `bound`.
  struct Ideal {
    MonoidSpec monoid;
    int        bound;

    Ideal(MonoidSpec spec, int b);

    bool contains(Transformation const& f) const {
      return f.rank() <= bound;
    }
  };

}  // namespace congrkit

#endif  // CONGRKIT_TRANSF_HPP_
