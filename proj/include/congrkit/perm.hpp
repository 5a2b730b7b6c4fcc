//
// congrkit - congruences on transformation and matrix monoids
//
// Permutations of {1, ..., degree} with left-to-right composition.
//

#ifndef CONGRKIT_PERM_HPP_
#define CONGRKIT_PERM_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace congrkit {

  enum class Parity { even, odd };

  //! A permutation of {1, ..., degree}. Internally 0-based; degree 0 (the
  //! empty permutation) is allowed and acts as the identity of the trivial
  //! group.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int degree);
    //! Transposition of the 1-based points a and b.
    static Permutation transposition(int degree, int a, int b);
    //! Parse cycle notation with 1-based points, e.g. "(1 2)(3 4)"; "()" or
    //! "id" is the identity.
    static Permutation parse(int degree, std::string const& text);
    static std::vector<Permutation> all(int degree);

    int degree() const {
      return static_cast<int>(_images.size());
    }

    //! Image of the 0-based point x.
    int operator[](int x) const {
      return _images[x];
    }

    bool        is_identity() const;
    Permutation inverse() const;

    //! Left-to-right composition: (p * q)[x] = q[p[x]].
    Permutation operator*(Permutation const& that) const;

    bool operator==(Permutation const& that) const {
      return _images == that._images;
    }
    bool operator!=(Permutation const& that) const {
      return !(*this == that);
    }
    bool operator<(Permutation const& that) const {
      return _images < that._images;
    }

    std::uint64_t code() const;
    std::string   to_cycles() const;

   private:
    std::vector<int> _images;
  };

  Parity parity(Permutation const& p);
  bool   is_even(Permutation const& p);

}  // namespace congrkit

#endif  // CONGRKIT_PERM_HPP_
