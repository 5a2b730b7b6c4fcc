//
// congrkit - congruences on transformation and matrix monoids
//
// Square matrices over the prime fields GF(2), GF(3), GF(5): modular
// arithmetic, Gaussian elimination, Green's relations, reduction to a
// partial identity, and explicit general linear groups with normal
// closures.
//

#ifndef CONGRKIT_GFMAT_HPP_
#define CONGRKIT_GFMAT_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "congrkit/transf.hpp"  // GreenRelation

namespace congrkit {

  //! A prime field GF(p) for p in {2, 3, 5}.
  struct Gf {
    int p;

    explicit Gf(int characteristic);

    int add(int a, int b) const {
      return (a + b) % p;
    }
    int sub(int a, int b) const {
      return (a - b % p + p) % p;
    }
    int mul(int a, int b) const {
      return (a * b) % p;
    }
    int neg(int a) const {
      return (p - a % p) % p;
    }
    int inv(int a) const;

    //! The nonzero elements 1 .. p-1.
    std::vector<int> units() const;
    //! A generator of the cyclic unit group.
    int unit_generator() const;
    //! All subgroups of the unit group, smallest first.
    std::vector<std::set<int>> unit_subgroups() const;
    //! The subgroup generated by a unit.
    std::set<int> unit_closure(int a) const;

    bool operator==(Gf const& that) const {
      return p == that.p;
    }
    bool operator!=(Gf const& that) const {
      return !(*this == that);
    }
  };

  //! An n x n matrix over GF(p), row major.  Dimension 0 (the empty matrix,
  //! the sole member of the trivial general linear group) is allowed.
  class GfMatrix {
   public:
    GfMatrix(Gf field, int dim);  // zero matrix
    GfMatrix(Gf field, int dim, std::vector<int> entries);

    static GfMatrix identity(Gf field, int dim);
    //! The partial identity with `mu` ones on the diagonal.
    static GfMatrix partial_identity(Gf field, int dim, int mu);
    //! Parse "1,0;1,1@GF(2)"; rows separated by ';', entries by ','.
    static GfMatrix parse(std::string const& text);
    static GfMatrix parse(Gf field, int dim, std::string const& text);

    Gf const& field() const {
      return _field;
    }
    int dim() const {
      return _dim;
    }
    int at(int r, int c) const {
      return _entries[r * _dim + c];
    }
    void set(int r, int c, int v) {
      _entries[r * _dim + c] = v % _field.p;
    }

    GfMatrix operator*(GfMatrix const& that) const;
    GfMatrix scaled(int lambda) const;

    int rank() const;
    bool invertible() const {
      return rank() == _dim;
    }
    GfMatrix inverse() const;

    //! Canonical row-space basis (nonzero rows of the reduced row echelon
    //! form); equal bases iff equal row spaces.
    std::vector<std::vector<int>> row_space_basis() const;
    //! Canonical basis of the column space.
    std::vector<std::vector<int>> image_basis() const;
    //! Canonical basis of the null space {v : Av = 0}.
    std::vector<std::vector<int>> kernel_basis() const;

    std::uint32_t code() const;
    static GfMatrix from_code(Gf field, int dim, std::uint32_t code);

    std::string to_string() const;  // "1,0;1,1@GF(2)"

    bool operator==(GfMatrix const& that) const {
      return _field == that._field && _dim == that._dim && _entries == that._entries;
    }
    bool operator!=(GfMatrix const& that) const {
      return !(*this == that);
    }
    bool operator<(GfMatrix const& that) const {
      return _entries < that._entries;
    }

   private:
    Gf               _field;
    int              _dim;
    std::vector<int> _entries;
  };

  //! lambda with a = lambda * b, if one exists (lambda in F*).
  std::optional<int> scalar_ratio(GfMatrix const& a, GfMatrix const& b);

  //! Invertible (s1, s2) with s1 * a * s2 equal to the partial identity of
  //! rank(a).
  std::pair<GfMatrix, GfMatrix> reduce_to_partial_identity(GfMatrix const& a);

  //! For matrices: R = equal image, L = equal kernel, H = both, D = equal
  //! rank.
  bool green_related(GfMatrix const& a, GfMatrix const& b, GreenRelation rel);

  //! True iff a maps every (n-1)-dimensional subspace of F^n onto itself.
  bool fixes_all_hyperplanes(GfMatrix const& a);

  //! All n x n matrices over GF(p), by ascending code.
  std::vector<GfMatrix> all_matrices(Gf field, int dim, std::uint64_t cap = 1u << 20);

  //! The invertible dim x dim matrices.
  std::vector<GfMatrix> general_linear_group(Gf field, int dim,
                                             std::uint64_t cap = 1u << 20);

  //! A small generating set of GL(dim, p).
  std::vector<GfMatrix> gl_generators(Gf field, int dim);

  namespace detail {
    //! Memoized rank, keyed by (field, dim, code); thread local.
    int cached_rank(GfMatrix const& a);
    //! Memoized H-class id: equal ids iff equal image and kernel.
    int cached_hclass(GfMatrix const& a);
    //! Memoized reduction to the partial identity.
    std::pair<GfMatrix, GfMatrix> const& cached_reduction(GfMatrix const& a);
    //! Memoized top-left block of s1 * other * s2 where (s1, s2) reduces
    //! `base`; the block dimension is rank(base).
    GfMatrix reduced_block(GfMatrix const& base, GfMatrix const& other);
  }  // namespace detail

  //! An explicit subgroup of GL(r, p), stored as matrix codes.
  class MatrixGroup {
   public:
    MatrixGroup(Gf field, int dim);

    static MatrixGroup trivial(Gf field, int dim);

    Gf const& field() const {
      return _field;
    }
    int dim() const {
      return _dim;
    }
    std::size_t size() const {
      return _codes.size();
    }
    bool contains(GfMatrix const& m) const {
      return _codes.count(m.code()) != 0;
    }
    bool contains_code(std::uint32_t c) const {
      return _codes.count(c) != 0;
    }
    void insert(GfMatrix const& m) {
      _codes.insert(m.code());
    }
    bool subgroup_of(MatrixGroup const& that) const;
    std::vector<std::uint32_t> sorted_codes() const;

    bool operator==(MatrixGroup const& that) const;

   private:
    Gf                                _field;
    int                               _dim;
    std::unordered_set<std::uint32_t> _codes;
  };

  //! Smallest normal subgroup of GL(dim, p) containing the seeds.
  MatrixGroup gl_normal_closure(Gf field, int dim,
                                std::vector<GfMatrix> const& seeds);

  //! All normal subgroups of GL(dim, p), as explicit element sets.
  std::vector<MatrixGroup> gl_all_normal_subgroups(Gf field, int dim);

}  // namespace congrkit

#endif  // CONGRKIT_GFMAT_HPP_
