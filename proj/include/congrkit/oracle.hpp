//
// congrkit - congruences on transformation and matrix monoids
//
// Family-agnostic brute force: abstract multiplication tables, congruence
// closure from generating pairs, and exhaustive congruence-lattice
// enumeration.  Everything downstream is checked against this module.
//

#ifndef CONGRKIT_ORACLE_HPP_
#define CONGRKIT_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "congrkit/gfmat.hpp"
#include "congrkit/transf.hpp"

namespace congrkit {

  //! A finite monoid as an explicit multiplication table.  Construction
  //! checks the identity law always and associativity exhaustively up to
  //! size 300 (sampled above that).
  class MonoidTable {
   public:
    MonoidTable(int size, std::vector<std::uint16_t> table, int identity);

    int size() const {
      return _size;
    }
    int identity() const {
      return _identity;
    }
    int product(int a, int b) const {
      return _table[static_cast<std::size_t>(a) * _size + b];
    }

    nlohmann::json     to_json() const;
    static MonoidTable from_json(nlohmann::json const& j);

   private:
    int                        _size;
    std::vector<std::uint16_t> _table;
    int                        _identity;
  };

  //! A partition of {0, ..., N-1} in normalized form: blocks are numbered by
  //! first occurrence.
  class Partition {
   public:
    explicit Partition(std::vector<int> block_of);

    static Partition discrete(int n);

    int size() const {
      return static_cast<int>(_block_of.size());
    }
    int block_of(int x) const {
      return _block_of[x];
    }
    bool same(int a, int b) const {
      return _block_of[a] == _block_of[b];
    }
    int number_of_blocks() const {
      return _blocks;
    }
    std::vector<std::vector<int>> blocks() const;

    //! True iff every block of this partition lies inside a block of that.
    bool refines(Partition const& that) const;

    bool operator==(Partition const& that) const {
      return _block_of == that._block_of;
    }
    bool operator!=(Partition const& that) const {
      return !(*this == that);
    }
    bool operator<(Partition const& that) const {
      return _block_of < that._block_of;
    }

    nlohmann::json to_json() const;

   private:
    std::vector<int> _block_of;
    int              _blocks;
  };

  //! Least congruence of the table containing the generating pairs.
  Partition congruence_closure(MonoidTable const&                      table,
                               std::vector<std::pair<int, int>> const& pairs);

  //! The full congruence lattice, as normalized partitions in sorted order.
  //! All principal congruences are computed and then closed under join.
  std::vector<Partition> all_congruences(MonoidTable const& table, int cap = 150);

  //! Independent compatibility check: the partition is an equivalence by
  //! construction; this verifies left and right compatibility directly.
  bool is_congruence(MonoidTable const& table, Partition const& p);

  //
  // Concrete universes: element lists in a fixed order together with their
  // multiplication tables, so oracle indices can be mapped back to elements.
  //

  struct TransformationUniverse {
    MonoidSpec                  spec;
    std::vector<Transformation> elements;

    static TransformationUniverse make(MonoidSpec spec, int degree_cap = 4);

    int         size() const;
    int         index_of(Transformation const& t) const;
    MonoidTable table() const;
  };

  struct ProductUniverse {
    TransformationUniverse left;
    TransformationUniverse right;

    static ProductUniverse make(MonoidSpec l, MonoidSpec r, int size_cap = 1000);

    int size() const;
    int fuse(int li, int ri) const;
    std::pair<int, int> split(int idx) const;
    int index_of(Transformation const& a, Transformation const& b) const;
    std::pair<Transformation, Transformation> element(int idx) const;
    MonoidTable table() const;
  };

  struct MatrixUniverse {
    Gf                    field;
    int                   dim;
    std::vector<GfMatrix> elements;

    static MatrixUniverse make(Gf field, int dim, int size_cap = 1000);

    int         size() const;
    int         index_of(GfMatrix const& m) const;
    MonoidTable table() const;
  };

  struct MatrixProductUniverse {
    MatrixUniverse left;
    MatrixUniverse right;

    static MatrixProductUniverse make(Gf lf, int lm, Gf rf, int rn,
                                      int size_cap = 1000);

    int size() const;
    int fuse(int li, int ri) const;
    std::pair<int, int> split(int idx) const;
    MonoidTable table() const;
  };

}  // namespace congrkit

#endif  // CONGRKIT_ORACLE_HPP_
