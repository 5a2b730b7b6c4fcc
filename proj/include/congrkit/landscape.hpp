//
// congrkit - congruences on transformation and matrix monoids
//
// The grid-of-rank-classes picture of a congruence on a product of two
// transformation monoids: typed parts over the grid with attached normal
// subgroups, an eleven-condition validator, membership, an exhaustive
// enumerator, and text/JSON codecs.
//

#ifndef CONGRKIT_LANDSCAPE_HPP_
#define CONGRKIT_LANDSCAPE_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "congrkit/groups.hpp"
#include "congrkit/product.hpp"

namespace congrkit {

  //! The nine part types over {F, H, e}^2; `e` stands for the
  //! equality-constrained component.
  enum class PartKind { FF, HF, EF, FH, FE, HH, EH, HE, EE };

  std::string to_string(PartKind k);
  PartKind    part_kind_from_string(std::string const& s);

  //! Index (i, j) of the rank class D_{i,j}.
  struct GridCell {
    int i;
    int j;

    bool operator==(GridCell const& o) const {
      return i == o.i && j == o.j;
    }
    bool operator!=(GridCell const& o) const {
      return !(*this == o);
    }
    bool operator<(GridCell const& o) const {
      return i < o.i || (i == o.i && j < o.j);
    }
  };

  //! One part of a landscape: a set of cells, a type, and the group payload
  //! the type calls for (none for FF, a normal subgroup of one symmetric
  //! group for the strip types, a normal subgroup of a product for the
  //! single-cell types).
  class LandscapePart {
   public:
    static LandscapePart ff(std::vector<GridCell> cells);
    //! HF or EF: the row strip {i} x [j_lo, j_hi] with a group over S_i.
    static LandscapePart row_strip(PartKind kind, int i, int j_lo, int j_hi,
                                   SymNormalSubgroup group);
    //! FH or FE: the column strip [i_lo, i_hi] x {j} with a group over S_j.
    static LandscapePart column_strip(PartKind kind, int j, int i_lo, int i_hi,
                                      SymNormalSubgroup group);
    //! HH, EH, HE or EE: a single cell with a group over S_i x S_j.
    static LandscapePart single_cell(PartKind kind, GridCell cell,
                                     ProductNormalSubgroup group);

    PartKind kind() const {
      return _kind;
    }
    std::vector<GridCell> const& cells() const {
      return _cells;
    }
    GridCell min_cell() const {
      return _cells.front();
    }
    bool covers(GridCell c) const;

    SymNormalSubgroup const&     strip_group() const;
    ProductNormalSubgroup const& cell_group() const;

    std::string group_literal() const;  // "" for FF

    bool operator==(LandscapePart const& o) const;
    bool operator!=(LandscapePart const& o) const {
      return !(*this == o);
    }

   private:
    LandscapePart(PartKind kind, std::vector<GridCell> cells,
                  std::optional<SymNormalSubgroup>     strip,
                  std::optional<ProductNormalSubgroup> cell);

    PartKind                             _kind;
    std::vector<GridCell>                _cells;
    std::optional<SymNormalSubgroup>     _strip_group;
    std::optional<ProductNormalSubgroup> _cell_group;
  };

  //! The canonical form of a congruence on a product: a typed partition of
  //! the rank grid.  Parts are stored sorted by their minimum cell.
  class Landscape {
   public:
    Landscape(ProductSpec spec, std::vector<LandscapePart> parts);

    ProductSpec const& spec() const {
      return _spec;
    }
    std::vector<LandscapePart> const& parts() const {
      return _parts;
    }

    int row_floor() const {
      return _spec.left.rank_floor();
    }
    int column_floor() const {
      return _spec.right.rank_floor();
    }
    int rows() const {
      return _spec.left.degree;
    }
    int columns() const {
      return _spec.right.degree;
    }

    //! Index of the part covering the cell, or -1.
    int part_index_at(GridCell c) const;

    bool operator==(Landscape const& o) const;
    bool operator!=(Landscape const& o) const {
      return !(*this == o);
    }

   private:
    ProductSpec                _spec;
    std::vector<LandscapePart> _parts;
  };

  struct LandscapeViolation {
    int         condition;
    std::string detail;
  };

  //! Checks the full condition list; an empty result means the landscape
  //! describes a congruence.  Condition 0 covers partition well-formedness,
  //! 1-11 are the structural conditions on part shapes, placement and
  //! groups.
  std::vector<LandscapeViolation> validate(Landscape const& l);

  //! Membership for a valid landscape: both elements' cells lie in the same
  //! part and the part-local relation holds.
  bool related(Landscape const& l, ProductElement const& x,
               ProductElement const& y);

  //! The landscape whose relation equals the closed-form principal
  //! congruence, cell by cell.
  Landscape landscape_of_principal(ProductPrincipal const& pc);

  //! All valid landscapes on the product, in a fixed deterministic order.
  //! Each valid landscape induces a distinct congruence, and every
  //! congruence appears.
  std::vector<Landscape> enumerate_landscapes(ProductSpec const& spec,
                                              int                degree_cap = 3);

  //! Text diagram: the paper-style diamond by default, a plain row/column
  //! matrix with `matrix_mode`, followed by a machine-readable part list.
  std::string render(Landscape const& l, bool matrix_mode = false);
  //! Inverse of render (reads the part list).
  Landscape parse_landscape(std::string const& text);

  nlohmann::json to_json(Landscape const& l);
  Landscape      landscape_from_json(nlohmann::json const& j);

}  // namespace congrkit

#endif  // CONGRKIT_LANDSCAPE_HPP_
