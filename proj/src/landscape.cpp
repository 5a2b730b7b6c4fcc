#include "congrkit/landscape.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace congrkit {

  std::string to_string(PartKind k) {
    switch (k) {
      case PartKind::FF:
        return "FF";
      case PartKind::HF:
        return "HF";
      case PartKind::EF:
        return "eF";
      case PartKind::FH:
        return "FH";
      case PartKind::FE:
        return "Fe";
      case PartKind::HH:
        return "HH";
      case PartKind::EH:
        return "eH";
      case PartKind::HE:
        return "He";
      default:
        return "ee";
    }
  }

  PartKind part_kind_from_string(std::string const& s) {
    for (auto k : {PartKind::FF, PartKind::HF, PartKind::EF, PartKind::FH,
                   PartKind::FE, PartKind::HH, PartKind::EH, PartKind::HE,
                   PartKind::EE}) {
      if (to_string(k) == s) {
        return k;
      }
    }
    throw std::invalid_argument("bad part type '" + s + "'");
  }

  LandscapePart::LandscapePart(PartKind kind, std::vector<GridCell> cells,
                               std::optional<SymNormalSubgroup>     strip,
                               std::optional<ProductNormalSubgroup> cell)
      : _kind(kind),
        _cells(std::move(cells)),
        _strip_group(std::move(strip)),
        _cell_group(std::move(cell)) {
    if (_cells.empty()) {
      throw std::invalid_argument("a landscape part needs at least one cell");
    }
    std::sort(_cells.begin(), _cells.end());
    _cells.erase(std::unique(_cells.begin(), _cells.end()), _cells.end());
  }

  LandscapePart LandscapePart::ff(std::vector<GridCell> cells) {
    return LandscapePart(PartKind::FF, std::move(cells), std::nullopt,
                         std::nullopt);
  }

  LandscapePart LandscapePart::row_strip(PartKind kind, int i, int j_lo,
                                         int j_hi, SymNormalSubgroup group) {
    if (kind != PartKind::HF && kind != PartKind::EF) {
      throw std::invalid_argument("row strips are HF or eF");
    }
    if (group.degree() != i) {
      throw std::invalid_argument("row strip group must live over S_i");
    }
    std::vector<GridCell> cells;
    for (int j = j_lo; j <= j_hi; ++j) {
      cells.push_back({i, j});
    }
    return LandscapePart(kind, std::move(cells), group, std::nullopt);
  }

  LandscapePart LandscapePart::column_strip(PartKind kind, int j, int i_lo,
                                            int i_hi, SymNormalSubgroup group) {
    if (kind != PartKind::FH && kind != PartKind::FE) {
      throw std::invalid_argument("column strips are FH or Fe");
    }
    if (group.degree() != j) {
      throw std::invalid_argument("column strip group must live over S_j");
    }
    std::vector<GridCell> cells;
    for (int i = i_lo; i <= i_hi; ++i) {
      cells.push_back({i, j});
    }
    return LandscapePart(kind, std::move(cells), group, std::nullopt);
  }

  LandscapePart LandscapePart::single_cell(PartKind kind, GridCell cell,
                                           ProductNormalSubgroup group) {
    if (kind != PartKind::HH && kind != PartKind::EH && kind != PartKind::HE
        && kind != PartKind::EE) {
      throw std::invalid_argument("single-cell parts are HH, eH, He or ee");
    }
    if (group.left_degree() != cell.i || group.right_degree() != cell.j) {
      throw std::invalid_argument("cell group must live over S_i x S_j");
    }
    return LandscapePart(kind, {cell}, std::nullopt, std::move(group));
  }

  bool LandscapePart::covers(GridCell c) const {
    return std::binary_search(_cells.begin(), _cells.end(), c);
  }

  SymNormalSubgroup const& LandscapePart::strip_group() const {
    if (!_strip_group) {
      throw std::logic_error("part has no strip group");
    }
    return *_strip_group;
  }

  ProductNormalSubgroup const& LandscapePart::cell_group() const {
    if (!_cell_group) {
      throw std::logic_error("part has no cell group");
    }
    return *_cell_group;
  }

  std::string LandscapePart::group_literal() const {
    if (_kind == PartKind::FF) {
      return "";
    }
    if (_strip_group) {
      return _strip_group->to_string();
    }
    return _cell_group->to_string();
  }

  bool LandscapePart::operator==(LandscapePart const& o) const {
    return _kind == o._kind && _cells == o._cells
           && _strip_group == o._strip_group && _cell_group == o._cell_group;
  }

  Landscape::Landscape(ProductSpec spec, std::vector<LandscapePart> parts)
      : _spec(spec), _parts(std::move(parts)) {
    std::sort(_parts.begin(), _parts.end(),
              [](LandscapePart const& a, LandscapePart const& b) {
                return a.min_cell() < b.min_cell();
              });
  }

  int Landscape::part_index_at(GridCell c) const {
    for (std::size_t t = 0; t < _parts.size(); ++t) {
      if (_parts[t].covers(c)) {
        return static_cast<int>(t);
      }
    }
    return -1;
  }

  bool Landscape::operator==(Landscape const& o) const {
    return _spec == o._spec && _parts == o._parts;
  }

  namespace {
    bool is_row_strip(LandscapePart const& p, int lo2, int* i, int* j_hi) {
      auto const& cells = p.cells();
      int         row   = cells.front().i;
      for (std::size_t t = 0; t < cells.size(); ++t) {
        if (cells[t].i != row
            || cells[t].j != lo2 + static_cast<int>(t)) {
          return false;
        }
      }
      *i    = row;
      *j_hi = cells.back().j;
      return true;
    }

    bool is_column_strip(LandscapePart const& p, int lo1, int* j, int* i_hi) {
      auto const& cells = p.cells();
      int         col   = cells.front().j;
      for (std::size_t t = 0; t < cells.size(); ++t) {
        if (cells[t].j != col
            || cells[t].i != lo1 + static_cast<int>(t)) {
          return false;
        }
      }
      *j    = col;
      *i_hi = cells.back().i;
      return true;
    }
  }  // namespace

  std::vector<LandscapeViolation> validate(Landscape const& l) {
    std::vector<LandscapeViolation> out;
    auto violate = [&](int cond, std::string detail) {
      out.push_back({cond, std::move(detail)});
    };
    int const lo1 = l.row_floor(), lo2 = l.column_floor();
    int const m = l.rows(), n = l.columns();

    // condition 0: exact cover of the grid
    for (int i = lo1; i <= m; ++i) {
      for (int j = lo2; j <= n; ++j) {
        int hits = 0;
        for (auto const& p : l.parts()) {
          if (p.covers({i, j})) {
            ++hits;
          }
        }
        if (hits != 1) {
          violate(0, "cell (" + std::to_string(i) + "," + std::to_string(j)
                         + ") covered " + std::to_string(hits) + " times");
        }
      }
    }
    for (auto const& p : l.parts()) {
      for (auto c : p.cells()) {
        if (c.i < lo1 || c.i > m || c.j < lo2 || c.j > n) {
          violate(0, "cell (" + std::to_string(c.i) + "," + std::to_string(c.j)
                         + ") outside the grid");
        }
      }
    }
    if (!out.empty()) {
      return out;  // the numbered conditions assume a partition
    }

    auto part_at = [&](GridCell c) -> LandscapePart const& {
      return l.parts()[l.part_index_at(c)];
    };
    auto id = [&](LandscapePart const& p) {
      return to_string(p.kind()) + " at (" + std::to_string(p.min_cell().i) + ","
             + std::to_string(p.min_cell().j) + ")";
    };

    // condition 1: at most one FF part, downward closed, not a bottom strip
    {
      int count = 0;
      for (auto const& p : l.parts()) {
        if (p.kind() != PartKind::FF) {
          continue;
        }
        ++count;
        if (count > 1) {
          violate(1, "more than one FF part");
          continue;
        }
        for (auto c : p.cells()) {
          for (int i = lo1; i <= c.i; ++i) {
            for (int j = lo2; j <= c.j; ++j) {
              if (!p.covers({i, j})) {
                violate(1, id(p) + " is not downward closed at ("
                               + std::to_string(i) + "," + std::to_string(j) + ")");
              }
            }
          }
        }
        bool single_row = true, single_col = true;
        for (auto c : p.cells()) {
          single_row = single_row && c.i == p.cells().front().i;
          single_col = single_col && c.j == p.cells().front().j;
        }
        if (single_row && p.cells().front().i == 0) {
          violate(1, id(p) + " is the bottom row of an empty-map factor");
        }
        if (single_col && p.cells().front().j == 0) {
          violate(1, id(p) + " is the bottom column of an empty-map factor");
        }
      }
    }

    // conditions 2/3: strip shapes and groups
    for (auto const& p : l.parts()) {
      if (p.kind() == PartKind::HF || p.kind() == PartKind::EF) {
        int i = 0, j_hi = 0;
        if (!is_row_strip(p, lo2, &i, &j_hi) || j_hi < 1) {
          violate(2, id(p) + " is not a row strip {i} x [" + std::to_string(lo2)
                         + "..j] with j >= 1");
          continue;
        }
        if (p.kind() == PartKind::HF
            && (i < 2 || p.strip_group().is_trivial())) {
          violate(2, id(p) + " needs i >= 2 and a nontrivial group");
        }
        if (p.kind() == PartKind::EF && !p.strip_group().is_trivial()) {
          violate(2, id(p) + " must carry the trivial group");
        }
      }
      if (p.kind() == PartKind::FH || p.kind() == PartKind::FE) {
        int j = 0, i_hi = 0;
        if (!is_column_strip(p, lo1, &j, &i_hi) || i_hi < 1) {
          violate(3, id(p) + " is not a column strip [" + std::to_string(lo1)
                         + "..i] x {j} with i >= 1");
          continue;
        }
        if (p.kind() == PartKind::FH
            && (j < 2 || p.strip_group().is_trivial())) {
          violate(3, id(p) + " needs j >= 2 and a nontrivial group");
        }
        if (p.kind() == PartKind::FE && !p.strip_group().is_trivial()) {
          violate(3, id(p) + " must carry the trivial group");
        }
      }
    }

    // conditions 4/5: placement of HF and FH on the slopes of FF
    {
      int hf_count = 0, fh_count = 0;
      for (auto const& p : l.parts()) {
        if (p.kind() == PartKind::HF) {
          ++hf_count;
          if (hf_count > 1) {
            violate(4, "more than one HF part");
            continue;
          }
          int i = p.min_cell().i, j_hi = p.cells().back().j;
          for (int x = lo1; x <= i - 1; ++x) {
            for (int y = lo2; y <= j_hi; ++y) {
              auto const& q = part_at({x, y});
              if (q.kind() != PartKind::FF) {
                violate(4, id(p) + " has no FF part below at ("
                               + std::to_string(x) + "," + std::to_string(y) + ")");
              }
            }
          }
        }
        if (p.kind() == PartKind::FH) {
          ++fh_count;
          if (fh_count > 1) {
            violate(5, "more than one FH part");
            continue;
          }
          int j = p.min_cell().j, i_hi = p.cells().back().i;
          for (int y = lo2; y <= j - 1; ++y) {
            for (int x = lo1; x <= i_hi; ++x) {
              auto const& q = part_at({x, y});
              if (q.kind() != PartKind::FF) {
                violate(5, id(p) + " has no FF part below at ("
                               + std::to_string(x) + "," + std::to_string(y) + ")");
              }
            }
          }
        }
      }
    }

    // condition 6: eF rows are consecutive, non-increasing, and grounded
    {
      std::map<int, int> ef_rows;  // i -> j_hi
      for (auto const& p : l.parts()) {
        if (p.kind() == PartKind::EF) {
          ef_rows[p.min_cell().i] = p.cells().back().j;
        }
      }
      if (!ef_rows.empty()) {
        int prev_i = -1, prev_j = -1;
        for (auto [i, j_hi] : ef_rows) {
          if (prev_i >= 0) {
            if (i != prev_i + 1) {
              violate(6, "eF rows are not consecutive");
            }
            if (j_hi > prev_j) {
              violate(6, "eF row extents increase with the rank");
            }
          }
          prev_i = i;
          prev_j = j_hi;
        }
        int base_i = ef_rows.begin()->first;
        int base_j = ef_rows.begin()->second;
        if (base_i > lo1) {
          for (int y = lo2; y <= base_j; ++y) {
            auto const& q = part_at({base_i - 1, y});
            if (q.kind() != PartKind::FF && q.kind() != PartKind::HF) {
              violate(6, "lowest eF row does not rest on FF or HF at ("
                             + std::to_string(base_i - 1) + ","
                             + std::to_string(y) + ")");
            }
          }
        }
      }
    }

    // condition 7: dual for Fe columns
    {
      std::map<int, int> fe_cols;  // j -> i_hi
      for (auto const& p : l.parts()) {
        if (p.kind() == PartKind::FE) {
          fe_cols[p.min_cell().j] = p.cells().back().i;
        }
      }
      if (!fe_cols.empty()) {
        int prev_j = -1, prev_i = -1;
        for (auto [j, i_hi] : fe_cols) {
          if (prev_j >= 0) {
            if (j != prev_j + 1) {
              violate(7, "Fe columns are not consecutive");
            }
            if (i_hi > prev_i) {
              violate(7, "Fe column extents increase with the rank");
            }
          }
          prev_j = j;
          prev_i = i_hi;
        }
        int base_j = fe_cols.begin()->first;
        int base_i = fe_cols.begin()->second;
        if (base_j > lo2) {
          for (int x = lo1; x <= base_i; ++x) {
            auto const& q = part_at({x, base_j - 1});
            if (q.kind() != PartKind::FF && q.kind() != PartKind::FH) {
              violate(7, "lowest Fe column does not rest on FF or FH at ("
                             + std::to_string(x) + ","
                             + std::to_string(base_j - 1) + ")");
            }
          }
        }
      }
    }

    // condition 8: single-cell shapes and group kinds
    for (auto const& p : l.parts()) {
      switch (p.kind()) {
        case PartKind::HH:
        case PartKind::EH:
        case PartKind::HE:
        case PartKind::EE:
          break;
        default:
          continue;
      }
      if (p.cells().size() != 1) {
        violate(8, id(p) + " is not a single cell");
        continue;
      }
      auto const& g = p.cell_group();
      bool l_triv = g.project_left().is_trivial();
      bool r_triv = g.project_right().is_trivial();
      switch (p.kind()) {
        case PartKind::HH:
          if (l_triv || r_triv) {
            violate(8, id(p) + " needs both projections nontrivial");
          }
          break;
        case PartKind::EH:
          if (!l_triv || r_triv) {
            violate(8, id(p) + " needs a group of the form eps x N'");
          }
          break;
        case PartKind::HE:
          if (l_triv || !r_triv) {
            violate(8, id(p) + " needs a group of the form N' x eps");
          }
          break;
        default:
          if (!l_triv || !r_triv) {
            violate(8, id(p) + " must carry the trivial group");
          }
          break;
      }
    }

    // conditions 9-11: neighbour constraints for the single-cell types
    for (auto const& p : l.parts()) {
      GridCell c = p.min_cell();
      if (p.kind() == PartKind::HH) {
        auto const& below = part_at({c.i, c.j - 1});
        if (below.kind() == PartKind::HF) {
          if (!p.cell_group().project_left().subgroup_of(below.strip_group())) {
            violate(9, id(p) + " first projection not inside the HF group");
          }
        } else if (below.kind() != PartKind::FF) {
          violate(9, id(p) + " does not sit on FF or HF");
        }
        auto const& left = part_at({c.i - 1, c.j});
        if (left.kind() == PartKind::FH) {
          if (!p.cell_group().project_right().subgroup_of(left.strip_group())) {
            violate(9, id(p) + " second projection not inside the FH group");
          }
        } else if (left.kind() != PartKind::FF) {
          violate(9, id(p) + " does not lean on FF or FH");
        }
      }
      if (p.kind() == PartKind::EH) {
        auto        np    = p.cell_group().right_fiber();
        auto const& below = part_at({c.i, c.j - 1});
        if (below.kind() != PartKind::FF && below.kind() != PartKind::HF
            && below.kind() != PartKind::EF) {
          violate(10, id(p) + " does not sit on FF, HF or eF");
        }
        if (c.i > lo1) {
          auto const& left = part_at({c.i - 1, c.j});
          bool ok = false;
          switch (left.kind()) {
            case PartKind::FF:
            case PartKind::HF:
            case PartKind::EF:
              ok = true;
              break;
            case PartKind::FH:
              ok = np.subgroup_of(left.strip_group());
              break;
            case PartKind::HH:
            case PartKind::EH:
              ok = np.subgroup_of(left.cell_group().right_fiber());
              break;
            default:
              break;
          }
          if (!ok) {
            violate(10, id(p) + " has an incompatible part at ("
                            + std::to_string(c.i - 1) + "," + std::to_string(c.j)
                            + ")");
          }
        }
      }
      if (p.kind() == PartKind::HE) {
        auto        np   = p.cell_group().left_fiber();
        auto const& left = part_at({c.i - 1, c.j});
        if (left.kind() != PartKind::FF && left.kind() != PartKind::FH
            && left.kind() != PartKind::FE) {
          violate(11, id(p) + " does not lean on FF, FH or Fe");
        }
        if (c.j > lo2) {
          auto const& below = part_at({c.i, c.j - 1});
          bool ok = false;
          switch (below.kind()) {
            case PartKind::FF:
            case PartKind::FH:
            case PartKind::FE:
              ok = true;
              break;
            case PartKind::HF:
              ok = np.subgroup_of(below.strip_group());
              break;
            case PartKind::HH:
            case PartKind::HE:
              ok = np.subgroup_of(below.cell_group().left_fiber());
              break;
            default:
              break;
          }
          if (!ok) {
            violate(11, id(p) + " has an incompatible part at ("
                            + std::to_string(c.i) + "," + std::to_string(c.j - 1)
                            + ")");
          }
        }
      }
    }
    return out;
  }

  bool related(Landscape const& l, ProductElement const& x,
               ProductElement const& y) {
    GridCell cx{x.first.rank(), x.second.rank()};
    GridCell cy{y.first.rank(), y.second.rank()};
    int      px = l.part_index_at(cx);
    int      py = l.part_index_at(cy);
    if (px < 0 || py < 0) {
      throw std::invalid_argument("element outside the landscape grid");
    }
    if (px != py) {
      return false;
    }
    auto const& p = l.parts()[px];
    switch (p.kind()) {
      case PartKind::FF:
        return true;
      case PartKind::HF:
      case PartKind::EF: {
        auto s = hclass_witness(x.first, y.first);
        return s.has_value() && p.strip_group().contains(*s);
      }
      case PartKind::FH:
      case PartKind::FE: {
        auto s = hclass_witness(x.second, y.second);
        return s.has_value() && p.strip_group().contains(*s);
      }
      default: {
        auto s1 = hclass_witness(x.first, y.first);
        if (!s1) {
          return false;
        }
        auto s2 = hclass_witness(x.second, y.second);
        if (!s2) {
          return false;
        }
        return p.cell_group().contains(*s1, *s2);
      }
    }
  }

  namespace {
    ProductNormalSubgroup trivial_cell_group(int i, int j) {
      return ProductNormalSubgroup::product(SymNormalSubgroup::trivial(i),
                                            SymNormalSubgroup::trivial(j));
    }
  }  // namespace

  Landscape landscape_of_principal(ProductPrincipal const& pc) {
    auto const& spec = pc.spec();
    int const   lo1 = spec.left.rank_floor(), lo2 = spec.right.rank_floor();
    int const   m = spec.left.degree, n = spec.right.degree;
    std::vector<LandscapePart> parts;
    std::vector<std::vector<bool>> used(m + 1, std::vector<bool>(n + 1, false));
    auto mark = [&](LandscapePart const& p) {
      for (auto c : p.cells()) {
        used[c.i][c.j] = true;
      }
      parts.push_back(p);
    };

    using Case = ProductPrincipal::Case;
    switch (pc.tag()) {
      case Case::identity:
        break;
      case Case::fixed_left: {
        auto const& t2    = *pc.theta_right();
        int const   bound = pc.left_bound();
        for (int i = lo1; i <= std::min(bound, m); ++i) {
          if (t2.is_universal()) {
            mark(LandscapePart::row_strip(PartKind::EF, i, lo2, n,
                                          SymNormalSubgroup::trivial(i)));
          } else {
            int const k2 = t2.level();
            mark(LandscapePart::row_strip(PartKind::EF, i, lo2, k2 - 1,
                                          SymNormalSubgroup::trivial(i)));
            if (!t2.group().is_trivial()) {
              mark(LandscapePart::single_cell(
                  PartKind::EH, {i, k2},
                  ProductNormalSubgroup::product(SymNormalSubgroup::trivial(i),
                                                 t2.group())));
            }
          }
        }
        break;
      }
      case Case::fixed_right: {
        auto const& t1    = *pc.theta_left();
        int const   bound = pc.right_bound();
        for (int j = lo2; j <= std::min(bound, n); ++j) {
          if (t1.is_universal()) {
            mark(LandscapePart::column_strip(PartKind::FE, j, lo1, m,
                                             SymNormalSubgroup::trivial(j)));
          } else {
            int const k1 = t1.level();
            mark(LandscapePart::column_strip(PartKind::FE, j, lo1, k1 - 1,
                                             SymNormalSubgroup::trivial(j)));
            if (!t1.group().is_trivial()) {
              mark(LandscapePart::single_cell(
                  PartKind::HE, {k1, j},
                  ProductNormalSubgroup::product(t1.group(),
                                                 SymNormalSubgroup::trivial(j))));
            }
          }
        }
        break;
      }
      case Case::rees: {
        int const i1 = pc.generator_a().first.rank();
        int const k1 = pc.generator_a().second.rank();
        int const i2 = pc.generator_b().first.rank();
        int const k2 = pc.generator_b().second.rank();
        std::vector<GridCell> cells;
        for (int i = lo1; i <= m; ++i) {
          for (int j = lo2; j <= n; ++j) {
            if ((i <= i1 && j <= k1) || (i <= i2 && j <= k2)) {
              cells.push_back({i, j});
            }
          }
        }
        mark(LandscapePart::ff(std::move(cells)));
        break;
      }
      case Case::h_right: {
        int const lb = pc.left_bound(), k = pc.right_bound();
        std::vector<GridCell> cells;
        for (int i = lo1; i <= lb; ++i) {
          for (int j = lo2; j <= k - 1; ++j) {
            cells.push_back({i, j});
          }
        }
        mark(LandscapePart::ff(std::move(cells)));
        mark(LandscapePart::column_strip(PartKind::FH, k, lo1, lb,
                                         pc.theta_right()->group()));
        break;
      }
      case Case::h_left: {
        int const i = pc.left_bound(), rb = pc.right_bound();
        std::vector<GridCell> cells;
        for (int x = lo1; x <= i - 1; ++x) {
          for (int j = lo2; j <= rb; ++j) {
            cells.push_back({x, j});
          }
        }
        mark(LandscapePart::ff(std::move(cells)));
        mark(LandscapePart::row_strip(PartKind::HF, i, lo2, rb,
                                      pc.theta_left()->group()));
        break;
      }
      default: {  // h_both
        int const i = pc.left_bound(), k = pc.right_bound();
        std::vector<GridCell> cells;
        for (int x = lo1; x <= i - 1; ++x) {
          for (int j = lo2; j <= k - 1; ++j) {
            cells.push_back({x, j});
          }
        }
        mark(LandscapePart::ff(std::move(cells)));
        mark(LandscapePart::row_strip(PartKind::HF, i, lo2, k - 1,
                                      pc.theta_left()->group()));
        mark(LandscapePart::column_strip(PartKind::FH, k, lo1, i - 1,
                                         pc.theta_right()->group()));
        mark(LandscapePart::single_cell(PartKind::HH, {i, k}, *pc.joint_group()));
        break;
      }
    }
    for (int i = lo1; i <= m; ++i) {
      for (int j = lo2; j <= n; ++j) {
        if (!used[i][j]) {
          parts.push_back(LandscapePart::single_cell(PartKind::EE, {i, j},
                                                     trivial_cell_group(i, j)));
        }
      }
    }
    return Landscape(spec, std::move(parts));
  }

  namespace {

    struct CellChoice {
      PartKind                             kind;
      std::optional<SymNormalSubgroup>     strip;
      std::optional<ProductNormalSubgroup> cell;
    };

    struct Enumerator {
      ProductSpec const&      spec;
      int                     lo1, lo2, m, n;
      std::vector<Landscape>* out;

      // current structured choices
      std::vector<int> ff_width;  // per row index r = i - lo1; width from lo2
      std::optional<std::tuple<int, int, SymNormalSubgroup>> hf;  // (i, j_hi, N)
      std::optional<std::tuple<int, int, SymNormalSubgroup>> fh;  // (j, i_hi, N)
      std::map<int, int> ef;  // row i -> j_hi
      std::map<int, int> fe;  // col j -> i_hi

      std::map<std::pair<int, int>, CellChoice> cells;

      bool in_ff(int i, int j) const {
        return j - lo2 < ff_width[i - lo1];
      }
      bool in_hf(int i, int j) const {
        return hf && std::get<0>(*hf) == i && j <= std::get<1>(*hf);
      }
      bool in_fh(int i, int j) const {
        return fh && std::get<0>(*fh) == j && i <= std::get<1>(*fh);
      }
      bool in_ef(int i, int j) const {
        auto it = ef.find(i);
        return it != ef.end() && j <= it->second;
      }
      bool in_fe(int i, int j) const {
        auto it = fe.find(j);
        return it != fe.end() && i <= it->second;
      }
      bool structured(int i, int j) const {
        return in_ff(i, j) || in_hf(i, j) || in_fh(i, j) || in_ef(i, j)
               || in_fe(i, j);
      }

      // kind and groups of the already-decided part covering (i, j)
      CellChoice at(int i, int j) const {
        if (in_ff(i, j)) {
          return {PartKind::FF, std::nullopt, std::nullopt};
        }
        if (in_hf(i, j)) {
          return {PartKind::HF, std::get<2>(*hf), std::nullopt};
        }
        if (in_fh(i, j)) {
          return {PartKind::FH, std::get<2>(*fh), std::nullopt};
        }
        if (in_ef(i, j)) {
          return {PartKind::EF, SymNormalSubgroup::trivial(i), std::nullopt};
        }
        if (in_fe(i, j)) {
          return {PartKind::FE, SymNormalSubgroup::trivial(j), std::nullopt};
        }
        return cells.at({i, j});
      }

      void run() {
        ff_width.assign(m - lo1 + 1, 0);
        choose_ff(0, n - lo2 + 1);
      }

      void choose_ff(int row, int max_width) {
        if (row == static_cast<int>(ff_width.size())) {
          if (ff_admissible()) {
            choose_hf();
          }
          return;
        }
        for (int w = 0; w <= max_width; ++w) {
          ff_width[row] = w;
          choose_ff(row + 1, w);
        }
        ff_width[row] = 0;
      }

      bool ff_admissible() const {
        if (ff_width[0] == 0) {
          return true;  // no FF part
        }
        bool single_row = true;
        for (std::size_t r = 1; r < ff_width.size(); ++r) {
          single_row = single_row && ff_width[r] == 0;
        }
        if (single_row && lo1 == 0) {
          return false;
        }
        bool single_col = true;
        for (int w : ff_width) {
          single_col = single_col && w <= 1;
        }
        if (single_col && lo2 == 0) {
          return false;
        }
        return true;
      }

      void choose_hf() {
        hf.reset();
        choose_fh();
        for (int i = std::max(2, lo1 + 1); i <= m; ++i) {
          if (ff_width[i - lo1] != 0) {
            continue;
          }
          for (int j_hi = std::max(1, lo2); j_hi <= n; ++j_hi) {
            if (ff_width[i - 1 - lo1] < j_hi - lo2 + 1) {
              continue;  // no FF rectangle below
            }
            for (auto const& g : all_normal_subgroups(i)) {
              if (g.is_trivial()) {
                continue;
              }
              hf = {i, j_hi, g};
              choose_fh();
            }
          }
        }
        hf.reset();
      }

      void choose_fh() {
        fh.reset();
        choose_ef();
        for (int j = std::max(2, lo2 + 1); j <= n; ++j) {
          if (ff_width[0] >= j - lo2 + 1) {
            continue;  // FF reaches this column
          }
          for (int i_hi = std::max(1, lo1); i_hi <= m; ++i_hi) {
            if (ff_width[i_hi - lo1] < j - lo2) {
              continue;  // no FF rectangle below
            }
            if (hf && std::get<0>(*hf) <= i_hi && j <= std::get<1>(*hf)) {
              continue;  // overlaps the HF strip
            }
            for (auto const& g : all_normal_subgroups(j)) {
              if (g.is_trivial()) {
                continue;
              }
              fh = {j, i_hi, g};
              choose_ef();
            }
          }
        }
        fh.reset();
      }

      bool ef_row_free(int i, int j_hi) const {
        if (ff_width[i - lo1] != 0) {
          return false;
        }
        if (hf && std::get<0>(*hf) == i) {
          return false;
        }
        if (fh && std::get<0>(*fh) <= j_hi && i <= std::get<1>(*fh)) {
          return false;  // would swallow an FH cell
        }
        return true;
      }

      void choose_ef() {
        ef.clear();
        // grow a consecutive stack upward from each admissible base row
        choose_fe();
        for (int base = lo1; base <= m; ++base) {
          for (int j_hi = std::max(1, lo2); j_hi <= n; ++j_hi) {
            if (!ef_row_free(base, j_hi)) {
              continue;
            }
            if (base > lo1) {
              bool grounded = ff_width[base - 1 - lo1] >= j_hi - lo2 + 1
                              || (hf && std::get<0>(*hf) == base - 1
                                  && std::get<1>(*hf) >= j_hi);
              if (!grounded) {
                continue;
              }
            }
            ef[base] = j_hi;
            extend_ef(base + 1, j_hi);
            ef.erase(base);
          }
        }
        ef.clear();
      }

      void extend_ef(int row, int prev_width) {
        choose_fe();
        if (row > m) {
          return;
        }
        for (int j_hi = std::max(1, lo2); j_hi <= prev_width; ++j_hi) {
          if (!ef_row_free(row, j_hi)) {
            continue;
          }
          ef[row] = j_hi;
          extend_ef(row + 1, j_hi);
          ef.erase(row);
        }
      }

      bool fe_col_free(int j, int i_hi) const {
        if (ff_width[0] >= j - lo2 + 1) {
          return false;
        }
        if (fh && std::get<0>(*fh) == j) {
          return false;
        }
        if (hf && j <= std::get<1>(*hf) && std::get<0>(*hf) <= i_hi) {
          return false;
        }
        for (auto [i, j_hi] : ef) {
          if (i <= i_hi && j <= j_hi) {
            return false;
          }
        }
        return true;
      }

      void choose_fe() {
        fe.clear();
        fill_cells();
        for (int base = lo2; base <= n; ++base) {
          for (int i_hi = std::max(1, lo1); i_hi <= m; ++i_hi) {
            if (!fe_col_free(base, i_hi)) {
              continue;
            }
            if (base > lo2) {
              bool grounded = ff_width[i_hi - lo1] >= base - 1 - lo2 + 1
                              || (fh && std::get<0>(*fh) == base - 1
                                  && std::get<1>(*fh) >= i_hi);
              if (!grounded) {
                continue;
              }
            }
            fe[base] = i_hi;
            extend_fe(base + 1, i_hi);
            fe.erase(base);
          }
        }
        fe.clear();
      }

      void extend_fe(int col, int prev_height) {
        fill_cells();
        if (col > n) {
          return;
        }
        for (int i_hi = std::max(1, lo1); i_hi <= prev_height; ++i_hi) {
          if (!fe_col_free(col, i_hi)) {
            continue;
          }
          fe[col] = i_hi;
          extend_fe(col + 1, i_hi);
          fe.erase(col);
        }
      }

      void fill_cells() {
        cells.clear();
        next_cell(lo1, lo2);
      }

      void next_cell(int i, int j) {
        if (i > m) {
          emit();
          return;
        }
        int ni = j == n ? i + 1 : i;
        int nj = j == n ? lo2 : j + 1;
        if (structured(i, j)) {
          next_cell(ni, nj);
          return;
        }
        for (auto const& g : all_normal_subgroups(i, j)) {
          bool l_triv = g.project_left().is_trivial();
          bool r_triv = g.project_right().is_trivial();
          PartKind kind = l_triv ? (r_triv ? PartKind::EE : PartKind::EH)
                                 : (r_triv ? PartKind::HE : PartKind::HH);
          if (!cell_ok(i, j, kind, g)) {
            continue;
          }
          cells[{i, j}] = {kind, std::nullopt, g};
          next_cell(ni, nj);
          cells.erase({i, j});
        }
      }

      bool cell_ok(int i, int j, PartKind kind,
                   ProductNormalSubgroup const& g) const {
        switch (kind) {
          case PartKind::EE:
            return true;
          case PartKind::HH: {
            auto below = at(i, j - 1);
            if (below.kind == PartKind::HF) {
              if (!g.project_left().subgroup_of(*below.strip)) {
                return false;
              }
            } else if (below.kind != PartKind::FF) {
              return false;
            }
            auto left = at(i - 1, j);
            if (left.kind == PartKind::FH) {
              return g.project_right().subgroup_of(*left.strip);
            }
            return left.kind == PartKind::FF;
          }
          case PartKind::EH: {
            auto np    = g.right_fiber();
            auto below = at(i, j - 1);
            if (below.kind != PartKind::FF && below.kind != PartKind::HF
                && below.kind != PartKind::EF) {
              return false;
            }
            if (i == lo1) {
              return true;
            }
            auto left = at(i - 1, j);
            switch (left.kind) {
              case PartKind::FF:
              case PartKind::HF:
              case PartKind::EF:
                return true;
              case PartKind::FH:
                return np.subgroup_of(*left.strip);
              case PartKind::HH:
              case PartKind::EH:
                return np.subgroup_of(left.cell->right_fiber());
              default:
                return false;
            }
          }
          default: {  // HE
            auto np   = g.left_fiber();
            auto left = at(i - 1, j);
            if (left.kind != PartKind::FF && left.kind != PartKind::FH
                && left.kind != PartKind::FE) {
              return false;
            }
            if (j == lo2) {
              return true;
            }
            auto below = at(i, j - 1);
            switch (below.kind) {
              case PartKind::FF:
              case PartKind::FH:
              case PartKind::FE:
                return true;
              case PartKind::HF:
                return np.subgroup_of(*below.strip);
              case PartKind::HH:
              case PartKind::HE:
                return np.subgroup_of(below.cell->left_fiber());
              default:
                return false;
            }
          }
        }
      }

      void emit() {
        std::vector<LandscapePart> parts;
        if (ff_width[0] > 0) {
          std::vector<GridCell> cs;
          for (int i = lo1; i <= m; ++i) {
            for (int j = lo2; j < lo2 + ff_width[i - lo1]; ++j) {
              cs.push_back({i, j});
            }
          }
          parts.push_back(LandscapePart::ff(std::move(cs)));
        }
        if (hf) {
          parts.push_back(LandscapePart::row_strip(PartKind::HF, std::get<0>(*hf),
                                                   lo2, std::get<1>(*hf),
                                                   std::get<2>(*hf)));
        }
        if (fh) {
          parts.push_back(LandscapePart::column_strip(
              PartKind::FH, std::get<0>(*fh), lo1, std::get<1>(*fh),
              std::get<2>(*fh)));
        }
        for (auto [i, j_hi] : ef) {
          parts.push_back(LandscapePart::row_strip(PartKind::EF, i, lo2, j_hi,
                                                   SymNormalSubgroup::trivial(i)));
        }
        for (auto [j, i_hi] : fe) {
          parts.push_back(LandscapePart::column_strip(
              PartKind::FE, j, lo1, i_hi, SymNormalSubgroup::trivial(j)));
        }
        for (auto const& [cell, choice] : cells) {
          parts.push_back(LandscapePart::single_cell(
              choice.kind, {cell.first, cell.second}, *choice.cell));
        }
        out->push_back(Landscape(spec, std::move(parts)));
      }
    };

  }  // namespace

  std::vector<Landscape> enumerate_landscapes(ProductSpec const& spec,
                                              int                degree_cap) {
    if (spec.left.degree > degree_cap || spec.right.degree > degree_cap) {
      throw std::invalid_argument("landscape enumeration cap exceeded");
    }
    std::vector<Landscape> out;
    Enumerator             e{spec,
                             spec.left.rank_floor(),
                             spec.right.rank_floor(),
                             spec.left.degree,
                             spec.right.degree,
                             &out,
                             {},
                             {},
                             {},
                             {},
                             {},
                             {}};
    e.run();
    return out;
  }

  std::string render(Landscape const& l, bool matrix_mode) {
    std::ostringstream os;
    os << "landscape " << l.spec().to_string() << "\n";
    int const lo1 = l.row_floor(), lo2 = l.column_floor();
    int const m = l.rows(), n = l.columns();
    auto label = [&](int i, int j) {
      return to_string(l.parts()[l.part_index_at({i, j})].kind());
    };
    if (matrix_mode) {
      os << "    ";
      for (int j = lo2; j <= n; ++j) {
        os << " j=" << j;
      }
      os << "\n";
      for (int i = m; i >= lo1; --i) {
        os << "i=" << i << " |";
        for (int j = lo2; j <= n; ++j) {
          os << "  " << label(i, j);
        }
        os << "\n";
      }
    } else {
      int const smax = (m - lo1) + (n - lo2);
      int const width = 4;
      for (int s = smax; s >= 0; --s) {
        std::string line((smax + 1) * width, ' ');
        for (int i = m; i >= lo1; --i) {
          int j = lo2 + s - (i - lo1);
          if (j < lo2 || j > n) {
            continue;
          }
          int col = (j - lo2) - (i - lo1) + (m - lo1);
          auto lab = label(i, j);
          line.replace(col * width, lab.size(), lab);
        }
        while (!line.empty() && line.back() == ' ') {
          line.pop_back();
        }
        os << line << "\n";
      }
    }
    os << "parts:\n";
    for (auto const& p : l.parts()) {
      os << "  " << to_string(p.kind()) << " cells ";
      for (std::size_t t = 0; t < p.cells().size(); ++t) {
        if (t > 0) {
          os << ",";
        }
        os << "(" << p.cells()[t].i << "," << p.cells()[t].j << ")";
      }
      auto g = p.group_literal();
      if (!g.empty()) {
        os << " group " << g;
      }
      os << "\n";
    }
    return os.str();
  }

  namespace {
    LandscapePart part_from_fields(PartKind kind, std::vector<GridCell> cells,
                                   std::string const& group) {
      switch (kind) {
        case PartKind::FF:
          return LandscapePart::ff(std::move(cells));
        case PartKind::HF:
        case PartKind::EF: {
          int i = cells.front().i;
          return LandscapePart::row_strip(
              kind, i, cells.front().j, cells.back().j,
              group.empty() ? SymNormalSubgroup::trivial(i)
                            : SymNormalSubgroup::parse(i, group));
        }
        case PartKind::FH:
        case PartKind::FE: {
          int j = cells.front().j;
          return LandscapePart::column_strip(
              kind, j, cells.front().i, cells.back().i,
              group.empty() ? SymNormalSubgroup::trivial(j)
                            : SymNormalSubgroup::parse(j, group));
        }
        default: {
          auto c = cells.front();
          auto g = group.empty()
                       ? ProductNormalSubgroup::product(
                             SymNormalSubgroup::trivial(c.i),
                             SymNormalSubgroup::trivial(c.j))
                       : ProductNormalSubgroup::parse(c.i, c.j, group);
          return LandscapePart::single_cell(kind, c, std::move(g));
        }
      }
    }
  }  // namespace

  Landscape parse_landscape(std::string const& text) {
    std::istringstream is(text);
    std::string        line;
    std::optional<ProductSpec> spec;
    std::vector<LandscapePart> parts;
    bool in_parts = false;
    while (std::getline(is, line)) {
      if (line.rfind("landscape ", 0) == 0) {
        spec = ProductSpec::parse(line.substr(10));
        continue;
      }
      if (line == "parts:") {
        in_parts = true;
        continue;
      }
      if (!in_parts || line.empty()) {
        continue;
      }
      std::istringstream ls(line);
      std::string        kind_s, cells_kw, cells_s;
      ls >> kind_s >> cells_kw >> cells_s;
      if (cells_kw != "cells") {
        throw std::invalid_argument("bad part line: " + line);
      }
      std::string group_kw, group_s;
      ls >> group_kw >> group_s;
      if (!group_kw.empty() && group_kw != "group") {
        throw std::invalid_argument("bad part line: " + line);
      }
      std::vector<GridCell> cells;
      std::size_t           pos = 0;
      while ((pos = cells_s.find('(', pos)) != std::string::npos) {
        auto comma = cells_s.find(',', pos);
        auto close = cells_s.find(')', comma);
        cells.push_back({std::stoi(cells_s.substr(pos + 1, comma - pos - 1)),
                         std::stoi(cells_s.substr(comma + 1, close - comma - 1))});
        pos = close;
      }
      if (!spec) {
        throw std::invalid_argument("part list before the landscape header");
      }
      parts.push_back(
          part_from_fields(part_kind_from_string(kind_s), cells, group_s));
    }
    if (!spec) {
      throw std::invalid_argument("missing landscape header");
    }
    return Landscape(*spec, std::move(parts));
  }

  nlohmann::json to_json(Landscape const& l) {
    nlohmann::json parts = nlohmann::json::array();
    for (auto const& p : l.parts()) {
      nlohmann::json cells = nlohmann::json::array();
      for (auto c : p.cells()) {
        cells.push_back({c.i, c.j});
      }
      nlohmann::json jp{{"type", to_string(p.kind())}, {"cells", cells}};
      auto g = p.group_literal();
      if (!g.empty()) {
        jp["group"] = g;
      }
      parts.push_back(jp);
    }
    return nlohmann::json{{"product", l.spec().to_string()}, {"parts", parts}};
  }

  Landscape landscape_from_json(nlohmann::json const& j) {
    auto spec = ProductSpec::parse(j.at("product").get<std::string>());
    std::vector<LandscapePart> parts;
    for (auto const& jp : j.at("parts")) {
      std::vector<GridCell> cells;
      for (auto const& c : jp.at("cells")) {
        cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
      }
      std::string group = jp.contains("group") ? jp.at("group").get<std::string>() : "";
      parts.push_back(part_from_fields(
          part_kind_from_string(jp.at("type").get<std::string>()), cells,
          group));
    }
    return Landscape(spec, std::move(parts));
  }

}  // namespace congrkit
