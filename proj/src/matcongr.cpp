#include "congrkit/matcongr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace congrkit {

  MatrixCongruence::MatrixCongruence(Gf field, int dim, int mu,
                                     MatrixGroup                level_group,
                                     std::vector<std::set<int>> scalar_chain)
      : _field(field),
        _dim(dim),
        _mu(mu),
        _level_group(std::move(level_group)),
        _scalar_chain(std::move(scalar_chain)) {
    if (mu < 0 || mu > dim) {
      throw std::invalid_argument("congruence level out of range");
    }
    if (_level_group.dim() != mu || _level_group.field() != field) {
      throw std::invalid_argument("level group must live over GL(mu, F)");
    }
    if (static_cast<int>(_scalar_chain.size()) != dim - mu) {
      throw std::invalid_argument("scalar chain must have one subgroup per rank "
                                  "above the level");
    }
    for (auto const& g : _scalar_chain) {
      for (int lambda : g) {
        if (lambda < 1 || lambda >= field.p) {
          throw std::invalid_argument("scalar chain entries must be units");
        }
      }
    }
    for (std::size_t t = 0; t + 1 < _scalar_chain.size(); ++t) {
      // G_{mu+1+t+1} <= G_{mu+1+t}
      for (int lambda : _scalar_chain[t + 1]) {
        if (!_scalar_chain[t].count(lambda)) {
          throw std::invalid_argument("scalar chain is not nested");
        }
      }
    }
    if (!_scalar_chain.empty() && mu > 0) {
      for (int lambda : _scalar_chain.front()) {
        if (!_level_group.contains(GfMatrix::identity(field, mu).scaled(lambda))) {
          throw std::invalid_argument(
              "scalar multiples of the level identity must lie in the level group");
        }
      }
    }
  }

  MatrixCongruence MatrixCongruence::identity(Gf field, int dim) {
    std::vector<std::set<int>> chain(dim, std::set<int>{1});
    return MatrixCongruence(field, dim, 0, MatrixGroup::trivial(field, 0),
                            std::move(chain));
  }

  MatrixCongruence MatrixCongruence::rees(Gf field, int dim, int bound) {
    if (bound < 0 || bound >= dim) {
      throw std::invalid_argument("ideal bound out of range");
    }
    int mu = bound + 1;
    std::vector<std::set<int>> chain(dim - mu, std::set<int>{1});
    return MatrixCongruence(field, dim, mu, MatrixGroup::trivial(field, mu),
                            std::move(chain));
  }

  bool MatrixCongruence::related(GfMatrix const& a, GfMatrix const& b) const {
    if (a.field() != _field || a.dim() != _dim || b.field() != _field
        || b.dim() != _dim) {
      throw std::invalid_argument("elements of a different matrix monoid");
    }
    int const ra = detail::cached_rank(a), rb = detail::cached_rank(b);
    if (ra < _mu && rb < _mu) {
      return true;
    }
    if (ra != rb) {
      return false;
    }
    if (ra == _mu) {
      // reduce a to the partial identity; b must land in the group block and
      // in the level group
      auto const& [s1, s2] = detail::cached_reduction(a);
      auto rb2             = s1 * b * s2;
      for (int r = 0; r < _dim; ++r) {
        for (int c = 0; c < _dim; ++c) {
          if ((r >= _mu || c >= _mu) && rb2.at(r, c) != 0) {
            return false;
          }
        }
      }
      std::vector<int> block(_mu * _mu);
      for (int r = 0; r < _mu; ++r) {
        for (int c = 0; c < _mu; ++c) {
          block[r * _mu + c] = rb2.at(r, c);
        }
      }
      GfMatrix top(_field, _mu, std::move(block));
      return top.invertible() && _level_group.contains(top);
    }
    // equal rank above the level: scalar relation
    auto lambda = scalar_ratio(a, b);
    return lambda.has_value() && _scalar_chain[ra - _mu - 1].count(*lambda) != 0;
  }

  nlohmann::json MatrixCongruence::to_json() const {
    nlohmann::json level = nlohmann::json::array();
    for (auto c : _level_group.sorted_codes()) {
      level.push_back(GfMatrix::from_code(_field, _mu, c).to_string());
    }
    nlohmann::json chain = nlohmann::json::array();
    for (auto const& g : _scalar_chain) {
      chain.push_back(g);
    }
    return nlohmann::json{{"field", _field.p},
                          {"dim", _dim},
                          {"mu", _mu},
                          {"Gbar", level},
                          {"chain", chain}};
  }

  std::string MatrixCongruence::to_string() const {
    std::ostringstream os;
    os << "mu=" << _mu << ", |Gbar|=" << _level_group.size() << ", chain=";
    for (std::size_t t = 0; t < _scalar_chain.size(); ++t) {
      if (t > 0) {
        os << ">=";
      }
      os << "{";
      bool first = true;
      for (int lambda : _scalar_chain[t]) {
        if (!first) {
          os << ",";
        }
        first = false;
        os << lambda;
      }
      os << "}";
    }
    if (_scalar_chain.empty()) {
      os << "-";
    }
    return os.str();
  }

  MatrixPrincipal principal_congruence(GfMatrix const& a, GfMatrix const& b) {
    if (a.field() != b.field() || a.dim() != b.dim()) {
      throw std::invalid_argument("elements of different matrix monoids");
    }
    Gf const  field = a.field();
    int const n     = a.dim();
    if (auto lambda = scalar_ratio(a, b)) {
      // scalar pair: the chain is generated by the ratio up to the common
      // rank, trivial above
      int const r = a.rank();
      std::vector<std::set<int>> chain;
      for (int i = 1; i <= n; ++i) {
        chain.push_back(i <= r ? field.unit_closure(*lambda) : std::set<int>{1});
      }
      return {a == b ? "identity" : "scalar-both",
              MatrixCongruence(field, n, 0, MatrixGroup::trivial(field, 0),
                               std::move(chain))};
    }
    if (green_related(a, b, GreenRelation::H)) {
      int const mu  = a.rank();
      auto [s1, s2] = reduce_to_partial_identity(a);
      auto rb       = s1 * b * s2;
      std::vector<int> block(mu * mu);
      for (int r = 0; r < mu; ++r) {
        for (int c = 0; c < mu; ++c) {
          block[r * mu + c] = rb.at(r, c);
        }
      }
      auto level = gl_normal_closure(field, mu, {GfMatrix(field, mu, block)});
      std::vector<std::set<int>> chain(n - mu, std::set<int>{1});
      return {"h-both",
              MatrixCongruence(field, n, mu, std::move(level), std::move(chain))};
    }
    int const k = std::max(a.rank(), b.rank());
    if (k == n) {
      return {"rees", std::nullopt};
    }
    return {"rees", MatrixCongruence::rees(field, n, k)};
  }

  std::vector<MatrixCongruence> all_matrix_congruences(Gf field, int dim) {
    std::vector<MatrixCongruence> out;
    auto unit_groups = field.unit_subgroups();
    for (int mu = 0; mu <= dim; ++mu) {
      for (auto const& level : gl_all_normal_subgroups(field, mu)) {
        // nested chains G_{mu+1} >= ... >= G_n with G_{mu+1} I_mu inside the
        // level group
        std::vector<std::vector<std::set<int>>> chains{{}};
        for (int t = 0; t < dim - mu; ++t) {
          std::vector<std::vector<std::set<int>>> next;
          for (auto const& prefix : chains) {
            for (auto const& g : unit_groups) {
              if (!prefix.empty()) {
                bool nested = std::all_of(g.begin(), g.end(), [&](int x) {
                  return prefix.back().count(x) != 0;
                });
                if (!nested) {
                  continue;
                }
              } else if (mu > 0) {
                bool inside = std::all_of(g.begin(), g.end(), [&](int x) {
                  return level.contains(
                      GfMatrix::identity(field, mu).scaled(x));
                });
                if (!inside) {
                  continue;
                }
              }
              auto c = prefix;
              c.push_back(g);
              next.push_back(std::move(c));
            }
          }
          chains = std::move(next);
        }
        for (auto& chain : chains) {
          out.push_back(MatrixCongruence(field, dim, mu, level, chain));
        }
      }
    }
    return out;
  }

}  // namespace congrkit
