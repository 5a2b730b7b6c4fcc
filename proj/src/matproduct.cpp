#include "congrkit/matproduct.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace congrkit {

  namespace {
    std::uint64_t fuse_codes(std::uint32_t a, std::uint32_t b) {
      return (static_cast<std::uint64_t>(a) << 32) | b;
    }
  }  // namespace

  MatrixPairGroup::MatrixPairGroup(Gf field, int left_dim, int right_dim)
      : _field(field), _left_dim(left_dim), _right_dim(right_dim) {}

  bool MatrixPairGroup::contains(GfMatrix const& a, GfMatrix const& b) const {
    return _codes.count(fuse_codes(a.code(), b.code())) != 0;
  }

  void MatrixPairGroup::insert(GfMatrix const& a, GfMatrix const& b) {
    _codes.insert(fuse_codes(a.code(), b.code()));
  }

  bool MatrixPairGroup::subgroup_of(MatrixPairGroup const& that) const {
    for (auto c : _codes) {
      if (!that._codes.count(c)) {
        return false;
      }
    }
    return true;
  }

  MatrixGroup MatrixPairGroup::project_left() const {
    MatrixGroup out(_field, _left_dim);
    for (auto c : _codes) {
      out.insert(GfMatrix::from_code(_field, _left_dim,
                                     static_cast<std::uint32_t>(c >> 32)));
    }
    return out;
  }

  MatrixGroup MatrixPairGroup::project_right() const {
    MatrixGroup out(_field, _right_dim);
    for (auto c : _codes) {
      out.insert(GfMatrix::from_code(_field, _right_dim,
                                     static_cast<std::uint32_t>(c & 0xffffffffu)));
    }
    return out;
  }

  std::vector<std::uint64_t> MatrixPairGroup::sorted_codes() const {
    std::vector<std::uint64_t> out(_codes.begin(), _codes.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool MatrixPairGroup::operator==(MatrixPairGroup const& that) const {
    return _field == that._field && _left_dim == that._left_dim
           && _right_dim == that._right_dim && _codes == that._codes;
  }

  MatrixPairGroup pair_normal_closure(Gf field, int left_dim, int right_dim,
                                      std::vector<MatrixPair> const& seeds) {
    std::vector<MatrixPair> conj_gens;
    for (auto const& g : gl_generators(field, left_dim)) {
      conj_gens.push_back({g, GfMatrix::identity(field, right_dim)});
    }
    for (auto const& g : gl_generators(field, right_dim)) {
      conj_gens.push_back({GfMatrix::identity(field, left_dim), g});
    }
    auto mul = [](MatrixPair const& x, MatrixPair const& y) {
      return MatrixPair{x.first * y.first, x.second * y.second};
    };
    auto inv = [](MatrixPair const& x) {
      return MatrixPair{x.first.inverse(), x.second.inverse()};
    };
    // close the seeds under conjugation by the group generators
    std::unordered_set<std::uint64_t> seen;
    std::vector<MatrixPair>           gen_set, queue;
    auto push = [&](MatrixPair const& x) {
      if (seen.insert(fuse_codes(x.first.code(), x.second.code())).second) {
        gen_set.push_back(x);
        queue.push_back(x);
      }
    };
    for (auto const& s : seeds) {
      push(s);
    }
    while (!queue.empty()) {
      auto x = queue.back();
      queue.pop_back();
      for (auto const& g : conj_gens) {
        push(mul(mul(inv(g), x), g));
        push(mul(mul(g, x), inv(g)));
      }
    }
    // subgroup generated by the conjugation-closed set
    MatrixPairGroup out(field, left_dim, right_dim);
    MatrixPair      id{GfMatrix::identity(field, left_dim),
                       GfMatrix::identity(field, right_dim)};
    out.insert(id.first, id.second);
    std::vector<MatrixPair> frontier{id};
    std::vector<MatrixPair> steps;
    for (auto const& t : gen_set) {
      steps.push_back(t);
      steps.push_back(inv(t));
    }
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (auto const& t : steps) {
        auto y = mul(x, t);
        if (!out.contains(y.first, y.second)) {
          out.insert(y.first, y.second);
          frontier.push_back(y);
        }
      }
    }
    return out;
  }

  MatrixPairGroup associated_normal_subgroup(MatrixPair const& a,
                                             MatrixPair const& b) {
    if (!green_related(a.first, b.first, GreenRelation::H)
        || !green_related(a.second, b.second, GreenRelation::H)) {
      throw std::invalid_argument(
          "associated subgroup needs componentwise H-related pairs");
    }
    Gf const  field = a.first.field();
    int const i     = a.first.rank();
    int const j     = a.second.rank();
    auto [s1, s3] = reduce_to_partial_identity(a.first);
    auto [s2, s4] = reduce_to_partial_identity(a.second);
    auto rk = s1 * b.first * s3;
    auto rl = s2 * b.second * s4;
    auto block = [&](GfMatrix const& m, int dim) {
      std::vector<int> entries(dim * dim);
      for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
          entries[r * dim + c] = m.at(r, c);
        }
      }
      return GfMatrix(field, dim, std::move(entries));
    };
    return pair_normal_closure(field, i, j, {{block(rk, i), block(rl, j)}});
  }

  ScalarMatrixGroup::ScalarMatrixGroup(Gf field, int dim)
      : _field(field), _dim(dim) {}

  bool ScalarMatrixGroup::contains(int lambda, GfMatrix const& m) const {
    return _codes.count(fuse_codes(static_cast<std::uint32_t>(lambda), m.code()))
           != 0;
  }

  void ScalarMatrixGroup::insert(int lambda, GfMatrix const& m) {
    _codes.insert(fuse_codes(static_cast<std::uint32_t>(lambda), m.code()));
  }

  bool ScalarMatrixGroup::subgroup_of(ScalarMatrixGroup const& that) const {
    for (auto c : _codes) {
      if (!that._codes.count(c)) {
        return false;
      }
    }
    return true;
  }

  bool ScalarMatrixGroup::operator==(ScalarMatrixGroup const& that) const {
    return _field == that._field && _dim == that._dim && _codes == that._codes;
  }

  ScalarMatrixGroup scalar_pair_normal_closure(
      Gf field, int dim, std::vector<std::pair<int, GfMatrix>> const& seeds) {
    using Elem = std::pair<int, GfMatrix>;
    std::vector<Elem> conj_gens;
    for (auto const& g : gl_generators(field, dim)) {
      conj_gens.push_back({1, g});
    }
    auto mul = [&](Elem const& x, Elem const& y) {
      return Elem{field.mul(x.first, y.first), x.second * y.second};
    };
    auto inv = [&](Elem const& x) {
      return Elem{field.inv(x.first), x.second.inverse()};
    };
    std::unordered_set<std::uint64_t> seen;
    std::vector<Elem>                 gen_set, queue;
    auto push = [&](Elem const& x) {
      if (seen
              .insert(fuse_codes(static_cast<std::uint32_t>(x.first),
                                 x.second.code()))
              .second) {
        gen_set.push_back(x);
        queue.push_back(x);
      }
    };
    for (auto const& s : seeds) {
      push(s);
    }
    while (!queue.empty()) {
      auto x = queue.back();
      queue.pop_back();
      for (auto const& g : conj_gens) {
        push(mul(mul(inv(g), x), g));
        push(mul(mul(g, x), inv(g)));
      }
    }
    ScalarMatrixGroup out(field, dim);
    Elem              id{1, GfMatrix::identity(field, dim)};
    out.insert(id.first, id.second);
    std::vector<Elem> frontier{id};
    std::vector<Elem> steps;
    for (auto const& t : gen_set) {
      steps.push_back(t);
      steps.push_back(inv(t));
    }
    while (!frontier.empty()) {
      auto x = frontier.back();
      frontier.pop_back();
      for (auto const& t : steps) {
        auto y = mul(x, t);
        if (!out.contains(y.first, y.second)) {
          out.insert(y.first, y.second);
          frontier.push_back(y);
        }
      }
    }
    return out;
  }

  MatrixProductPrincipal::MatrixProductPrincipal(MatrixPair a, MatrixPair b)
      : _tag(Case::identity), _gen_a(std::move(a)), _gen_b(std::move(b)) {}

  MatrixProductPrincipal MatrixProductPrincipal::make(MatrixPair const& a,
                                                      MatrixPair const& b) {
    if (a.first.field() != b.first.field() || a.first.dim() != b.first.dim()
        || a.second.field() != b.second.field()
        || a.second.dim() != b.second.dim()
        || a.first.field() != a.second.field()) {
      throw std::invalid_argument("generators do not match the product");
    }
    Gf const field = a.first.field();
    auto const& K  = a.first;
    auto const& L  = a.second;
    auto const& K2 = b.first;
    auto const& L2 = b.second;

    MatrixProductPrincipal out(a, b);
    auto lam = scalar_ratio(K2, K);  // K2 = lam * K
    auto nu  = scalar_ratio(L2, L);
    bool kh  = green_related(K, K2, GreenRelation::H);
    bool lh  = green_related(L, L2, GreenRelation::H);

    auto reduced_block = [&](GfMatrix const& base, GfMatrix const& other,
                             int dim) {
      auto [s1, s2] = reduce_to_partial_identity(base);
      auto r        = s1 * other * s2;
      std::vector<int> entries(dim * dim);
      for (int x = 0; x < dim; ++x) {
        for (int y = 0; y < dim; ++y) {
          entries[x * dim + y] = r.at(x, y);
        }
      }
      return GfMatrix(field, dim, std::move(entries));
    };

    if (K == K2 && L == L2) {
      out._tag = Case::identity;
    } else if (lam && nu) {
      out._tag         = Case::scalar_both;
      out._left_bound  = K.rank();
      out._right_bound = L.rank();
      std::set<std::pair<int, int>> pairs{{1, 1}};
      int x = *lam, y = *nu;
      while (pairs.insert({x, y}).second) {
        x = field.mul(x, *lam);
        y = field.mul(y, *nu);
      }
      out._scalar_pairs = std::move(pairs);
    } else if (!kh && !lh) {
      out._tag = Case::rees;
    } else if (!kh && lh) {
      out._tag           = Case::h_right;
      out._left_bound    = std::max(K.rank(), K2.rank());
      out._right_bound   = L.rank();
      out._side          = principal_congruence(L, L2);
      out._side_is_right = true;
    } else if (kh && !lh) {
      out._tag         = Case::h_left;
      out._left_bound  = K.rank();
      out._right_bound = std::max(L.rank(), L2.rank());
      out._side        = principal_congruence(K, K2);
    } else if (lam && !nu) {
      out._tag         = Case::scalar_h;
      out._left_bound  = K.rank();
      out._right_bound = L.rank();
      out._scalar_gen  = field.unit_closure(*lam);
      out._scalar_side = scalar_pair_normal_closure(
          field, L.rank(), {{*lam, reduced_block(L, L2, L.rank())}});
    } else if (!lam && nu) {
      out._tag         = Case::h_scalar;
      out._left_bound  = K.rank();
      out._right_bound = L.rank();
      out._scalar_gen  = field.unit_closure(*nu);
      out._scalar_side = scalar_pair_normal_closure(
          field, K.rank(), {{*nu, reduced_block(K, K2, K.rank())}});
    } else {
      out._tag         = Case::h_both;
      out._left_bound  = K.rank();
      out._right_bound = L.rank();
      out._joint       = associated_normal_subgroup(a, b);
      out._joint_left  = out._joint->project_left();
      out._joint_right = out._joint->project_right();
    }
    return out;
  }

  std::string MatrixProductPrincipal::case_name() const {
    switch (_tag) {
      case Case::identity:
        return "identity";
      case Case::scalar_both:
        return "scalar-both";
      case Case::rees:
        return "rees";
      case Case::h_right:
        return "h-right";
      case Case::h_left:
        return "h-left";
      case Case::scalar_h:
        return "scalar-h";
      case Case::h_scalar:
        return "h-scalar";
      default:
        return "h-both";
    }
  }

  bool MatrixProductPrincipal::in_rees_ideal(GfMatrix const& a,
                                             GfMatrix const& b) const {
    int const i = detail::cached_rank(_gen_a.first);
    int const k = detail::cached_rank(_gen_a.second);
    int const j = detail::cached_rank(_gen_b.first);
    int const l = detail::cached_rank(_gen_b.second);
    int const ra = detail::cached_rank(a), rb = detail::cached_rank(b);
    return (ra <= i && rb <= k) || (ra <= j && rb <= l);
  }

  bool MatrixProductPrincipal::related(GfMatrix const& m, GfMatrix const& n,
                                       GfMatrix const& m2,
                                       GfMatrix const& n2) const {
    if (m == m2 && n == n2) {
      return true;
    }
    Gf const field = m.field();
    switch (_tag) {
      case Case::identity:
        return false;
      case Case::scalar_both: {
        if (detail::cached_rank(m) > _left_bound
            || detail::cached_rank(n) > _right_bound) {
          return false;
        }
        for (auto const& [lp, np] : *_scalar_pairs) {
          if (m2 == m.scaled(lp) && n2 == n.scaled(np)) {
            return true;
          }
        }
        return false;
      }
      case Case::rees:
        return in_rees_ideal(m, n) && in_rees_ideal(m2, n2);
      case Case::h_right:
        return detail::cached_rank(m) <= _left_bound
               && detail::cached_rank(m2) <= _left_bound
               && detail::cached_rank(n) <= _right_bound
               && detail::cached_rank(n2) <= _right_bound
               && _side->related(n, n2);
      case Case::h_left:
        return detail::cached_rank(n) <= _right_bound
               && detail::cached_rank(n2) <= _right_bound
               && detail::cached_rank(m) <= _left_bound
               && detail::cached_rank(m2) <= _left_bound
               && _side->related(m, m2);
      case Case::scalar_h: {
        int const i = _left_bound, j = _right_bound;
        if (detail::cached_rank(m) > i) {
          return false;
        }
        if (detail::cached_rank(n) == j
            && detail::cached_hclass(n) == detail::cached_hclass(n2)) {
          auto rn2 = detail::reduced_block(n, n2);
          for (int lp = 1; lp < field.p; ++lp) {
            if (m2 == m.scaled(lp) && _scalar_side->contains(lp, rn2)) {
              return true;
            }
          }
          return false;
        }
        if (detail::cached_rank(n) < j && detail::cached_rank(n2) < j) {
          for (int lp : *_scalar_gen) {
            if (m2 == m.scaled(lp)) {
              return true;
            }
          }
        }
        return false;
      }
      case Case::h_scalar: {
        int const i = _left_bound, j = _right_bound;
        if (detail::cached_rank(n) > j) {
          return false;
        }
        if (detail::cached_rank(m) == i
            && detail::cached_hclass(m) == detail::cached_hclass(m2)) {
          auto rm2 = detail::reduced_block(m, m2);
          for (int np = 1; np < field.p; ++np) {
            if (n2 == n.scaled(np) && _scalar_side->contains(np, rm2)) {
              return true;
            }
          }
          return false;
        }
        if (detail::cached_rank(m) < i && detail::cached_rank(m2) < i) {
          for (int np : *_scalar_gen) {
            if (n2 == n.scaled(np)) {
              return true;
            }
          }
        }
        return false;
      }
      default: {  // h_both
        int const i = _left_bound, j = _right_bound;
        bool mh = detail::cached_rank(m) == i
                  && detail::cached_hclass(m) == detail::cached_hclass(m2);
        bool nh = detail::cached_rank(n) == j
                  && detail::cached_hclass(n) == detail::cached_hclass(n2);
        if (mh && nh) {
          return _joint->contains(detail::reduced_block(m, m2),
                                  detail::reduced_block(n, n2));
        }
        if (mh && detail::cached_rank(n) < j && detail::cached_rank(n2) < j) {
          return _joint_left->contains(detail::reduced_block(m, m2));
        }
        if (nh && detail::cached_rank(m) < i && detail::cached_rank(m2) < i) {
          return _joint_right->contains(detail::reduced_block(n, n2));
        }
        return detail::cached_rank(m) < i && detail::cached_rank(m2) < i
               && detail::cached_rank(n) < j && detail::cached_rank(n2) < j;
      }
    }
  }

  std::string MatrixProductPrincipal::describe() const {
    std::ostringstream os;
    os << "case " << case_name();
    switch (_tag) {
      case Case::identity:
        break;
      case Case::scalar_both:
        os << ", rank bounds (" << _left_bound << "," << _right_bound
           << "), |<pair>|=" << _scalar_pairs->size();
        break;
      case Case::rees:
        os << ", ideal (" << _gen_a.first.rank() << "," << _gen_a.second.rank()
           << ")|(" << _gen_b.first.rank() << "," << _gen_b.second.rank() << ")";
        break;
      case Case::h_right:
      case Case::h_left:
        os << ", rank bounds (" << _left_bound << "," << _right_bound
           << "), factor " << _side->case_name;
        break;
      case Case::scalar_h:
      case Case::h_scalar:
        os << ", rank bounds (" << _left_bound << "," << _right_bound
           << "), |H|=" << _scalar_side->size();
        break;
      default:
        os << ", rank bounds (" << _left_bound << "," << _right_bound
           << "), |H|=" << _joint->size();
        break;
    }
    return os.str();
  }

}  // namespace congrkit
