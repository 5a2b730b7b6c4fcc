#include "congrkit/groups.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace congrkit {

  namespace {
    std::uint64_t factorial(int n) {
      std::uint64_t r = 1;
      for (int t = 2; t <= n; ++t) {
        r *= t;
      }
      return r;
    }

    bool is_double_transposition(Permutation const& p) {
      if (p.degree() != 4 || p.is_identity()) {
        return false;
      }
      for (int x = 0; x < 4; ++x) {
        if (p[x] == x || p[p[x]] != x) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  SymNormalSubgroup::SymNormalSubgroup(int degree, SkKind kind)
      : _degree(degree), _kind(kind) {
    if (degree < 0) {
      throw std::invalid_argument("negative degree");
    }
    if (kind == SkKind::klein4 && degree != 4) {
      throw std::invalid_argument("the Klein subgroup only exists at degree 4");
    }
    // canonical form: S_0 = S_1 = eps, A_2 = eps
    if (degree <= 1) {
      _kind = SkKind::trivial;
    } else if (degree == 2 && kind == SkKind::alternating) {
      _kind = SkKind::trivial;
    }
  }

  SymNormalSubgroup SymNormalSubgroup::parse(int degree, std::string const& text) {
    if (text == "eps") {
      return SymNormalSubgroup(degree, SkKind::trivial);
    }
    if (text == "V4") {
      return SymNormalSubgroup(degree, SkKind::klein4);
    }
    if (text == "A") {
      return SymNormalSubgroup(degree, SkKind::alternating);
    }
    if (text == "S") {
      return SymNormalSubgroup(degree, SkKind::full);
    }
    throw std::invalid_argument("bad subgroup literal '" + text
                                + "': expected eps, V4, A or S");
  }

  bool SymNormalSubgroup::contains(Permutation const& p) const {
    if (p.degree() != _degree) {
      throw std::invalid_argument("degree mismatch in subgroup membership");
    }
    switch (_kind) {
      case SkKind::trivial:
        return p.is_identity();
      case SkKind::klein4:
        return p.is_identity() || is_double_transposition(p);
      case SkKind::alternating:
        return is_even(p);
      default:
        return true;
    }
  }

  bool SymNormalSubgroup::subgroup_of(SymNormalSubgroup const& that) const {
    if (_degree != that._degree) {
      throw std::invalid_argument("degree mismatch in subgroup comparison");
    }
    switch (_kind) {
      case SkKind::trivial:
        return true;
      case SkKind::klein4:
        return that._kind != SkKind::trivial;
      case SkKind::alternating:
        return that._kind == SkKind::alternating || that._kind == SkKind::full;
      default:
        return that._kind == SkKind::full;
    }
  }

  bool SymNormalSubgroup::even_only() const {
    switch (_kind) {
      case SkKind::trivial:
      case SkKind::klein4:
      case SkKind::alternating:
        return true;
      default:
        return _degree <= 1;
    }
  }

  std::uint64_t SymNormalSubgroup::size() const {
    switch (_kind) {
      case SkKind::trivial:
        return 1;
      case SkKind::klein4:
        return 4;
      case SkKind::alternating:
        return factorial(_degree) / 2;
      default:
        return factorial(_degree);
    }
  }

  std::string SymNormalSubgroup::to_string() const {
    switch (_kind) {
      case SkKind::trivial:
        return "eps";
      case SkKind::klein4:
        return "V4";
      case SkKind::alternating:
        return "A";
      default:
        return "S";
    }
  }

  SymNormalSubgroup normal_closure(int degree, Permutation const& p) {
    if (p.degree() != degree) {
      throw std::invalid_argument("degree mismatch in normal closure");
    }
    SymNormalSubgroup out = [&]() {
      if (p.is_identity()) {
        return SymNormalSubgroup(degree, SkKind::trivial);
      }
      if (!is_even(p)) {
        return SymNormalSubgroup(degree, SkKind::full);
      }
      if (degree == 4 && is_double_transposition(p)) {
        return SymNormalSubgroup(degree, SkKind::klein4);
      }
      return SymNormalSubgroup(degree, SkKind::alternating);
    }();
#ifndef NDEBUG
    if (degree <= 5) {
      assert(bruteforce::normal_closure_elements(degree, p)
             == bruteforce::elements(out));
    }
#endif
    return out;
  }

  std::vector<SymNormalSubgroup> all_normal_subgroups(int degree) {
    std::vector<SymNormalSubgroup> out;
    out.push_back(SymNormalSubgroup(degree, SkKind::trivial));
    if (degree == 4) {
      out.push_back(SymNormalSubgroup(degree, SkKind::klein4));
    }
    if (degree >= 3) {
      out.push_back(SymNormalSubgroup(degree, SkKind::alternating));
    }
    if (degree >= 2) {
      out.push_back(SymNormalSubgroup(degree, SkKind::full));
    }
    return out;
  }

  ProductNormalSubgroup::ProductNormalSubgroup(SymNormalSubgroup l,
                                               SymNormalSubgroup r,
                                               bool              diag)
      : _left(l), _right(r), _diagonal(diag) {}

  ProductNormalSubgroup ProductNormalSubgroup::product(SymNormalSubgroup left,
                                                       SymNormalSubgroup right) {
    return ProductNormalSubgroup(left, right, false);
  }

  ProductNormalSubgroup ProductNormalSubgroup::parity_diagonal(int left_degree,
                                                               int right_degree) {
    if (left_degree < 2 || right_degree < 2) {
      throw std::invalid_argument(
          "the parity diagonal needs both degrees at least 2");
    }
    return ProductNormalSubgroup(SymNormalSubgroup::full(left_degree),
                                 SymNormalSubgroup::full(right_degree),
                                 true);
  }

  ProductNormalSubgroup ProductNormalSubgroup::parse(int                left_degree,
                                                     int                right_degree,
                                                     std::string const& text) {
    if (text == "parity") {
      return parity_diagonal(left_degree, right_degree);
    }
    auto sep = text.find('x');
    if (sep == std::string::npos) {
      throw std::invalid_argument("bad product subgroup literal '" + text
                                  + "': expected parity or <N1>x<N2>");
    }
    return product(SymNormalSubgroup::parse(left_degree, text.substr(0, sep)),
                   SymNormalSubgroup::parse(right_degree, text.substr(sep + 1)));
  }

  SymNormalSubgroup const& ProductNormalSubgroup::left() const {
    if (_diagonal) {
      throw std::logic_error("the parity diagonal has no product factors");
    }
    return _left;
  }

  SymNormalSubgroup const& ProductNormalSubgroup::right() const {
    if (_diagonal) {
      throw std::logic_error("the parity diagonal has no product factors");
    }
    return _right;
  }

  bool ProductNormalSubgroup::contains(Permutation const& a,
                                       Permutation const& b) const {
    if (a.degree() != left_degree() || b.degree() != right_degree()) {
      throw std::invalid_argument("degree mismatch in product membership");
    }
    if (_diagonal) {
      return parity(a) == parity(b);
    }
    return _left.contains(a) && _right.contains(b);
  }

  bool ProductNormalSubgroup::subgroup_of(ProductNormalSubgroup const& that) const {
    if (left_degree() != that.left_degree()
        || right_degree() != that.right_degree()) {
      throw std::invalid_argument("degree mismatch in product comparison");
    }
    if (_diagonal && that._diagonal) {
      return true;
    }
    if (_diagonal) {
      return that._left.kind() == SkKind::full && that._right.kind() == SkKind::full;
    }
    if (that._diagonal) {
      return _left.even_only() && _right.even_only();
    }
    return _left.subgroup_of(that._left) && _right.subgroup_of(that._right);
  }

  SymNormalSubgroup ProductNormalSubgroup::project_left() const {
    return _diagonal ? SymNormalSubgroup::full(left_degree()) : _left;
  }

  SymNormalSubgroup ProductNormalSubgroup::project_right() const {
    return _diagonal ? SymNormalSubgroup::full(right_degree()) : _right;
  }

  SymNormalSubgroup ProductNormalSubgroup::left_fiber() const {
    return _diagonal ? SymNormalSubgroup(left_degree(), SkKind::alternating)
                     : _left;
  }

  SymNormalSubgroup ProductNormalSubgroup::right_fiber() const {
    return _diagonal ? SymNormalSubgroup(right_degree(), SkKind::alternating)
                     : _right;
  }

  std::uint64_t ProductNormalSubgroup::size() const {
    if (_diagonal) {
      return factorial(left_degree()) * factorial(right_degree()) / 2;
    }
    return _left.size() * _right.size();
  }

  std::string ProductNormalSubgroup::to_string() const {
    if (_diagonal) {
      return "parity";
    }
    return _left.to_string() + "x" + _right.to_string();
  }

  bool ProductNormalSubgroup::operator==(ProductNormalSubgroup const& that) const {
    if (left_degree() != that.left_degree()
        || right_degree() != that.right_degree()) {
      return false;
    }
    if (_diagonal != that._diagonal) {
      return false;
    }
    return _diagonal || (_left == that._left && _right == that._right);
  }

  ProductNormalSubgroup normal_closure(int                left_degree,
                                       int                right_degree,
                                       Permutation const& a,
                                       Permutation const& b) {
    ProductNormalSubgroup out
        = (!is_even(a) && !is_even(b))
              ? ProductNormalSubgroup::parity_diagonal(left_degree, right_degree)
              : ProductNormalSubgroup::product(normal_closure(left_degree, a),
                                               normal_closure(right_degree, b));
#ifndef NDEBUG
    if (left_degree <= 4 && right_degree <= 4) {
      assert(bruteforce::normal_closure_elements(left_degree, right_degree, a, b)
             == bruteforce::elements(out));
    }
#endif
    return out;
  }

  std::vector<ProductNormalSubgroup> all_normal_subgroups(int left_degree,
                                                          int right_degree) {
    if (left_degree > 5 || right_degree > 5) {
      throw std::invalid_argument("product normal subgroups only enumerated up "
                                  "to degree 5 per factor");
    }
    std::vector<ProductNormalSubgroup> out;
    for (auto const& l : all_normal_subgroups(left_degree)) {
      for (auto const& r : all_normal_subgroups(right_degree)) {
        out.push_back(ProductNormalSubgroup::product(l, r));
      }
    }
    if (left_degree >= 2 && right_degree >= 2) {
      out.push_back(
          ProductNormalSubgroup::parity_diagonal(left_degree, right_degree));
    }
    return out;
  }

  namespace bruteforce {

    namespace {
      // Closure of the seeds under products and conjugation, breadth first.
      // The group is given by its full element list; fine at these orders.
      template <typename Elem, typename Mul, typename Inv>
      std::set<Elem> closure(std::vector<Elem> const& seeds,
                             std::vector<Elem> const& group,
                             Mul                      mul,
                             Inv                      inv,
                             Elem const&              id) {
        std::set<Elem>    members{id};
        std::vector<Elem> queue;
        auto push = [&](Elem const& e) {
          if (members.insert(e).second) {
            queue.push_back(e);
          }
        };
        for (auto const& s : seeds) {
          push(s);
        }
        while (!queue.empty()) {
          Elem x = queue.back();
          queue.pop_back();
          for (auto const& g : group) {
            push(mul(mul(inv(g), x), g));
          }
          for (auto const& m : std::set<Elem>(members)) {
            push(mul(x, m));
            push(mul(m, x));
          }
        }
        return members;
      }
    }  // namespace

    std::set<std::uint64_t> normal_closure_elements(int                degree,
                                                    Permutation const& p) {
      auto group = Permutation::all(degree);
      std::map<std::uint64_t, Permutation> by_code;
      for (auto const& g : group) {
        by_code.emplace(g.code(), g);
      }
      auto mul = [&](std::uint64_t a, std::uint64_t b) {
        return (by_code.at(a) * by_code.at(b)).code();
      };
      auto inv = [&](std::uint64_t a) { return by_code.at(a).inverse().code(); };
      std::vector<std::uint64_t> codes;
      for (auto const& g : group) {
        codes.push_back(g.code());
      }
      return closure(std::vector<std::uint64_t>{p.code()},
                     codes,
                     mul,
                     inv,
                     Permutation::identity(degree).code());
    }

    std::set<PermPair> normal_closure_elements(int                left_degree,
                                               int                right_degree,
                                               Permutation const& a,
                                               Permutation const& b) {
      auto ls = Permutation::all(left_degree);
      auto rs = Permutation::all(right_degree);
      std::map<std::uint64_t, Permutation> by_code;
      for (auto const& g : ls) {
        by_code.emplace(g.code(), g);
      }
      for (auto const& g : rs) {
        by_code.emplace(g.code(), g);
      }
      auto mul = [&](PermPair const& x, PermPair const& y) {
        return PermPair{(by_code.at(x.first) * by_code.at(y.first)).code(),
                        (by_code.at(x.second) * by_code.at(y.second)).code()};
      };
      auto inv = [&](PermPair const& x) {
        return PermPair{by_code.at(x.first).inverse().code(),
                        by_code.at(x.second).inverse().code()};
      };
      std::vector<PermPair> group;
      for (auto const& l : ls) {
        for (auto const& r : rs) {
          group.push_back({l.code(), r.code()});
        }
      }
      PermPair id{Permutation::identity(left_degree).code(),
                  Permutation::identity(right_degree).code()};
      return closure(std::vector<PermPair>{{a.code(), b.code()}},
                     group,
                     mul,
                     inv,
                     id);
    }

    std::vector<std::set<PermPair>> all_normal_subgroups_elements(
        int left_degree,
        int right_degree) {
      auto ls = Permutation::all(left_degree);
      auto rs = Permutation::all(right_degree);
      // single-element normal closures generate the lattice under join
      std::set<std::set<PermPair>> found;
      for (auto const& l : ls) {
        for (auto const& r : rs) {
          found.insert(normal_closure_elements(left_degree, right_degree, l, r));
        }
      }
      std::map<std::uint64_t, Permutation> by_code;
      for (auto const& g : ls) {
        by_code.emplace(g.code(), g);
      }
      for (auto const& g : rs) {
        by_code.emplace(g.code(), g);
      }
      auto mul = [&](PermPair const& x, PermPair const& y) {
        return PermPair{(by_code.at(x.first) * by_code.at(y.first)).code(),
                        (by_code.at(x.second) * by_code.at(y.second)).code()};
      };
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<std::set<PermPair>> current(found.begin(), found.end());
        for (size_t s = 0; s < current.size() && !grew; ++s) {
          for (size_t t = s + 1; t < current.size() && !grew; ++t) {
            // join = subgroup generated by the union; both sides are normal,
            // so products of members suffice
            std::set<PermPair> join = current[s];
            std::vector<PermPair> queue(current[t].begin(), current[t].end());
            while (!queue.empty()) {
              PermPair x = queue.back();
              queue.pop_back();
              if (!join.insert(x).second) {
                continue;
              }
              for (auto const& m : std::set<PermPair>(join)) {
                queue.push_back(mul(x, m));
                queue.push_back(mul(m, x));
              }
            }
            grew = found.insert(join).second;
          }
        }
      }
      return std::vector<std::set<PermPair>>(found.begin(), found.end());
    }

    std::set<std::uint64_t> elements(SymNormalSubgroup const& n) {
      std::set<std::uint64_t> out;
      for (auto const& p : Permutation::all(n.degree())) {
        if (n.contains(p)) {
          out.insert(p.code());
        }
      }
      return out;
    }

    std::set<PermPair> elements(ProductNormalSubgroup const& n) {
      std::set<PermPair> out;
      for (auto const& a : Permutation::all(n.left_degree())) {
        for (auto const& b : Permutation::all(n.right_degree())) {
          if (n.contains(a, b)) {
            out.insert({a.code(), b.code()});
          }
        }
      }
      return out;
    }

  }  // namespace bruteforce

}  // namespace congrkit
