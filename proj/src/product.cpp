#include "congrkit/product.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace congrkit {

  namespace {
    void check_factor(MonoidSpec const& spec) {
      if (spec.family == Family::T && spec.degree < 2) {
        throw std::invalid_argument("the trivial factor T1 is excluded from products");
      }
      // PT_n and I_n are allowed from degree 1 (they are non-trivial there)
    }
  }  // namespace

  ProductSpec::ProductSpec(MonoidSpec l, MonoidSpec r) : left(l), right(r) {
    check_factor(left);
    check_factor(right);
  }

  ProductSpec ProductSpec::parse(std::string const& text) {
    auto sep = text.find('x');
    if (sep == std::string::npos) {
      throw std::invalid_argument("bad product literal '" + text
                                  + "': expected <FAM><m>x<FAM><n>");
    }
    return ProductSpec(MonoidSpec::parse(text.substr(0, sep)),
                       MonoidSpec::parse(text.substr(sep + 1)));
  }

  std::string ProductSpec::to_string() const {
    return left.to_string() + "x" + right.to_string();
  }

  ProductElement parse_product_element(ProductSpec const& spec,
                                       std::string const& text) {
    size_t pos = 0;
    auto   skip_ws = [&]() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') {
      throw std::invalid_argument("product element literal must start with '('");
    }
    ++pos;
    int  depth = 0;
    auto start = pos;
    std::vector<std::string> parts;
    for (; pos < text.size(); ++pos) {
      char c = text[pos];
      if (c == '[') {
        ++depth;
      } else if (c == ']') {
        --depth;
      } else if ((c == ',' || c == '|') && depth == 0) {
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
      } else if (c == ')' && depth == 0) {
        parts.push_back(text.substr(start, pos - start));
        ++pos;
        break;
      }
    }
    if (parts.size() != 2) {
      throw std::invalid_argument("product element literal needs two components");
    }
    return {Transformation::parse(spec.left, parts[0]),
            Transformation::parse(spec.right, parts[1])};
  }

  std::string to_string(ProductElement const& e) {
    return "(" + e.first.to_string() + "," + e.second.to_string() + ")";
  }

  ProductPrincipal::ProductPrincipal(ProductSpec    spec,
                                     ProductElement a,
                                     ProductElement b)
      : _spec(spec),
        _tag(Case::identity),
        _gen_a(std::move(a)),
        _gen_b(std::move(b)) {}

  ProductPrincipal ProductPrincipal::make(ProductSpec const&    spec,
                                          ProductElement const& a,
                                          ProductElement const& b) {
    if (a.first.monoid() != spec.left || a.second.monoid() != spec.right
        || b.first.monoid() != spec.left || b.second.monoid() != spec.right) {
      throw std::invalid_argument("generators do not match the product");
    }
    auto const& f  = a.first;
    auto const& g  = a.second;
    auto const& f2 = b.first;
    auto const& g2 = b.second;

    ProductPrincipal out(spec, a, b);
    bool const fh = green_related(f, f2, GreenRelation::H);
    bool const gh = green_related(g, g2, GreenRelation::H);

    if (f == f2 && g == g2) {
      out._tag = Case::identity;
    } else if (f == f2) {
      out._tag         = Case::fixed_left;
      out._left_bound  = f.rank();
      out._theta_right = principal_congruence(g, g2);
    } else if (g == g2) {
      out._tag        = Case::fixed_right;
      out._right_bound = g.rank();
      out._theta_left = principal_congruence(f, f2);
    } else if (!fh && !gh) {
      out._tag = Case::rees;
    } else if (!fh && gh) {
      out._tag         = Case::h_right;
      out._left_bound  = std::max(f.rank(), f2.rank());
      out._right_bound = g.rank();
      out._theta_right = principal_congruence(g, g2);
    } else if (fh && !gh) {
      out._tag        = Case::h_left;
      out._left_bound = f.rank();
      out._right_bound = std::max(g.rank(), g2.rank());
      out._theta_left = principal_congruence(f, f2);
    } else {
      out._tag         = Case::h_both;
      out._left_bound  = f.rank();
      out._right_bound = g.rank();
      out._theta_left  = principal_congruence(f, f2);
      out._theta_right = principal_congruence(g, g2);
      auto s1 = hclass_witness(f, f2);
      auto s2 = hclass_witness(g, g2);
      out._joint = normal_closure(f.rank(), g.rank(), *s1, *s2);
    }
    return out;
  }

  std::string ProductPrincipal::case_name() const {
    switch (_tag) {
      case Case::identity:
        return "identity";
      case Case::fixed_left:
        return "fixed-left";
      case Case::fixed_right:
        return "fixed-right";
      case Case::rees:
        return "rees";
      case Case::h_right:
        return "h-right";
      case Case::h_left:
        return "h-left";
      default:
        return "h-both";
    }
  }

  bool ProductPrincipal::in_rees_ideal(Transformation const& a,
                                       Transformation const& b) const {
    int const i = _gen_a.first.rank(), k = _gen_a.second.rank();
    int const j = _gen_b.first.rank(), l = _gen_b.second.rank();
    return (a.rank() <= i && b.rank() <= k) || (a.rank() <= j && b.rank() <= l);
  }

  bool ProductPrincipal::related(Transformation const& a,
                                 Transformation const& b,
                                 Transformation const& c,
                                 Transformation const& d) const {
    if (a == c && b == d) {
      return true;
    }
    switch (_tag) {
      case Case::identity:
        return false;
      case Case::fixed_left:
        return a == c && a.rank() <= _left_bound && _theta_right->related(b, d);
      case Case::fixed_right:
        return b == d && b.rank() <= _right_bound && _theta_left->related(a, c);
      case Case::rees:
        return in_rees_ideal(a, b) && in_rees_ideal(c, d);
      case Case::h_right:
        return a.rank() <= _left_bound && c.rank() <= _left_bound
               && b.rank() <= _right_bound && d.rank() <= _right_bound
               && _theta_right->related(b, d);
      case Case::h_left:
        return b.rank() <= _right_bound && d.rank() <= _right_bound
               && a.rank() <= _left_bound && c.rank() <= _left_bound
               && _theta_left->related(a, c);
      default:
        break;
    }
    int const i = _left_bound, k = _right_bound;
    if (a.rank() <= i - 1 && c.rank() <= i - 1 && b.rank() <= k - 1
        && d.rank() <= k - 1) {
      return true;
    }
    if (a.rank() == i && c.rank() == i && b.rank() <= k - 1 && d.rank() <= k - 1) {
      return _theta_left->related(a, c);
    }
    if (a.rank() <= i - 1 && c.rank() <= i - 1 && b.rank() == k && d.rank() == k) {
      return _theta_right->related(b, d);
    }
    if (a.rank() == i && c.rank() == i && b.rank() == k && d.rank() == k) {
      auto t1 = hclass_witness(a, c);
      if (!t1) {
        return false;
      }
      auto t2 = hclass_witness(b, d);
      if (!t2) {
        return false;
      }
      return _joint->contains(*t1, *t2);
    }
    return false;
  }

  bool ProductPrincipal::related_unbounded_variant(Transformation const& a,
                                                   Transformation const& b,
                                                   Transformation const& c,
                                                   Transformation const& d) const {
    if (a == c && b == d) {
      return true;
    }
    switch (_tag) {
      case Case::fixed_left: {
        auto const& t2 = *_theta_right;
        if (a != c) {
          return false;
        }
        if (!t2.is_universal() && b.rank() == t2.level() && d.rank() == t2.level()
            && t2.related(b, d)) {
          return true;  // H-level clause without the bound on |a|
        }
        return a.rank() <= _left_bound && t2.related(b, d);
      }
      case Case::fixed_right: {
        auto const& t1 = *_theta_left;
        if (b != d) {
          return false;
        }
        if (!t1.is_universal() && a.rank() == t1.level() && c.rank() == t1.level()
            && t1.related(a, c)) {
          return true;
        }
        return b.rank() <= _right_bound && t1.related(a, c);
      }
      default:
        return related(a, b, c, d);
    }
  }

  std::string ProductPrincipal::describe() const {
    std::ostringstream os;
    os << "case " << case_name();
    switch (_tag) {
      case Case::identity:
        break;
      case Case::fixed_left:
        os << ", left rank bound " << _left_bound << ", right factor "
           << _theta_right->to_string();
        break;
      case Case::fixed_right:
        os << ", right rank bound " << _right_bound << ", left factor "
           << _theta_left->to_string();
        break;
      case Case::rees:
        os << ", ideal (" << _gen_a.first.rank() << "," << _gen_a.second.rank()
           << ")|(" << _gen_b.first.rank() << "," << _gen_b.second.rank() << ")";
        break;
      case Case::h_right:
        os << ", left rank bound " << _left_bound << ", right factor "
           << _theta_right->to_string();
        break;
      case Case::h_left:
        os << ", right rank bound " << _right_bound << ", left factor "
           << _theta_left->to_string();
        break;
      default:
        os << ", ranks (" << _left_bound << "," << _right_bound << "), N="
           << _joint->to_string();
        break;
    }
    return os.str();
  }

  Partition theta_slice(
      std::function<bool(Transformation const&, Transformation const&,
                         Transformation const&, Transformation const&)> const&
                                         related,
      Transformation const&              f,
      std::vector<Transformation> const& right_elements) {
    int const n = static_cast<int>(right_elements.size());
    std::vector<int> block(n, -1);
    int next = 0;
    for (int x = 0; x < n; ++x) {
      if (block[x] >= 0) {
        continue;
      }
      block[x] = next;
      for (int y = x + 1; y < n; ++y) {
        if (block[y] < 0 && related(f, right_elements[x], f, right_elements[y])) {
          block[y] = next;
        }
      }
      ++next;
    }
    return Partition(std::move(block));
  }

  std::vector<std::pair<int, int>> fixed_case_reading_differences(
      ProductPrincipal const& pc,
      ProductUniverse const&  universe) {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < universe.size(); ++x) {
      auto [a, b] = universe.element(x);
      for (int y = x + 1; y < universe.size(); ++y) {
        auto [c, d] = universe.element(y);
        if (pc.related(a, b, c, d) != pc.related_unbounded_variant(a, b, c, d)) {
          out.push_back({x, y});
        }
      }
    }
    return out;
  }

}  // namespace congrkit
