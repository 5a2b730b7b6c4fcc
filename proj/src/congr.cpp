#include "congrkit/congr.hpp"

#include <algorithm>
#include <stdexcept>

namespace congrkit {

  MonoidCongruence::MonoidCongruence(MonoidSpec        spec,
                                     bool              universal,
                                     int               level,
                                     SymNormalSubgroup group)
      : _spec(spec), _universal(universal), _level(level), _group(group) {}

  MonoidCongruence MonoidCongruence::universal(MonoidSpec spec) {
    return MonoidCongruence(spec, true, 0, SymNormalSubgroup::trivial(0));
  }

  MonoidCongruence MonoidCongruence::theta(MonoidSpec        spec,
                                           int               level,
                                           SymNormalSubgroup group) {
    if (level < 1 || level > spec.degree) {
      throw std::invalid_argument("congruence level must satisfy 1 <= k <= n");
    }
    if (group.degree() != level) {
      throw std::invalid_argument("group degree must equal the congruence level");
    }
    return MonoidCongruence(spec, false, level, group);
  }

  MonoidCongruence MonoidCongruence::identity(MonoidSpec spec) {
    return theta(spec, 1, SymNormalSubgroup::trivial(1));
  }

  MonoidCongruence MonoidCongruence::rees(MonoidSpec spec, int ideal_bound) {
    if (ideal_bound < spec.rank_floor() || ideal_bound > spec.degree) {
      throw std::invalid_argument("ideal bound out of range");
    }
    if (ideal_bound == spec.degree) {
      return universal(spec);
    }
    return theta(spec, ideal_bound + 1, SymNormalSubgroup::trivial(ideal_bound + 1));
  }

  MonoidCongruence MonoidCongruence::parse(MonoidSpec spec, std::string const& text) {
    if (text == "universal") {
      return universal(spec);
    }
    if (text == "iota") {
      return identity(spec);
    }
    if (text.compare(0, 6, "theta(") == 0 && text.back() == ')') {
      auto body  = text.substr(6, text.size() - 7);
      auto comma = body.find(',');
      if (comma != std::string::npos) {
        int k = std::stoi(body.substr(0, comma));
        return theta(spec, k, SymNormalSubgroup::parse(k, body.substr(comma + 1)));
      }
    }
    throw std::invalid_argument("bad congruence literal '" + text
                                + "': expected iota, universal or theta(k,N)");
  }

  bool MonoidCongruence::is_identity() const {
    return !_universal && _level == 1;
  }

  int MonoidCongruence::level() const {
    if (_universal) {
      throw std::logic_error("the universal congruence has no level");
    }
    return _level;
  }

  SymNormalSubgroup const& MonoidCongruence::group() const {
    if (_universal) {
      throw std::logic_error("the universal congruence has no group");
    }
    return _group;
  }

  bool MonoidCongruence::related(Transformation const& f,
                                 Transformation const& g) const {
    if (f.monoid() != _spec || g.monoid() != _spec) {
      throw std::invalid_argument("elements of a different monoid");
    }
    if (_universal) {
      return true;
    }
    if (f.rank() < _level && g.rank() < _level) {
      return true;
    }
    if (f.rank() != g.rank()) {
      return false;
    }
    if (f.rank() > _level) {
      return f == g;
    }
    // equal rank = level: H-related with witness in the group
    auto s = hclass_witness(g, f);
    return s.has_value() && _group.contains(*s);
  }

  std::string MonoidCongruence::to_string() const {
    if (_universal) {
      return "universal";
    }
    if (is_identity()) {
      return "iota";
    }
    return "theta(" + std::to_string(_level) + "," + _group.to_string() + ")";
  }

  bool MonoidCongruence::operator==(MonoidCongruence const& that) const {
    if (_spec != that._spec) {
      return false;
    }
    if (_universal || that._universal) {
      return _universal == that._universal;
    }
    return _level == that._level && _group == that._group;
  }

  MonoidCongruence principal_congruence(Transformation const& f,
                                        Transformation const& g) {
    if (f.monoid() != g.monoid()) {
      throw std::invalid_argument("elements of different monoids");
    }
    auto spec = f.monoid();
    if (f == g) {
      return MonoidCongruence::identity(spec);
    }
    if (auto s = hclass_witness(f, g)) {
      return MonoidCongruence::theta(spec, f.rank(), normal_closure(f.rank(), *s));
    }
    int k = std::max(f.rank(), g.rank());
    return MonoidCongruence::rees(spec, k);
  }

  std::vector<MonoidCongruence> congruence_chain(MonoidSpec spec) {
    if (spec.degree < 2) {
      throw std::invalid_argument("the congruence chain needs degree >= 2");
    }
    std::vector<MonoidCongruence> out;
    out.push_back(MonoidCongruence::identity(spec));
    for (int k = 2; k <= spec.degree; ++k) {
      for (auto const& n : all_normal_subgroups(k)) {
        out.push_back(MonoidCongruence::theta(spec, k, n));
      }
    }
    out.push_back(MonoidCongruence::universal(spec));
    return out;
  }

}  // namespace congrkit
