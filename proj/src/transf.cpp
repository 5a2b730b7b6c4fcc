#include "congrkit/transf.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace congrkit {

  namespace {
    std::uint64_t binomial(int n, int k) {
      if (k < 0 || k > n) {
        return 0;
      }
      std::uint64_t r = 1;
      for (int t = 0; t < k; ++t) {
        r = r * static_cast<std::uint64_t>(n - t) / (t + 1);
      }
      return r;
    }

    std::uint64_t factorial(int n) {
      std::uint64_t r = 1;
      for (int t = 2; t <= n; ++t) {
        r *= t;
      }
      return r;
    }
  }  // namespace

  std::string to_string(Family f) {
    switch (f) {
      case Family::T:
        return "T";
      case Family::PT:
        return "PT";
      default:
        return "I";
    }
  }

  MonoidSpec::MonoidSpec(Family f, int n) : family(f), degree(n) {
    if (n < 1) {
      throw std::invalid_argument("monoid degree must be at least 1");
    }
  }

  std::uint64_t MonoidSpec::size() const {
    std::uint64_t n = degree;
    std::uint64_t r = 1;
    switch (family) {
      case Family::T:
        for (int t = 0; t < degree; ++t) {
          r *= n;
        }
        return r;
      case Family::PT:
        for (int t = 0; t < degree; ++t) {
          r *= n + 1;
        }
        return r;
      default: {
        std::uint64_t s = 0;
        for (int k = 0; k <= degree; ++k) {
          s += binomial(degree, k) * binomial(degree, k) * factorial(k);
        }
        return s;
      }
    }
  }

  std::string MonoidSpec::to_string() const {
    return congrkit::to_string(family) + std::to_string(degree);
  }

  MonoidSpec MonoidSpec::parse(std::string const& text) {
    size_t pos = 0;
    Family fam;
    if (text.compare(0, 2, "PT") == 0) {
      fam = Family::PT;
      pos = 2;
    } else if (!text.empty() && text[0] == 'T') {
      fam = Family::T;
      pos = 1;
    } else if (!text.empty() && text[0] == 'I') {
      fam = Family::I;
      pos = 1;
    } else {
      throw std::invalid_argument("bad monoid literal '" + text
                                  + "': expected T, PT or I prefix");
    }
    if (pos >= text.size()) {
      throw std::invalid_argument("bad monoid literal '" + text + "': missing degree");
    }
    int n = 0;
    for (; pos < text.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument("bad monoid literal '" + text + "' at position "
                                    + std::to_string(pos));
      }
      n = 10 * n + (text[pos] - '0');
    }
    return MonoidSpec(fam, n);
  }

  Transformation::Transformation(MonoidSpec spec, std::vector<int> images)
      : _spec(spec), _images(std::move(images)), _rank(0) {
    if (static_cast<int>(_images.size()) != _spec.degree) {
      throw std::invalid_argument("image vector has wrong length");
    }
    std::vector<bool> hit(_spec.degree + 1, false);
    for (int v : _images) {
      if (v < 0 || v > _spec.degree) {
        throw std::invalid_argument("image point out of range");
      }
      if (v == 0) {
        if (_spec.family == Family::T) {
          throw std::invalid_argument("total transformations cannot be undefined");
        }
        continue;
      }
      if (hit[v]) {
        if (_spec.family == Family::I) {
          throw std::invalid_argument("injective map repeats a value");
        }
      } else {
        hit[v] = true;
        ++_rank;
      }
    }
  }

  Transformation Transformation::identity(MonoidSpec spec) {
    std::vector<int> img(spec.degree);
    for (int x = 1; x <= spec.degree; ++x) {
      img[x - 1] = x;
    }
    return Transformation(spec, std::move(img));
  }

  Transformation Transformation::constant(MonoidSpec spec, int value) {
    if (spec.family == Family::I && spec.degree > 1) {
      throw std::invalid_argument("constants of degree > 1 are not injective");
    }
    std::vector<int> img(spec.degree, value);
    return Transformation(spec, std::move(img));
  }

  Transformation Transformation::empty_map(MonoidSpec spec) {
    if (spec.family == Family::T) {
      throw std::invalid_argument("T has no empty map");
    }
    return Transformation(spec, std::vector<int>(spec.degree, 0));
  }

  Transformation Transformation::parse(MonoidSpec spec, std::string const& text) {
    size_t pos = 0;
    auto   skip_ws = [&]() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') {
      throw std::invalid_argument("element literal must start with '['");
    }
    ++pos;
    std::vector<int> img;
    while (true) {
      skip_ws();
      if (pos >= text.size()) {
        throw std::invalid_argument("unterminated element literal");
      }
      if (text[pos] == ']') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == '-') {
        img.push_back(0);
        ++pos;
      } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = 10 * v + (text[pos] - '0');
          ++pos;
        }
        img.push_back(v);
      } else {
        throw std::invalid_argument("bad character in element literal at position "
                                    + std::to_string(pos));
      }
    }
    skip_ws();
    if (pos != text.size()) {
      throw std::invalid_argument("trailing characters after element literal");
    }
    return Transformation(spec, std::move(img));
  }

  std::vector<int> Transformation::image() const {
    std::set<int> vals;
    for (int v : _images) {
      if (v != 0) {
        vals.insert(v);
      }
    }
    return std::vector<int>(vals.begin(), vals.end());
  }

  std::vector<int> Transformation::domain() const {
    std::vector<int> dom;
    for (int x = 1; x <= degree(); ++x) {
      if (defined(x)) {
        dom.push_back(x);
      }
    }
    return dom;
  }

  std::vector<int> Transformation::kernel_key() const {
    std::vector<int> key(degree(), 0);
    std::vector<int> first(degree() + 1, 0);
    for (int x = 1; x <= degree(); ++x) {
      int v = _images[x - 1];
      if (v == 0) {
        continue;
      }
      if (first[v] == 0) {
        first[v] = x;
      }
      key[x - 1] = first[v];
    }
    return key;
  }

  std::uint64_t Transformation::code() const {
    std::uint64_t c = 1;
    for (int v : _images) {
      c = c * static_cast<std::uint64_t>(degree() + 1) + static_cast<std::uint64_t>(v);
    }
    return c;
  }

  std::string Transformation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int x = 1; x <= degree(); ++x) {
      if (x > 1) {
        os << ',';
      }
      if (defined(x)) {
        os << _images[x - 1];
      } else {
        os << '-';
      }
    }
    os << ']';
    return os.str();
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.monoid() != g.monoid()) {
      throw std::invalid_argument("cannot compose elements of different monoids");
    }
    std::vector<int> img(f.degree(), 0);
    for (int x = 1; x <= f.degree(); ++x) {
      int y = f[x];
      if (y != 0) {
        img[x - 1] = g[y];
      }
    }
    return Transformation(f.monoid(), std::move(img));
  }

  bool green_related(Transformation const& f,
                     Transformation const& g,
                     GreenRelation         rel) {
    if (f.monoid() != g.monoid()) {
      throw std::invalid_argument("Green's relations need a common monoid");
    }
    switch (rel) {
      case GreenRelation::D:
        return f.rank() == g.rank();
      case GreenRelation::L:
        return f.image() == g.image();
      case GreenRelation::R:
        return f.kernel_key() == g.kernel_key();
      default:
        return f.image() == g.image() && f.kernel_key() == g.kernel_key();
    }
  }

  Transformation act(Transformation const& f, Permutation const& w) {
    if (w.degree() != f.rank()) {
      throw std::invalid_argument("action degree must equal the rank");
    }
    auto             im = f.image();
    std::vector<int> pos(f.degree() + 1, -1);
    for (size_t j = 0; j < im.size(); ++j) {
      pos[im[j]] = static_cast<int>(j);
    }
    std::vector<int> img(f.degree(), 0);
    for (int x = 1; x <= f.degree(); ++x) {
      int v = f[x];
      if (v != 0) {
        img[x - 1] = im[w[pos[v]]];
      }
    }
    return Transformation(f.monoid(), std::move(img));
  }

  std::optional<Permutation> hclass_witness(Transformation const& f,
                                            Transformation const& g) {
    if (!green_related(f, g, GreenRelation::H)) {
      return std::nullopt;
    }
    auto             im = f.image();
    std::vector<int> pos(f.degree() + 1, -1);
    for (size_t j = 0; j < im.size(); ++j) {
      pos[im[j]] = static_cast<int>(j);
    }
    std::vector<int> img(f.rank(), -1);
    for (int x = 1; x <= f.degree(); ++x) {
      if (f[x] != 0) {
        img[pos[f[x]]] = pos[g[x]];
      }
    }
    return Permutation(std::move(img));
  }

  std::vector<Transformation> enumerate_elements(MonoidSpec spec, int degree_cap) {
    if (spec.degree > degree_cap) {
      throw std::invalid_argument("enumeration cap exceeded: degree "
                                  + std::to_string(spec.degree) + " > cap "
                                  + std::to_string(degree_cap));
    }
    int const n  = spec.degree;
    int const lo = spec.family == Family::T ? 1 : 0;
    std::vector<Transformation> out;
    std::vector<int>            img(n, lo);
    while (true) {
      bool ok = true;
      if (spec.family == Family::I) {
        std::vector<bool> hit(n + 1, false);
        for (int v : img) {
          if (v != 0) {
            if (hit[v]) {
              ok = false;
              break;
            }
            hit[v] = true;
          }
        }
      }
      if (ok) {
        out.push_back(Transformation(spec, img));
      }
      int t = n - 1;
      while (t >= 0 && img[t] == n) {
        img[t] = lo;
        --t;
      }
      if (t < 0) {
        break;
      }
      ++img[t];
    }
    return out;
  }

  Ideal::Ideal(MonoidSpec spec, int b) : monoid(spec), bound(b) {
    if (b < spec.rank_floor() || b > spec.degree) {
      throw std::invalid_argument("ideal bound out of range");
    }
  }

}  // namespace congrkit
