#include "congrkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace congrkit {

  Permutation::Permutation(std::vector<int> images) : _images(std::move(images)) {
    std::vector<bool> seen(_images.size(), false);
    for (int x : _images) {
      if (x < 0 || x >= static_cast<int>(_images.size()) || seen[x]) {
        throw std::invalid_argument("not a permutation");
      }
      seen[x] = true;
    }
  }

  Permutation Permutation::identity(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  Permutation Permutation::transposition(int degree, int a, int b) {
    if (a < 1 || b < 1 || a > degree || b > degree || a == b) {
      throw std::invalid_argument("bad transposition");
    }
    auto p = identity(degree);
    std::swap(p._images[a - 1], p._images[b - 1]);
    return p;
  }

  Permutation Permutation::parse(int degree, std::string const& text) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    size_t pos = 0;
    auto   skip_ws = [&]() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    if (text.compare(pos, 2, "id") == 0) {
      return Permutation(std::move(img));
    }
    while (pos < text.size()) {
      skip_ws();
      if (pos >= text.size()) {
        break;
      }
      if (text[pos] != '(') {
        throw std::invalid_argument("expected '(' in cycle notation at position "
                                    + std::to_string(pos));
      }
      ++pos;
      std::vector<int> cycle;
      while (true) {
        skip_ws();
        if (pos >= text.size()) {
          throw std::invalid_argument("unterminated cycle");
        }
        if (text[pos] == ')') {
          ++pos;
          break;
        }
        if (text[pos] == ',') {  // allow "(1,2)" as well as "(1 2)"
          ++pos;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
          throw std::invalid_argument("expected point in cycle at position "
                                      + std::to_string(pos));
        }
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
          v = 10 * v + (text[pos] - '0');
          ++pos;
        }
        if (v < 1 || v > degree) {
          throw std::invalid_argument("cycle point " + std::to_string(v)
                                      + " out of range 1.." + std::to_string(degree));
        }
        cycle.push_back(v - 1);
      }
      for (size_t t = 0; t < cycle.size(); ++t) {
        if (img[cycle[t]] != cycle[t]) {
          throw std::invalid_argument("repeated point in cycle notation");
        }
      }
      for (size_t t = 0; t + 1 < cycle.size(); ++t) {
        img[cycle[t]] = cycle[t + 1];
      }
      if (cycle.size() > 1) {
        img[cycle.back()] = cycle.front();
      }
      skip_ws();
    }
    return Permutation(std::move(img));
  }

  std::vector<Permutation> Permutation::all(int degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
      out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  bool Permutation::is_identity() const {
    for (int x = 0; x < degree(); ++x) {
      if (_images[x] != x) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    std::vector<int> img(_images.size());
    for (int x = 0; x < degree(); ++x) {
      img[_images[x]] = x;
    }
    return Permutation(std::move(img));
  }

  Permutation Permutation::operator*(Permutation const& that) const {
    if (degree() != that.degree()) {
      throw std::invalid_argument("degree mismatch in permutation product");
    }
    std::vector<int> img(_images.size());
    for (int x = 0; x < degree(); ++x) {
      img[x] = that._images[_images[x]];
    }
    return Permutation(std::move(img));
  }

  std::uint64_t Permutation::code() const {
    // degrees here are tiny (<= 8), so base-16 digits are plenty
    std::uint64_t c = 1;
    for (int x : _images) {
      c = (c << 4) | static_cast<std::uint64_t>(x);
    }
    return c;
  }

  std::string Permutation::to_cycles() const {
    std::vector<bool> used(_images.size(), false);
    std::ostringstream os;
    bool               any = false;
    for (int x = 0; x < degree(); ++x) {
      if (used[x] || _images[x] == x) {
        continue;
      }
      any = true;
      os << '(';
      int y = x;
      bool first = true;
      do {
        if (!first) {
          os << ' ';
        }
        first = false;
        os << (y + 1);
        used[y] = true;
        y       = _images[y];
      } while (y != x);
      os << ')';
    }
    if (!any) {
      return "()";
    }
    return os.str();
  }

  Parity parity(Permutation const& p) {
    int cycles = 0;
    std::vector<bool> used(p.degree(), false);
    for (int x = 0; x < p.degree(); ++x) {
      if (used[x]) {
        continue;
      }
      ++cycles;
      int y = x;
      while (!used[y]) {
        used[y] = true;
        y       = p[y];
      }
    }
    return (p.degree() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
  }

  bool is_even(Permutation const& p) {
    return parity(p) == Parity::even;
  }

}  // namespace congrkit
