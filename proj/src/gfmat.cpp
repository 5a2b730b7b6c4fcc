#include "congrkit/gfmat.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace congrkit {

  Gf::Gf(int characteristic) : p(characteristic) {
    if (p != 2 && p != 3 && p != 5) {
      throw std::invalid_argument("supported fields are GF(2), GF(3), GF(5)");
    }
  }

  int Gf::inv(int a) const {
    a %= p;
    for (int b = 1; b < p; ++b) {
      if (a * b % p == 1) {
        return b;
      }
    }
    throw std::invalid_argument("zero has no inverse");
  }

  std::vector<int> Gf::units() const {
    std::vector<int> out;
    for (int a = 1; a < p; ++a) {
      out.push_back(a);
    }
    return out;
  }

  int Gf::unit_generator() const {
    for (int g = 1; g < p; ++g) {
      int  x     = g;
      int  order = 1;
      while (x != 1) {
        x = x * g % p;
        ++order;
      }
      if (order == p - 1) {
        return g;
      }
    }
    return 1;
  }

  std::set<int> Gf::unit_closure(int a) const {
    std::set<int> out{1};
    int           x = a % p;
    while (out.insert(x).second) {
      x = x * a % p;
    }
    return out;
  }

  std::vector<std::set<int>> Gf::unit_subgroups() const {
    std::set<std::set<int>> found;
    for (int a = 1; a < p; ++a) {
      found.insert(unit_closure(a));
    }
    std::vector<std::set<int>> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.size() < b.size() || (a.size() == b.size() && a < b);
    });
    return out;
  }

  GfMatrix::GfMatrix(Gf field, int dim)
      : _field(field), _dim(dim), _entries(dim * dim, 0) {
    if (dim < 0 || dim > 4) {
      throw std::invalid_argument("matrix dimension out of range");
    }
  }

  GfMatrix::GfMatrix(Gf field, int dim, std::vector<int> entries)
      : _field(field), _dim(dim), _entries(std::move(entries)) {
    if (dim < 0 || dim > 4) {
      throw std::invalid_argument("matrix dimension out of range");
    }
    if (static_cast<int>(_entries.size()) != dim * dim) {
      throw std::invalid_argument("entry vector has wrong length");
    }
    for (auto& e : _entries) {
      if (e < 0) {
        throw std::invalid_argument("negative matrix entry");
      }
      e %= _field.p;
    }
  }

  GfMatrix GfMatrix::identity(Gf field, int dim) {
    return partial_identity(field, dim, dim);
  }

  GfMatrix GfMatrix::partial_identity(Gf field, int dim, int mu) {
    if (mu < 0 || mu > dim) {
      throw std::invalid_argument("partial identity rank out of range");
    }
    GfMatrix m(field, dim);
    for (int t = 0; t < mu; ++t) {
      m.set(t, t, 1);
    }
    return m;
  }

  GfMatrix GfMatrix::parse(std::string const& text) {
    auto at = text.find("@GF(");
    if (at == std::string::npos || text.back() != ')') {
      throw std::invalid_argument("matrix literal needs an @GF(p) suffix");
    }
    int p = std::stoi(text.substr(at + 4, text.size() - at - 5));
    Gf  field(p);
    auto body = text.substr(0, at);
    std::vector<std::vector<int>> rows;
    std::istringstream            is(body);
    std::string                   row;
    while (std::getline(is, row, ';')) {
      rows.emplace_back();
      std::istringstream rs(row);
      std::string        cell;
      while (std::getline(rs, cell, ',')) {
        rows.back().push_back(std::stoi(cell));
      }
    }
    int dim = static_cast<int>(rows.size());
    std::vector<int> entries;
    for (auto const& r : rows) {
      if (static_cast<int>(r.size()) != dim) {
        throw std::invalid_argument("matrix literal is not square");
      }
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return GfMatrix(field, dim, std::move(entries));
  }

  GfMatrix GfMatrix::parse(Gf field, int dim, std::string const& text) {
    auto m = text.find("@GF(") == std::string::npos
                 ? parse(text + "@GF(" + std::to_string(field.p) + ")")
                 : parse(text);
    if (m.field() != field || m.dim() != dim) {
      throw std::invalid_argument("matrix literal does not match the ambient monoid");
    }
    return m;
  }

  GfMatrix GfMatrix::operator*(GfMatrix const& that) const {
    if (_field != that._field || _dim != that._dim) {
      throw std::invalid_argument("matrix shape mismatch");
    }
    GfMatrix out(_field, _dim);
    for (int r = 0; r < _dim; ++r) {
      for (int c = 0; c < _dim; ++c) {
        int s = 0;
        for (int t = 0; t < _dim; ++t) {
          s += at(r, t) * that.at(t, c);
        }
        out.set(r, c, s % _field.p);
      }
    }
    return out;
  }

  GfMatrix GfMatrix::scaled(int lambda) const {
    GfMatrix out = *this;
    for (auto& e : out._entries) {
      e = e * lambda % _field.p;
    }
    return out;
  }

  namespace {
    // row echelon reduction in place; returns rank.  When `record` is given,
    // the same row operations are applied to it (so it accumulates s with
    // s * original = reduced).
    int rref(Gf field, int dim, std::vector<int>& m, std::vector<int>* record) {
      auto mul_row = [&](std::vector<int>& rows, int r, int k) {
        for (int c = 0; c < dim; ++c) {
          rows[r * dim + c] = rows[r * dim + c] * k % field.p;
        }
      };
      auto add_row = [&](std::vector<int>& rows, int dst, int src, int k) {
        for (int c = 0; c < dim; ++c) {
          rows[dst * dim + c]
              = (rows[dst * dim + c] + k * rows[src * dim + c]) % field.p;
        }
      };
      auto swap_rows = [&](std::vector<int>& rows, int a, int b) {
        for (int c = 0; c < dim; ++c) {
          std::swap(rows[a * dim + c], rows[b * dim + c]);
        }
      };
      int rank = 0;
      for (int col = 0; col < dim && rank < dim; ++col) {
        int pivot = -1;
        for (int r = rank; r < dim; ++r) {
          if (m[r * dim + col] != 0) {
            pivot = r;
            break;
          }
        }
        if (pivot < 0) {
          continue;
        }
        if (pivot != rank) {
          swap_rows(m, pivot, rank);
          if (record) {
            swap_rows(*record, pivot, rank);
          }
        }
        int k = field.inv(m[rank * dim + col]);
        mul_row(m, rank, k);
        if (record) {
          mul_row(*record, rank, k);
        }
        for (int r = 0; r < dim; ++r) {
          if (r != rank && m[r * dim + col] != 0) {
            int f = field.neg(m[r * dim + col]);
            add_row(m, r, rank, f);
            if (record) {
              add_row(*record, r, rank, f);
            }
          }
        }
        ++rank;
      }
      return rank;
    }
  }  // namespace

  int GfMatrix::rank() const {
    auto m = _entries;
    return rref(_field, _dim, m, nullptr);
  }

  GfMatrix GfMatrix::inverse() const {
    auto m   = _entries;
    auto rec = identity(_field, _dim)._entries;
    if (rref(_field, _dim, m, &rec) != _dim) {
      throw std::invalid_argument("matrix is singular");
    }
    return GfMatrix(_field, _dim, std::move(rec));
  }

  std::vector<std::vector<int>> GfMatrix::row_space_basis() const {
    auto m    = _entries;
    int  rank = rref(_field, _dim, m, nullptr);
    std::vector<std::vector<int>> out;
    for (int r = 0; r < rank; ++r) {
      out.emplace_back(m.begin() + r * _dim, m.begin() + (r + 1) * _dim);
    }
    return out;
  }

  std::vector<std::vector<int>> GfMatrix::image_basis() const {
    GfMatrix t(_field, _dim);
    for (int r = 0; r < _dim; ++r) {
      for (int c = 0; c < _dim; ++c) {
        t.set(r, c, at(c, r));
      }
    }
    return t.row_space_basis();
  }

  std::vector<std::vector<int>> GfMatrix::kernel_basis() const {
    auto m = _entries;
    rref(_field, _dim, m, nullptr);
    std::vector<int> pivot_col_of_row(_dim, -1);
    std::vector<bool> is_pivot(_dim, false);
    for (int r = 0; r < _dim; ++r) {
      for (int c = 0; c < _dim; ++c) {
        if (m[r * _dim + c] != 0) {
          pivot_col_of_row[r] = c;
          is_pivot[c]         = true;
          break;
        }
      }
    }
    std::vector<int> basis_rows;
    for (int c = 0; c < _dim; ++c) {
      if (!is_pivot[c]) {
        basis_rows.push_back(c);
      }
    }
    // one solution per free column
    std::vector<int> flat;
    for (int free_col : basis_rows) {
      std::vector<int> v(_dim, 0);
      v[free_col] = 1;
      for (int r = 0; r < _dim; ++r) {
        if (pivot_col_of_row[r] >= 0) {
          v[pivot_col_of_row[r]] = _field.neg(m[r * _dim + free_col]);
        }
      }
      flat.insert(flat.end(), v.begin(), v.end());
    }
    // canonicalize as the reduced row form of the solution matrix
    int k = static_cast<int>(basis_rows.size());
    std::vector<int> square(_dim * _dim, 0);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < _dim; ++c) {
        square[r * _dim + c] = flat[r * _dim + c];
      }
    }
    int rank = rref(_field, _dim, square, nullptr);
    std::vector<std::vector<int>> out;
    for (int r = 0; r < rank; ++r) {
      out.emplace_back(square.begin() + r * _dim, square.begin() + (r + 1) * _dim);
    }
    return out;
  }

  std::uint32_t GfMatrix::code() const {
    std::uint32_t c = 0;
    for (int t = _dim * _dim - 1; t >= 0; --t) {
      c = c * static_cast<std::uint32_t>(_field.p)
          + static_cast<std::uint32_t>(_entries[t]);
    }
    return c;
  }

  GfMatrix GfMatrix::from_code(Gf field, int dim, std::uint32_t code) {
    std::vector<int> entries(dim * dim);
    for (int t = 0; t < dim * dim; ++t) {
      entries[t] = static_cast<int>(code % field.p);
      code /= field.p;
    }
    return GfMatrix(field, dim, std::move(entries));
  }

  std::string GfMatrix::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < _dim; ++r) {
      if (r > 0) {
        os << ';';
      }
      for (int c = 0; c < _dim; ++c) {
        if (c > 0) {
          os << ',';
        }
        os << at(r, c);
      }
    }
    os << "@GF(" << _field.p << ")";
    return os.str();
  }

  std::optional<int> scalar_ratio(GfMatrix const& a, GfMatrix const& b) {
    if (a.field() != b.field() || a.dim() != b.dim()) {
      throw std::invalid_argument("matrix shape mismatch");
    }
    for (int lambda = 1; lambda < a.field().p; ++lambda) {
      if (a == b.scaled(lambda)) {
        return lambda;
      }
    }
    return std::nullopt;
  }

  std::pair<GfMatrix, GfMatrix> reduce_to_partial_identity(GfMatrix const& a) {
    Gf  field = a.field();
    int dim   = a.dim();
    std::vector<int> m(dim * dim);
    std::vector<int> rec(dim * dim, 0);
    for (int r = 0; r < dim; ++r) {
      rec[r * dim + r] = 1;
      for (int c = 0; c < dim; ++c) {
        m[r * dim + c] = a.at(r, c);
      }
    }
    int mu = rref(field, dim, m, &rec);
    GfMatrix s1(field, dim, rec);
    // column operations turning the reduced rows into the partial identity
    GfMatrix s2 = GfMatrix::identity(field, dim);
    GfMatrix r(field, dim, m);
    for (int t = 0; t < mu; ++t) {
      int pivot = -1;
      for (int c = t; c < dim; ++c) {
        if (r.at(t, c) != 0) {
          pivot = c;
          break;
        }
      }
      if (pivot != t) {  // swap columns t and pivot
        for (int x = 0; x < dim; ++x) {
          int tmp = r.at(x, t);
          r.set(x, t, r.at(x, pivot));
          r.set(x, pivot, tmp);
          tmp = s2.at(x, t);
          s2.set(x, t, s2.at(x, pivot));
          s2.set(x, pivot, tmp);
        }
      }
      for (int c = 0; c < dim; ++c) {
        if (c != t && r.at(t, c) != 0) {
          int f = field.neg(r.at(t, c));
          for (int x = 0; x < dim; ++x) {
            r.set(x, c, (r.at(x, c) + f * r.at(x, t)) % field.p);
            s2.set(x, c, (s2.at(x, c) + f * s2.at(x, t)) % field.p);
          }
        }
      }
    }
    return {s1, s2};
  }

  bool green_related(GfMatrix const& a, GfMatrix const& b, GreenRelation rel) {
    if (a.field() != b.field() || a.dim() != b.dim()) {
      throw std::invalid_argument("matrix shape mismatch");
    }
    switch (rel) {
      case GreenRelation::D:
        return a.rank() == b.rank();
      case GreenRelation::R:
        return a.image_basis() == b.image_basis();
      case GreenRelation::L:
        return a.kernel_basis() == b.kernel_basis();
      default:
        return a.image_basis() == b.image_basis()
               && a.kernel_basis() == b.kernel_basis();
    }
  }

  bool fixes_all_hyperplanes(GfMatrix const& a) {
    Gf  field = a.field();
    int n     = a.dim();
    // hyperplanes are kernels of nonzero functionals w, taken up to scalar
    std::vector<std::vector<int>> functionals;
    std::vector<int> w(n, 0);
    while (true) {
      int t = n - 1;
      while (t >= 0 && w[t] == field.p - 1) {
        w[t] = 0;
        --t;
      }
      if (t < 0) {
        break;
      }
      ++w[t];
      int lead = 0;
      while (lead < n && w[lead] == 0) {
        ++lead;
      }
      if (w[lead] == 1) {  // one representative per scalar class
        functionals.push_back(w);
      }
    }
    for (auto const& f : functionals) {
      // basis of the hyperplane ker(f)
      std::vector<int> fm(n * n, 0);
      for (int c = 0; c < n; ++c) {
        fm[c] = f[c];
      }
      GfMatrix fmat(field, n, fm);
      auto     basis = fmat.kernel_basis();
      // a fixes the hyperplane iff it maps it onto itself
      std::vector<std::vector<int>> images;
      for (auto const& v : basis) {
        std::vector<int> av(n, 0);
        for (int r = 0; r < n; ++r) {
          int s = 0;
          for (int c = 0; c < n; ++c) {
            s += a.at(r, c) * v[c];
          }
          av[r] = s % field.p;
        }
        int dot = 0;
        for (int c = 0; c < n; ++c) {
          dot += f[c] * av[c];
        }
        if (dot % field.p != 0) {
          return false;
        }
        images.push_back(av);
      }
      // surjectivity on the hyperplane
      std::vector<int> sq(n * n, 0);
      for (size_t r = 0; r < images.size(); ++r) {
        for (int c = 0; c < n; ++c) {
          sq[r * n + c] = images[r][c];
        }
      }
      if (rref(field, n, sq, nullptr) != static_cast<int>(basis.size())) {
        return false;
      }
    }
    return true;
  }

  std::vector<GfMatrix> all_matrices(Gf field, int dim, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int t = 0; t < dim * dim; ++t) {
      total *= field.p;
      if (total > cap) {
        throw std::invalid_argument("matrix enumeration cap exceeded");
      }
    }
    std::vector<GfMatrix> out;
    out.reserve(total);
    for (std::uint64_t c = 0; c < total; ++c) {
      out.push_back(GfMatrix::from_code(field, dim, static_cast<std::uint32_t>(c)));
    }
    return out;
  }

  std::vector<GfMatrix> general_linear_group(Gf field, int dim, std::uint64_t cap) {
    std::vector<GfMatrix> out;
    for (auto const& m : all_matrices(field, dim, cap)) {
      if (m.invertible()) {
        out.push_back(m);
      }
    }
    return out;
  }

  std::vector<GfMatrix> gl_generators(Gf field, int dim) {
    std::vector<GfMatrix> out;
    if (dim == 0) {
      return out;
    }
    if (dim == 1) {
      out.push_back(GfMatrix(field, 1, {field.unit_generator()}));
      return out;
    }
    auto d = GfMatrix::identity(field, dim);
    d.set(0, 0, field.unit_generator());
    out.push_back(d);
    GfMatrix cyc(field, dim);
    for (int t = 0; t < dim; ++t) {
      cyc.set(t, (t + 1) % dim, 1);
    }
    out.push_back(cyc);
    auto tv = GfMatrix::identity(field, dim);
    tv.set(0, 1, 1);
    out.push_back(tv);
    return out;
  }

  namespace detail {
    namespace {
      std::uint64_t cache_key(GfMatrix const& a) {
        return (static_cast<std::uint64_t>(a.field().p) << 40)
               | (static_cast<std::uint64_t>(a.dim()) << 32) | a.code();
      }
    }  // namespace

    int cached_rank(GfMatrix const& a) {
      thread_local std::unordered_map<std::uint64_t, int> cache;
      auto key = cache_key(a);
      auto it  = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, a.rank()).first;
      }
      return it->second;
    }

    int cached_hclass(GfMatrix const& a) {
      thread_local std::unordered_map<std::uint64_t, int> cache;
      thread_local std::map<std::pair<std::vector<std::vector<int>>,
                                      std::vector<std::vector<int>>>,
                            int>
          ids;
      auto key = cache_key(a);
      auto it  = cache.find(key);
      if (it == cache.end()) {
        auto sig = std::make_pair(a.image_basis(), a.kernel_basis());
        auto id  = ids.emplace(sig, static_cast<int>(ids.size())).first->second;
        it       = cache.emplace(key, id).first;
      }
      return it->second;
    }

    std::pair<GfMatrix, GfMatrix> const& cached_reduction(GfMatrix const& a) {
      thread_local std::unordered_map<std::uint64_t,
                                      std::pair<GfMatrix, GfMatrix>>
          cache;
      auto key = cache_key(a);
      auto it  = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, reduce_to_partial_identity(a)).first;
      }
      return it->second;
    }

    GfMatrix reduced_block(GfMatrix const& base, GfMatrix const& other) {
      auto const& [s1, s2] = cached_reduction(base);
      auto r   = s1 * other * s2;
      int  dim = cached_rank(base);
      std::vector<int> entries(dim * dim);
      for (int x = 0; x < dim; ++x) {
        for (int y = 0; y < dim; ++y) {
          entries[x * dim + y] = r.at(x, y);
        }
      }
      return GfMatrix(base.field(), dim, std::move(entries));
    }
  }  // namespace detail

  MatrixGroup::MatrixGroup(Gf field, int dim) : _field(field), _dim(dim) {}

  MatrixGroup MatrixGroup::trivial(Gf field, int dim) {
    MatrixGroup g(field, dim);
    g.insert(GfMatrix::identity(field, dim));
    return g;
  }

  bool MatrixGroup::subgroup_of(MatrixGroup const& that) const {
    for (auto c : _codes) {
      if (!that._codes.count(c)) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::uint32_t> MatrixGroup::sorted_codes() const {
    std::vector<std::uint32_t> out(_codes.begin(), _codes.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  bool MatrixGroup::operator==(MatrixGroup const& that) const {
    return _field == that._field && _dim == that._dim && _codes == that._codes;
  }

  MatrixGroup gl_normal_closure(Gf field, int dim,
                                std::vector<GfMatrix> const& seeds) {
    auto gens = gl_generators(field, dim);
    std::vector<GfMatrix> conj_gens;
    for (auto const& g : gens) {
      conj_gens.push_back(g);
      conj_gens.push_back(g.inverse());
    }
    // close the seed set under conjugation by the group generators
    std::set<std::uint32_t> seen;
    std::vector<GfMatrix>   gen_set;
    std::vector<GfMatrix>   queue;
    auto push = [&](GfMatrix const& m) {
      if (seen.insert(m.code()).second) {
        gen_set.push_back(m);
        queue.push_back(m);
      }
    };
    for (auto const& s : seeds) {
      if (!s.invertible() && dim > 0) {
        throw std::invalid_argument("normal closure seed must be invertible");
      }
      push(s);
    }
    while (!queue.empty()) {
      GfMatrix x = queue.back();
      queue.pop_back();
      for (auto const& g : conj_gens) {
        push(g.inverse() * x * g);
      }
    }
    // subgroup generated by the conjugation-closed set
    MatrixGroup out(field, dim);
    auto        id = GfMatrix::identity(field, dim);
    out.insert(id);
    std::vector<GfMatrix> frontier{id};
    std::vector<GfMatrix> steps;
    for (auto const& t : gen_set) {
      steps.push_back(t);
      steps.push_back(t.inverse());
    }
    while (!frontier.empty()) {
      GfMatrix x = frontier.back();
      frontier.pop_back();
      for (auto const& t : steps) {
        auto y = x * t;
        if (!out.contains(y)) {
          out.insert(y);
          frontier.push_back(y);
        }
      }
    }
    return out;
  }

  std::vector<MatrixGroup> gl_all_normal_subgroups(Gf field, int dim) {
    auto gl = general_linear_group(field, dim);
    std::vector<MatrixGroup> found;
    auto add_unique = [&](MatrixGroup const& g) {
      for (auto const& h : found) {
        if (h == g) {
          return false;
        }
      }
      found.push_back(g);
      return true;
    };
    for (auto const& m : gl) {
      add_unique(gl_normal_closure(field, dim, {m}));
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (size_t s = 0; s < found.size() && !grew; ++s) {
        for (size_t t = s + 1; t < found.size() && !grew; ++t) {
          std::vector<GfMatrix> seeds;
          for (auto c : found[s].sorted_codes()) {
            seeds.push_back(GfMatrix::from_code(field, dim, c));
          }
          for (auto c : found[t].sorted_codes()) {
            seeds.push_back(GfMatrix::from_code(field, dim, c));
          }
          grew = add_unique(gl_normal_closure(field, dim, seeds));
        }
      }
    }
    std::sort(found.begin(), found.end(),
              [](MatrixGroup const& a, MatrixGroup const& b) {
                return a.size() < b.size()
                       || (a.size() == b.size()
                           && a.sorted_codes() < b.sorted_codes());
              });
    return found;
  }

}  // namespace congrkit
