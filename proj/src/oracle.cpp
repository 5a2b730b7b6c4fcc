#include "congrkit/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace congrkit {

  MonoidTable::MonoidTable(int size, std::vector<std::uint16_t> table, int identity)
      : _size(size), _table(std::move(table)), _identity(identity) {
    if (size < 1 || size > 65535) {
      throw std::invalid_argument("table size out of range");
    }
    if (_table.size() != static_cast<std::size_t>(size) * size) {
      throw std::invalid_argument("table has wrong shape");
    }
    for (auto v : _table) {
      if (v >= size) {
        throw std::invalid_argument("table entry out of range");
      }
    }
    for (int x = 0; x < size; ++x) {
      if (product(_identity, x) != x || product(x, _identity) != x) {
        throw std::invalid_argument("identity law fails");
      }
    }
    if (size <= 300) {
      for (int a = 0; a < size; ++a) {
        for (int b = 0; b < size; ++b) {
          for (int c = 0; c < size; ++c) {
            if (product(product(a, b), c) != product(a, product(b, c))) {
              throw std::invalid_argument("associativity fails");
            }
          }
        }
      }
    } else {
      std::uint64_t state = 0x9e3779b97f4a7c15ull;
      auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<int>(state % size);
      };
      for (int t = 0; t < 200000; ++t) {
        int a = next(), b = next(), c = next();
        if (product(product(a, b), c) != product(a, product(b, c))) {
          throw std::invalid_argument("associativity fails");
        }
      }
    }
  }

  nlohmann::json MonoidTable::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int a = 0; a < _size; ++a) {
      nlohmann::json row = nlohmann::json::array();
      for (int b = 0; b < _size; ++b) {
        row.push_back(product(a, b));
      }
      rows.push_back(row);
    }
    return nlohmann::json{{"size", _size}, {"identity", _identity}, {"rows", rows}};
  }

  MonoidTable MonoidTable::from_json(nlohmann::json const& j) {
    int size = j.at("size").get<int>();
    std::vector<std::uint16_t> table;
    for (auto const& row : j.at("rows")) {
      for (auto const& v : row) {
        table.push_back(v.get<std::uint16_t>());
      }
    }
    return MonoidTable(size, std::move(table), j.at("identity").get<int>());
  }

  Partition::Partition(std::vector<int> block_of) : _block_of(std::move(block_of)) {
    std::unordered_map<int, int> rename;
    for (auto& b : _block_of) {
      auto it = rename.find(b);
      if (it == rename.end()) {
        int id = static_cast<int>(rename.size());
        rename.emplace(b, id);
        b = id;
      } else {
        b = it->second;
      }
    }
    _blocks = static_cast<int>(rename.size());
  }

  Partition Partition::discrete(int n) {
    std::vector<int> b(n);
    std::iota(b.begin(), b.end(), 0);
    return Partition(std::move(b));
  }

  std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(_blocks);
    for (int x = 0; x < size(); ++x) {
      out[_block_of[x]].push_back(x);
    }
    return out;
  }

  bool Partition::refines(Partition const& that) const {
    if (size() != that.size()) {
      throw std::invalid_argument("partition size mismatch");
    }
    std::vector<int> image(_blocks, -1);
    for (int x = 0; x < size(); ++x) {
      int b = _block_of[x];
      if (image[b] < 0) {
        image[b] = that._block_of[x];
      } else if (image[b] != that._block_of[x]) {
        return false;
      }
    }
    return true;
  }

  nlohmann::json Partition::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (auto const& block : blocks()) {
      out.push_back(block);
    }
    return out;
  }

  namespace {
    struct DisjointSet {
      std::vector<int> parent;

      explicit DisjointSet(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return false;
        }
        if (a > b) {
          std::swap(a, b);
        }
        parent[b] = a;
        return true;
      }
    };
  }  // namespace

  Partition congruence_closure(MonoidTable const&                      table,
                               std::vector<std::pair<int, int>> const& pairs) {
    int const   n = table.size();
    DisjointSet ds(n);
    std::queue<std::pair<int, int>> work;
    for (auto const& [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= n || b >= n) {
        throw std::invalid_argument("generating pair out of range");
      }
      work.push({a, b});
    }
    while (!work.empty()) {
      auto [a, b] = work.front();
      work.pop();
      if (!ds.merge(a, b)) {
        continue;
      }
      for (int s = 0; s < n; ++s) {
        int sa = table.product(s, a);
        int sb = table.product(s, b);
        if (ds.find(sa) != ds.find(sb)) {
          work.push({sa, sb});
        }
        int as = table.product(a, s);
        int bs = table.product(b, s);
        if (ds.find(as) != ds.find(bs)) {
          work.push({as, bs});
        }
      }
    }
    std::vector<int> block(n);
    for (int x = 0; x < n; ++x) {
      block[x] = ds.find(x);
    }
    return Partition(std::move(block));
  }

  std::vector<Partition> all_congruences(MonoidTable const& table, int cap) {
    int const n = table.size();
    if (n > cap) {
      throw std::invalid_argument("lattice enumeration cap exceeded: size "
                                  + std::to_string(n) + " > cap "
                                  + std::to_string(cap));
    }
    std::set<Partition> found;
    found.insert(Partition::discrete(n));
    std::vector<Partition> principals;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        auto p = congruence_closure(table, {{a, b}});
        if (found.insert(p).second) {
          principals.push_back(p);
        }
      }
    }
    auto pairs_of = [](Partition const& p) {
      std::vector<std::pair<int, int>> out;
      for (auto const& block : p.blocks()) {
        for (std::size_t t = 1; t < block.size(); ++t) {
          out.push_back({block[0], block[t]});
        }
      }
      return out;
    };
    // close under join; the lattice is join-generated by the principals
    std::vector<Partition> frontier(found.begin(), found.end());
    while (!frontier.empty()) {
      auto p = frontier.back();
      frontier.pop_back();
      for (auto const& q : principals) {
        if (q.refines(p)) {
          continue;
        }
        auto gen = pairs_of(p);
        auto qq  = pairs_of(q);
        gen.insert(gen.end(), qq.begin(), qq.end());
        auto join = congruence_closure(table, gen);
        if (found.insert(join).second) {
          frontier.push_back(join);
        }
      }
    }
    return std::vector<Partition>(found.begin(), found.end());
  }

  bool is_congruence(MonoidTable const& table, Partition const& p) {
    if (p.size() != table.size()) {
      return false;
    }
    for (int a = 0; a < table.size(); ++a) {
      for (int b = a + 1; b < table.size(); ++b) {
        if (!p.same(a, b)) {
          continue;
        }
        for (int s = 0; s < table.size(); ++s) {
          if (!p.same(table.product(s, a), table.product(s, b))
              || !p.same(table.product(a, s), table.product(b, s))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    template <typename Elem, typename Mul>
    MonoidTable make_table(std::vector<Elem> const& elements,
                           Mul                      mul,
                           Elem const&              id) {
      int const n = static_cast<int>(elements.size());
      std::unordered_map<std::uint64_t, int> index;
      for (int t = 0; t < n; ++t) {
        index.emplace(elements[t].code(), t);
      }
      std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(
              index.at(mul(elements[a], elements[b]).code()));
        }
      }
      return MonoidTable(n, std::move(table), index.at(id.code()));
    }
  }  // namespace

  TransformationUniverse TransformationUniverse::make(MonoidSpec spec,
                                                      int        degree_cap) {
    return {spec, enumerate_elements(spec, degree_cap)};
  }

  int TransformationUniverse::size() const {
    return static_cast<int>(elements.size());
  }

  int TransformationUniverse::index_of(Transformation const& t) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), t);
    if (it == elements.end() || *it != t) {
      throw std::invalid_argument("element not in universe");
    }
    return static_cast<int>(it - elements.begin());
  }

  MonoidTable TransformationUniverse::table() const {
    return make_table(
        elements,
        [](Transformation const& a, Transformation const& b) {
          return compose(a, b);
        },
        Transformation::identity(spec));
  }

  ProductUniverse ProductUniverse::make(MonoidSpec l, MonoidSpec r, int size_cap) {
    auto lo = TransformationUniverse::make(l);
    auto ro = TransformationUniverse::make(r);
    if (lo.size() * ro.size() > size_cap) {
      throw std::invalid_argument("product size cap exceeded");
    }
    return {std::move(lo), std::move(ro)};
  }

  int ProductUniverse::size() const {
    return left.size() * right.size();
  }

  int ProductUniverse::fuse(int li, int ri) const {
    return li * right.size() + ri;
  }

  std::pair<int, int> ProductUniverse::split(int idx) const {
    return {idx / right.size(), idx % right.size()};
  }

  int ProductUniverse::index_of(Transformation const& a,
                                Transformation const& b) const {
    return fuse(left.index_of(a), right.index_of(b));
  }

  std::pair<Transformation, Transformation> ProductUniverse::element(int idx) const {
    auto [li, ri] = split(idx);
    return {left.elements[li], right.elements[ri]};
  }

  MonoidTable ProductUniverse::table() const {
    int const n = size();
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    auto lt = left.table();
    auto rt = right.table();
    for (int a = 0; a < n; ++a) {
      auto [la, ra] = split(a);
      for (int b = 0; b < n; ++b) {
        auto [lb, rb] = split(b);
        table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(
            fuse(lt.product(la, lb), rt.product(ra, rb)));
      }
    }
    int id = fuse(lt.identity(), rt.identity());
    return MonoidTable(n, std::move(table), id);
  }

  MatrixUniverse MatrixUniverse::make(Gf field, int dim, int size_cap) {
    auto elems = all_matrices(field, dim, static_cast<std::uint64_t>(size_cap));
    return {field, dim, std::move(elems)};
  }

  int MatrixUniverse::size() const {
    return static_cast<int>(elements.size());
  }

  int MatrixUniverse::index_of(GfMatrix const& m) const {
    // all_matrices lists by ascending code
    return static_cast<int>(m.code());
  }

  MonoidTable MatrixUniverse::table() const {
    int const n = size();
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        table[static_cast<std::size_t>(a) * n + b]
            = static_cast<std::uint16_t>((elements[a] * elements[b]).code());
      }
    }
    return MonoidTable(n, std::move(table),
                       static_cast<int>(GfMatrix::identity(field, dim).code()));
  }

  MatrixProductUniverse MatrixProductUniverse::make(Gf lf, int lm, Gf rf, int rn,
                                                    int size_cap) {
    auto lo = MatrixUniverse::make(lf, lm, size_cap);
    auto ro = MatrixUniverse::make(rf, rn, size_cap);
    if (lo.size() * ro.size() > size_cap) {
      throw std::invalid_argument("product size cap exceeded");
    }
    return {std::move(lo), std::move(ro)};
  }

  int MatrixProductUniverse::size() const {
    return left.size() * right.size();
  }

  int MatrixProductUniverse::fuse(int li, int ri) const {
    return li * right.size() + ri;
  }

  std::pair<int, int> MatrixProductUniverse::split(int idx) const {
    return {idx / right.size(), idx % right.size()};
  }

  MonoidTable MatrixProductUniverse::table() const {
    int const n = size();
    std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
    auto lt = left.table();
    auto rt = right.table();
    for (int a = 0; a < n; ++a) {
      auto [la, ra] = split(a);
      for (int b = 0; b < n; ++b) {
        auto [lb, rb] = split(b);
        table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(
            fuse(lt.product(la, lb), rt.product(ra, rb)));
      }
    }
    int id = fuse(lt.identity(), rt.identity());
    return MonoidTable(n, std::move(table), id);
  }

}  // namespace congrkit
