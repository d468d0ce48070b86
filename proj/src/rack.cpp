#include "fulcrum/rack.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace fulcrum {

  ////////////////////////////////////////////////////////////////////////
  // Racks
  ////////////////////////////////////////////////////////////////////////

  RackData::RackData(std::vector<std::vector<std::size_t>> table)
      : _table(std::move(table)) {
    std::size_t const n = _table.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (_table[i].size() != n) {
        throw rack_error("rack table is not square");
      }
      std::vector<bool> hit(n, false);
      for (auto v : _table[i]) {
        if (v >= n || hit[v]) {
          throw rack_error("left translation by " + std::to_string(i)
                           + " is not a bijection");
        }
        hit[v] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (op(i, op(j, k)) != op(op(i, j), op(i, k))) {
            throw rack_error("self-distributivity fails");
          }
        }
      }
    }
  }

  RackData dihedral_rack() {
    std::vector<std::vector<std::size_t>> t(3, std::vector<std::size_t>(3));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        t[i][j] = (2 * i + 3 - j) % 3;
      }
    }
    return RackData(std::move(t));
  }

  RackAutomorphism::RackAutomorphism(RackData const&          rack,
                                     std::vector<std::size_t> perm)
      : _perm(std::move(perm)) {
    std::size_t const n = rack.size();
    if (_perm.size() != n) {
      throw rack_error("automorphism has the wrong size");
    }
    std::vector<std::size_t> sorted = _perm;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted[i] != i) {
        throw rack_error("automorphism is not a permutation");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (_perm[rack.op(i, j)] != rack.op(_perm[i], _perm[j])) {
          throw rack_error("permutation does not preserve the rack operation");
        }
      }
    }
  }

  RackAutomorphism RackAutomorphism::inverse() const {
    std::vector<std::size_t> inv(_perm.size());
    for (std::size_t i = 0; i < _perm.size(); ++i) {
      inv[_perm[i]] = i;
    }
    return RackAutomorphism(std::move(inv));
  }

  std::vector<RackAutomorphism> rack_automorphisms(RackData const& rack) {
    std::vector<RackAutomorphism> out;
    std::vector<std::size_t>      perm(rack.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      try {
        out.emplace_back(rack, perm);
      } catch (rack_error const&) {
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group tables
  ////////////////////////////////////////////////////////////////////////

  GroupTable::GroupTable(RackData                              rack,
                         std::vector<std::vector<std::size_t>> mult,
                         std::vector<std::size_t>              distinguished,
                         std::vector<std::vector<std::size_t>> factorizations)
      : _rack(std::move(rack)),
        _mult(std::move(mult)),
        _distinguished(std::move(distinguished)),
        _factorizations(std::move(factorizations)) {
    std::size_t const n = _mult.size();
    if (n == 0) {
      throw group_structure_error("empty group");
    }
    for (auto const& row : _mult) {
      if (row.size() != n
          || std::any_of(row.begin(), row.end(), [n](auto v) { return v >= n; })) {
        throw group_structure_error("malformed multiplication table");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (_mult[0][a] != a || _mult[a][0] != a) {
        throw group_structure_error("index 0 is not the identity");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (_mult[_mult[a][b]][c] != _mult[a][_mult[b][c]]) {
            throw group_structure_error("multiplication is not associative");
          }
        }
      }
    }
    _inverse.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (_mult[a][b] == 0 && _mult[b][a] == 0) {
          _inverse[a] = b;
        }
      }
      if (_inverse[a] == n) {
        throw group_structure_error("element without inverse");
      }
    }
    std::size_t const k = _rack.size();
    if (_distinguished.size() != k) {
      throw group_structure_error("one distinguished element per rack index");
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i != j && _distinguished[i] == _distinguished[j]) {
          throw group_structure_error("distinguished elements must differ");
        }
        if (conjugate(g(i), g(j)) != g(_rack.op(i, j))) {
          throw group_structure_error("g_i g_j g_i^-1 != g_{i|>j}");
        }
      }
    }
    if (_factorizations.size() != n) {
      throw group_structure_error("one factorisation per element");
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (evaluate(_factorizations[a]) != a) {
        throw group_structure_error("factorisation does not evaluate to its element");
      }
    }
  }

  std::size_t GroupTable::evaluate(std::vector<std::size_t> const& word) const {
    std::size_t x = identity();
    for (auto i : word) {
      x = mul(x, g(i));
    }
    return x;
  }

  std::string GroupTable::name(std::size_t a) const {
    if (a == identity()) {
      return "e";
    }
    std::string out;
    for (auto i : factorization(a)) {
      out += "g" + std::to_string(i);
    }
    return out;
  }

  std::size_t conjugation_action(std::size_t g, std::size_t i, GroupTable const& G) {
    if (g >= G.order() || i >= G.rack().size()) {
      throw std::out_of_range("conjugation_action: index out of range");
    }
    std::size_t h = G.conjugate(g, G.g(i));
    auto const& d = G.distinguished();
    auto        it = std::find(d.begin(), d.end(), h);
    if (it == d.end()) {
      throw group_structure_error("conjugate is not a distinguished element");
    }
    return static_cast<std::size_t>(it - d.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Coset enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr std::size_t undefined = static_cast<std::size_t>(-1);

    class CosetTable {
     public:
      CosetTable(std::size_t gens, std::size_t max_cosets)
          : _gens(gens), _max(max_cosets) {
        new_coset();
      }

      std::size_t inv(std::size_t col) const {
        return col < _gens ? col + _gens : col - _gens;
      }

      bool run(std::vector<std::vector<std::size_t>> const& relators) {
        while (true) {
          bool changed = true;
          while (changed) {
            changed = false;
            for (std::size_t c = 0; c < _rows.size(); ++c) {
              for (auto const& r : relators) {
                if (!alive(c)) {
                  break;
                }
                changed |= scan(c, r);
              }
            }
          }
          auto [c, x] = first_hole();
          if (c == undefined) {
            return true;
          }
          std::size_t d = new_coset();
          set(c, x, d);
        }
      }

      // Live cosets renumbered densely, preserving order.
      std::vector<std::vector<std::size_t>> compact() const {
        std::vector<std::size_t> index(_rows.size(), undefined);
        std::size_t              n = 0;
        for (std::size_t c = 0; c < _rows.size(); ++c) {
          if (alive(c)) {
            index[c] = n++;
          }
        }
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t c = 0; c < _rows.size(); ++c) {
          if (alive(c)) {
            std::vector<std::size_t> row;
            for (auto v : _rows[c]) {
              row.push_back(index[v]);
            }
            out.push_back(std::move(row));
          }
        }
        return out;
      }

     private:
      bool alive(std::size_t c) const { return _parent[c] == c; }

      std::size_t rep(std::size_t c) {
        while (_parent[c] != c) {
          c = _parent[c] = _parent[_parent[c]];
        }
        return c;
      }

      std::size_t new_coset() {
        if (_live == _max) {
          throw coset_overflow("coset enumeration exceeded "
                               + std::to_string(_max) + " cosets");
        }
        _rows.emplace_back(2 * _gens, undefined);
        _parent.push_back(_rows.size() - 1);
        ++_live;
        return _rows.size() - 1;
      }

      void set(std::size_t c, std::size_t x, std::size_t d) {
        _rows[c][x]      = d;
        _rows[d][inv(x)] = c;
      }

      std::pair<std::size_t, std::size_t> first_hole() const {
        for (std::size_t c = 0; c < _rows.size(); ++c) {
          if (!alive(c)) {
            continue;
          }
          for (std::size_t x = 0; x < 2 * _gens; ++x) {
            if (_rows[c][x] == undefined) {
              return {c, x};
            }
          }
        }
        return {undefined, undefined};
      }

      // Scan relator r at coset c; returns true on a deduction or a
      // coincidence.
      bool scan(std::size_t c, std::vector<std::size_t> const& r) {
        std::size_t f = c, i = 0, b = c, j = r.size();
        while (i < j && _rows[f][r[i]] != undefined) {
          f = _rows[f][r[i]];
          ++i;
        }
        if (i == j) {
          if (f != c) {
            coincidence(f, c);
            return true;
          }
          return false;
        }
        while (j > i && _rows[b][inv(r[j - 1])] != undefined) {
          b = _rows[b][inv(r[j - 1])];
          --j;
        }
        if (j == i) {
          if (f != b) {
            coincidence(f, b);
            return true;
          }
          return false;
        }
        if (j == i + 1) {
          set(f, r[i], b);
          return true;
        }
        return false;
      }

      void merge(std::size_t u, std::size_t v, std::deque<std::size_t>& q) {
        u = rep(u);
        v = rep(v);
        if (u == v) {
          return;
        }
        if (u > v) {
          std::swap(u, v);
        }
        _parent[v] = u;
        --_live;
        q.push_back(v);
      }

      void coincidence(std::size_t a, std::size_t b) {
        std::deque<std::size_t> q;
        merge(a, b, q);
        while (!q.empty()) {
          std::size_t e = q.front();
          q.pop_front();
          for (std::size_t x = 0; x < 2 * _gens; ++x) {
            std::size_t f = _rows[e][x];
            if (f == undefined) {
              continue;
            }
            if (_rows[f][inv(x)] == e) {
              _rows[f][inv(x)] = undefined;
            }
            std::size_t e1 = rep(e), f1 = rep(f);
            if (_rows[e1][x] != undefined) {
              merge(f1, _rows[e1][x], q);
            } else if (_rows[f1][inv(x)] != undefined) {
              merge(e1, _rows[f1][inv(x)], q);
            } else {
              _rows[e1][x]      = f1;
              _rows[f1][inv(x)] = e1;
            }
          }
        }
        // Redirect entries that still point at dead cosets.
        for (std::size_t c = 0; c < _rows.size(); ++c) {
          if (!alive(c)) {
            continue;
          }
          for (auto& v : _rows[c]) {
            if (v != undefined) {
              v = rep(v);
            }
          }
        }
      }

      std::size_t                           _gens;
      std::size_t                           _max;
      std::size_t                           _live = 0;
      std::vector<std::vector<std::size_t>> _rows;
      std::vector<std::size_t>              _parent;
    };
  }  // namespace

  GroupTable enveloping_quotient(RackData const& rack,
                                 std::size_t     power,
                                 std::size_t     max_cosets) {
    std::size_t const k = rack.size();
    if (k == 0 || power == 0) {
      throw std::invalid_argument("enveloping_quotient: empty rack or power 0");
    }
    // Columns 0..k-1 are g_i, k..2k-1 their inverses.
    std::vector<std::vector<std::size_t>> relators;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j && rack.op(i, j) == j) {
          continue;  // freely trivial
        }
        relators.push_back({i, j, k + i, k + rack.op(i, j)});
      }
    }
    relators.emplace_back(power, 0);

    CosetTable table(k, max_cosets);
    table.run(relators);
    auto action = table.compact();

    // Breadth-first search along positive generators yields shortlex
    // factorisations; elements are numbered in that order.
    std::size_t const        n = action.size();
    std::vector<std::size_t> order{0}, number(n, undefined);
    std::vector<std::vector<std::size_t>> words(n);
    number[0] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      std::size_t c = order[head];
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t d = action[c][i];
        if (number[d] == undefined) {
          number[d] = order.size();
          order.push_back(d);
          words[d] = words[c];
          words[d].push_back(i);
        }
      }
    }
    if (order.size() != n) {
      throw group_structure_error("generators do not reach every coset");
    }
    std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
    std::vector<std::vector<std::size_t>> factorizations(n);
    for (std::size_t a = 0; a < n; ++a) {
      factorizations[a] = words[order[a]];
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t c = order[a];
        for (auto i : factorizations[b]) {
          c = action[c][i];
        }
        mult[a][b] = number[c];
      }
    }
    std::vector<std::size_t> distinguished;
    for (std::size_t i = 0; i < k; ++i) {
      distinguished.push_back(number[action[0][i]]);
    }
    return GroupTable(rack, std::move(mult), std::move(distinguished),
                      std::move(factorizations));
  }

  GroupTable s3_quotient(RackData const& rack) {
    return enveloping_quotient(rack, 2);
  }

}  // namespace fulcrum
