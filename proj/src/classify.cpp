#include "fulcrum/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fulcrum {

  namespace {
    std::string bits_of_value(unsigned v, std::size_t width) {
      std::string s(width, '0');
      for (std::size_t k = 0; k < width; ++k) {
        if ((v >> (width - 1 - k)) & 1u) {
          s[k] = '1';
        }
      }
      return s;
    }
  }  // namespace

  std::vector<PairRecord> enumerate_pairs(LambdaMode mode) {
    RackData const    rack = dihedral_rack();
    std::size_t const n    = rack.size();
    std::size_t const cells = n * n;
    std::vector<ScalarMatrix> candidates;
    for (unsigned v = 0; v < (1u << cells); ++v) {
      candidates.push_back(matrix_from_bits(bits_of_value(v, cells), n));
    }
    std::vector<PairRecord> out;
    for (auto const& lm : candidates) {
      auto lr = validate_lambda(lm, rack, mode);
      if (!lr.accepted()) {
        continue;
      }
      for (auto const& mm : candidates) {
        auto mr = validate_mu(mm, *lr.lambda, rack);
        if (mr.accepted()) {
          out.push_back({*lr.lambda, *mr.mu, mode, {}, {}, {}, {}});
        }
      }
    }
    return out;
  }

  bool is_witness(IsoWitness const& w,
                  PairRecord const& p,
                  PairRecord const& q,
                  RackData const&   rack) {
    std::size_t const n  = rack.size();
    auto const&       s  = w.shifts;
    auto const&       lt = q.lambda;
    auto const&       mt = q.mu;
    auto const&       f  = w.phi;
    if (s.size() != n) {
      return false;
    }
    Field const F = p.lambda.field();
    if (w.scale.is_zero()) {
      return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t const ij = rack.op(i, j);
        if (!(lt(f(i), f(j)) == p.lambda(i, j) + s[ij] + s[j])) {
          return false;
        }
        if (!(mt(f(i), f(j))
              == p.mu(i, j) + s[i] * s[j] + s[ij] * s[i] + s[j] * s[ij])) {
          return false;
        }
        Scalar third = s[i] * lt(f(i), f(j)) + s[ij] * lt(f(ij), f(i))
                       + s[j] * lt(f(j), f(ij));
        if (!third.is_zero()
            || !((w.scale + F.one()) * lt(f(i), f(j))).is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<IsoWitness> iso_related(PairRecord const& p,
                                        PairRecord const& q,
                                        RackData const&   rack) {
    Field const F = p.lambda.field();
    if (F != Field::f2() || q.lambda.field() != F) {
      throw std::invalid_argument("iso_related: pairs must be over F2");
    }
    std::size_t const n = rack.size();
    for (auto const& phi : rack_automorphisms(rack)) {
      for (unsigned v = 0; v < (1u << n); ++v) {
        std::vector<Scalar> shifts;
        for (std::size_t i = 0; i < n; ++i) {
          shifts.push_back(F.from_int((v >> (n - 1 - i)) & 1u));
        }
        IsoWitness w{phi, std::move(shifts), F.one()};
        if (is_witness(w, p, q, rack)) {
          return w;
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    };

    auto pair_key(PairRecord const& p) {
      return std::make_pair(p.lambda_bits(), p.mu_bits());
    }
  }  // namespace

  Classification partition_classes(std::vector<PairRecord> pairs) {
    std::sort(pairs.begin(), pairs.end(), [](auto const& a, auto const& b) {
      return pair_key(a) < pair_key(b);
    });
    std::size_t const n = pairs.size();
    std::vector<std::vector<bool>> related(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        related[a][b] = iso_related(pairs[a], pairs[b]).has_value();
      }
    }
    Classification out;
    UnionFind      uf(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (related[a][b] || related[b][a]) {
          uf.unite(a, b);
        }
        if (a != b && related[a][b]) {
          ++out.related_ordered_pairs;
          if (!related[b][a]) {
            ++out.missing_inverse_witnesses;
          }
        }
      }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t a = 0; a < n; ++a) {
      groups[uf.find(a)].push_back(a);
    }
    for (auto& [root, members] : groups) {
      out.classes.push_back(std::move(members));
    }
    // Members are ascending, so front() is the smallest representative.
    std::sort(out.classes.begin(), out.classes.end(),
              [](auto const& x, auto const& y) {
                if (x.size() != y.size()) {
                  return x.size() > y.size();
                }
                return x.front() < y.front();
              });
    for (std::size_t c = 0; c < out.classes.size(); ++c) {
      for (auto a : out.classes[c]) {
        pairs[a].class_id = c;
      }
    }
    out.pairs = std::move(pairs);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tables
  ////////////////////////////////////////////////////////////////////////

  TableFormat parse_table_format(std::string_view s) {
    if (s == "json") {
      return TableFormat::json;
    }
    if (s == "csv") {
      return TableFormat::csv;
    }
    if (s == "md" || s == "markdown") {
      return TableFormat::markdown;
    }
    throw std::invalid_argument("unsupported table format \"" + std::string(s)
                                + "\"");
  }

  namespace {
    std::string matrix_text(std::string const& bits) {
      std::string out = "[";
      for (std::size_t r = 0; r < 3; ++r) {
        out += r ? ",[" : "[";
        for (std::size_t c = 0; c < 3; ++c) {
          out += c ? "," : "";
          out += bits[3 * r + c];
        }
        out += "]";
      }
      return out + "]";
    }

    std::string opt_text(std::optional<std::size_t> const& v) {
      return v ? std::to_string(*v) : "";
    }

    nlohmann::json matrix_json(std::string const& bits) {
      nlohmann::json m = nlohmann::json::array();
      for (std::size_t r = 0; r < 3; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < 3; ++c) {
          row.push_back(bits[3 * r + c] - '0');
        }
        m.push_back(row);
      }
      return m;
    }

    nlohmann::json opt_json(std::optional<std::size_t> const& v) {
      return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    }
  }  // namespace

  std::string emit_table(Classification const& c, TableFormat format) {
    std::ostringstream out;
    switch (format) {
      case TableFormat::json: {
        nlohmann::json doc;
        doc["schema"] = 1;
        doc["mode"]   = c.pairs.empty() ? "gx" : to_string(c.pairs.front().mode);
        doc["pair_count"]  = c.pairs.size();
        doc["class_count"] = c.classes.size();
        doc["related_ordered_pairs"]     = c.related_ordered_pairs;
        doc["missing_inverse_witnesses"] = c.missing_inverse_witnesses;
        nlohmann::json rows = nlohmann::json::array();
        for (auto const& p : c.pairs) {
          rows.push_back({{"lambda", p.lambda_bits()},
                          {"mu", p.mu_bits()},
                          {"lambda_matrix", matrix_json(p.lambda_bits())},
                          {"mu_matrix", matrix_json(p.mu_bits())},
                          {"class", opt_json(p.class_id)},
                          {"dim", opt_json(p.dimension)},
                          {"galois_r", opt_json(p.galois_r)},
                          {"galois_l", opt_json(p.galois_l)}});
        }
        doc["pairs"]   = rows;
        doc["classes"] = c.classes;
        out << doc.dump(2) << "\n";
        break;
      }
      case TableFormat::csv:
        out << "lambda,mu,class,dim,galois_r,galois_l\n";
        for (auto const& p : c.pairs) {
          out << p.lambda_bits() << "," << p.mu_bits() << ","
              << opt_text(p.class_id) << "," << opt_text(p.dimension) << ","
              << opt_text(p.galois_r) << "," << opt_text(p.galois_l) << "\n";
        }
        break;
      case TableFormat::markdown:
        out << "| lambda | lambda matrix | mu | mu matrix | class | dim | "
               "galois_r | galois_l |\n";
        out << "|---|---|---|---|---|---|---|---|\n";
        for (auto const& p : c.pairs) {
          out << "| " << p.lambda_bits() << " | " << matrix_text(p.lambda_bits())
              << " | " << p.mu_bits() << " | " << matrix_text(p.mu_bits())
              << " | " << opt_text(p.class_id) << " | " << opt_text(p.dimension)
              << " | " << opt_text(p.galois_r) << " | " << opt_text(p.galois_l)
              << " |\n";
        }
        break;
    }
    return out.str();
  }

  Classification read_table(std::string const& text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::exception const& e) {
      throw std::invalid_argument(std::string("table is not JSON: ") + e.what());
    }
    try {
      if (doc.at("schema").get<int>() != 1) {
        throw std::invalid_argument("unsupported table schema");
      }
      LambdaMode const mode = parse_lambda_mode(doc.at("mode").get<std::string>());
      RackData const   rack = dihedral_rack();
      Classification   c;
      auto opt = [](nlohmann::json const& v) -> std::optional<std::size_t> {
        if (v.is_null()) {
          return std::nullopt;
        }
        return v.get<std::size_t>();
      };
      for (auto const& row : doc.at("pairs")) {
        auto lam = require_lambda(
            matrix_from_bits(row.at("lambda").get<std::string>()), rack, mode);
        auto mr = validate_mu(matrix_from_bits(row.at("mu").get<std::string>()),
                              lam, rack);
        if (!mr.accepted()) {
          throw std::invalid_argument("table contains an invalid mu");
        }
        c.pairs.push_back({lam, *mr.mu, mode, opt(row.at("class")),
                           opt(row.at("dim")), opt(row.at("galois_r")),
                           opt(row.at("galois_l"))});
      }
      c.classes = doc.at("classes").get<std::vector<std::vector<std::size_t>>>();
      c.related_ordered_pairs = doc.at("related_ordered_pairs").get<std::size_t>();
      c.missing_inverse_witnesses
          = doc.at("missing_inverse_witnesses").get<std::size_t>();
      return c;
    } catch (nlohmann::json::exception const& e) {
      throw std::invalid_argument(std::string("malformed table: ") + e.what());
    }
  }

}  // namespace fulcrum
