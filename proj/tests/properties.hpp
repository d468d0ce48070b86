#ifndef FULCRUM_TESTS_PROPERTIES_HPP_
#define FULCRUM_TESTS_PROPERTIES_HPP_

// Randomized property checks shared by the unit suite and the acceptance
// runner. Each returns the number of cases run and the first failure seen.

#include <cstdint>
#include <random>
#include <string>

#include "fulcrum/fk3.hpp"
#include "fulcrum/jordan.hpp"

namespace fulcrum::test {

  struct PropertyResult {
    std::size_t cases    = 0;
    std::size_t failures = 0;
    std::string first;

    void fail(std::string what) {
      if (failures++ == 0) {
        first = std::move(what);
      }
    }
    bool ok() const noexcept { return cases > 0 && failures == 0; }
  };

  namespace detail {
    inline Word random_word(std::mt19937_64& rng, std::size_t letters,
                            std::size_t max_len) {
      std::uniform_int_distribution<std::size_t> len(0, max_len);
      std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
      std::vector<letter_type>                   out(len(rng));
      for (auto& a : out) {
        a = static_cast<letter_type>(pick(rng));
      }
      return Word(out);
    }

    inline Scalar random_scalar(std::mt19937_64& rng, Field const& f) {
      if (f.kind() == FieldKind::Rational) {
        std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
        return f.from_fraction(num(rng), den(rng));
      }
      return f.from_int(std::uniform_int_distribution<long>(0, 1)(rng));
    }

    inline NcPoly random_poly(std::mt19937_64& rng, RingPtr const& ring,
                              std::size_t letters, std::size_t max_len) {
      NcPoly                                     p(ring);
      std::uniform_int_distribution<std::size_t> terms(0, 5);
      for (std::size_t t = terms(rng); t > 0; --t) {
        p.add_term(random_word(rng, letters, max_len),
                   random_scalar(rng, ring->field));
      }
      return p;
    }

    // Length first, then letter by letter.
    inline int oracle_deglex(Word const& a, Word const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size() ? -1 : 1;
      }
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
          return a[i] < b[i] ? -1 : 1;
        }
      }
      return 0;
    }

    inline int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }
  }  // namespace detail

  /// nf(nf p) = nf p, nf(a p + b q) = a nf p + b nf q, and every term of a
  /// normal form is irreducible. Uses the completed Nichols system over F2
  /// and the Jordan-plane deformation over Q.
  inline PropertyResult normal_form_properties(std::uint64_t seed, std::size_t cases) {
    PropertyResult  res;
    std::mt19937_64 rng(seed);
    auto const      nichols = nichols_algebra().completion.system;
    auto const      jordan  = build_jordan(JordanFlavor::u_jordan, 6).system;
    for (std::size_t c = 0; c < cases; ++c) {
      ReductionSystem const& sys  = c % 2 ? jordan : nichols;
      RingPtr const&         ring = sys.ring();
      std::size_t const      n    = ring->alphabet.size();
      std::size_t const      len  = c % 2 ? 4 : 6;
      NcPoly const p = detail::random_poly(rng, ring, n, len);
      NcPoly const q = detail::random_poly(rng, ring, n, len);
      Scalar const a = detail::random_scalar(rng, ring->field);
      Scalar const b = detail::random_scalar(rng, ring->field);
      NcPoly const np = sys.normal_form(p);
      ++res.cases;
      if (sys.normal_form(np) != np) {
        res.fail("not idempotent on " + p.to_string());
      }
      if (sys.normal_form(p * a + q * b) != np * a + sys.normal_form(q) * b) {
        res.fail("not linear on " + p.to_string() + " and " + q.to_string());
      }
      for (auto const& [w, coeff] : np.terms()) {
        if (!sys.is_irreducible(w)) {
          res.fail("reducible term in nf of " + p.to_string());
        }
      }
    }
    return res;
  }

  /// Deglex is a total order matching the length-then-lexicographic oracle
  /// on all words of length <= 4 over 5 letters, transitive, and compatible
  /// with concatenation on both sides.
  inline PropertyResult order_properties(std::uint64_t seed, std::size_t cases) {
    PropertyResult    res;
    std::vector<Word> words{Word()};
    for (std::size_t start = 0; words.back().size() < 4;) {
      std::size_t const end = words.size();
      for (std::size_t k = start; k < end; ++k) {
        for (letter_type a = 0; a < 5; ++a) {
          words.push_back(words[k] * Word{a});
        }
      }
      start = end;
    }
    auto cmp = [](Word const& a, Word const& b) {
      return detail::sign(compare_words(a, b, 5, MonomialOrder::deglex));
    };
    for (auto const& a : words) {
      for (auto const& b : words) {
        int const s = cmp(a, b);
        if (s != detail::oracle_deglex(a, b) || s != -cmp(b, a)
            || (s == 0) != (a == b)) {
          res.fail("deglex disagrees with the oracle");
        }
      }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
      ++res.cases;
      Word const u = detail::random_word(rng, 5, 5);
      Word const v = detail::random_word(rng, 5, 5);
      Word const w = detail::random_word(rng, 5, 5);
      if (cmp(u, v) <= 0 && cmp(v, w) <= 0 && cmp(u, w) > 0) {
        res.fail("deglex is not transitive");
      }
      Word const l = detail::random_word(rng, 5, 3);
      Word const r = detail::random_word(rng, 5, 3);
      if (cmp(l * u * r, l * v * r) != cmp(u, v)) {
        res.fail("deglex is not compatible with concatenation");
      }
      // module_deglex with 3 module letters: more module letters is larger.
      auto modules = [](Word const& x) {
        std::size_t m = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          m += x[i] < 3;
        }
        return m;
      };
      int const s = detail::sign(compare_words(u, v, 3, MonomialOrder::module_deglex));
      int const want = modules(u) != modules(v)
                           ? (modules(u) < modules(v) ? -1 : 1)
                           : detail::oracle_deglex(u, v);
      if (s != want) {
        res.fail("module_deglex disagrees with the oracle");
      }
    }
    return res;
  }

  /// Group tables are associative with identity and inverses, the rack is
  /// self-distributive with bijective translations, and g_i g_j = g_{i▷j} g_i.
  inline PropertyResult group_properties(std::uint64_t seed, std::size_t cases) {
    PropertyResult   res;
    RackData const   rack = dihedral_rack();
    GroupTable const groups[] = {fk3_group(LambdaMode::s3), fk3_group(LambdaMode::gx)};
    for (std::size_t i = 0; i < 3; ++i) {
      std::vector<bool> seen(3, false);
      for (std::size_t j = 0; j < 3; ++j) {
        seen[rack.op(i, j)] = true;
        for (std::size_t k = 0; k < 3; ++k) {
          if (rack.op(i, rack.op(j, k)) != rack.op(rack.op(i, j), rack.op(i, k))) {
            res.fail("rack is not self-distributive");
          }
        }
        for (auto const& G : groups) {
          if (G.mul(G.g(i), G.g(j)) != G.mul(G.g(rack.op(i, j)), G.g(i))) {
            res.fail("enveloping relation fails");
          }
        }
      }
      if (seen != std::vector<bool>(3, true)) {
        res.fail("left translation is not bijective");
      }
    }
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < cases; ++c) {
      ++res.cases;
      GroupTable const& G = groups[c % 2];
      std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
      std::size_t const a = pick(rng), b = pick(rng), d = pick(rng);
      if (G.mul(G.mul(a, b), d) != G.mul(a, G.mul(b, d))) {
        res.fail("group table is not associative");
      }
      if (G.mul(a, G.identity()) != a || G.mul(G.identity(), a) != a) {
        res.fail("identity law fails");
      }
      if (G.mul(a, G.inverse(a)) != G.identity()
          || G.mul(G.inverse(a), a) != G.identity()) {
        res.fail("inverse law fails");
      }
      if (G.evaluate(G.factorization(a)) != a) {
        res.fail("factorization does not evaluate back");
      }
    }
    return res;
  }

  /// extend_lambda gives the same value on words naming the same group
  /// element: braid moves g_i g_j -> g_{i▷j} g_i are allowed for every
  /// cocycle, and squares g_i g_i are inserted for S3-compatible ones.
  inline PropertyResult extension_properties(std::uint64_t seed, std::size_t cases) {
    PropertyResult            res;
    RackData const            rack = dihedral_rack();
    GroupTable const          s3   = s3_quotient(rack);
    std::vector<LambdaMatrix> lambdas;
    for (unsigned v = 0; v < 512; ++v) {
      std::string bits(9, '0');
      for (int k = 0; k < 9; ++k) {
        bits[k] = ((v >> (8 - k)) & 1u) ? '1' : '0';
      }
      auto r = validate_lambda(matrix_from_bits(bits), rack, LambdaMode::gx);
      if (r.accepted()) {
        lambdas.push_back(*r.lambda);
      }
    }
    std::mt19937_64                            rng(seed);
    std::uniform_int_distribution<std::size_t> idx(0, 2);
    for (std::size_t c = 0; c < cases; ++c) {
      ++res.cases;
      LambdaMatrix const& lam = lambdas[c % lambdas.size()];
      std::vector<std::size_t> w(std::uniform_int_distribution<std::size_t>(2, 8)(rng));
      for (auto& k : w) {
        k = idx(rng);
      }
      std::vector<std::size_t> moved = w;
      std::size_t const pos = std::uniform_int_distribution<std::size_t>(0, w.size() - 2)(rng);
      std::size_t const i = moved[pos], j = moved[pos + 1];
      moved[pos]     = rack.op(i, j);
      moved[pos + 1] = i;
      std::vector<std::size_t> padded = w;
      std::size_t const sq = idx(rng);
      padded.insert(padded.begin()
                        + std::uniform_int_distribution<std::size_t>(0, w.size())(rng),
                    {sq, sq});
      bool const descends = satisfies_quotient_condition(lam, rack);
      for (std::size_t x = 0; x < 3; ++x) {
        Scalar const base = extend_lambda(lam, rack, w, x);
        if (extend_lambda(lam, rack, moved, x) != base) {
          res.fail("braid move changes lambda for " + lam.bits());
        }
        if (descends && extend_lambda(lam, rack, padded, x) != base) {
          res.fail("inserting a square changes lambda for " + lam.bits());
        }
        if (descends
            && extend_lambda(lam, rack, s3.factorization(s3.evaluate(w)), x) != base) {
          res.fail("lambda depends on the word for " + lam.bits());
        }
      }
    }
    return res;
  }

  /// Products of random polynomials associate, and rational arithmetic
  /// stays in lowest terms with a positive denominator.
  inline PropertyResult arithmetic_properties(std::uint64_t seed, std::size_t cases) {
    PropertyResult  res;
    std::mt19937_64 rng(seed);
    Field const     q = Field::rational();
    RingPtr const   ring = make_ring(Alphabet::module_only({"a", "b", "c"}), q,
                                     MonomialOrder::deglex);
    for (std::size_t c = 0; c < cases; ++c) {
      ++res.cases;
      NcPoly const x = detail::random_poly(rng, ring, 3, 3);
      NcPoly const y = detail::random_poly(rng, ring, 3, 3);
      NcPoly const z = detail::random_poly(rng, ring, 3, 3);
      if ((x * y) * z != x * (y * z)) {
        res.fail("product is not associative");
      }
      if (x * (y + z) != x * y + x * z) {
        res.fail("product does not distribute");
      }
      Scalar const s = detail::random_scalar(rng, q);
      Scalar const t = detail::random_scalar(rng, q);
      for (Scalar const& v : {s + t, s * t, s - t}) {
        if (!v.is_canonical()) {
          res.fail("non-canonical rational " + v.to_string());
        }
      }
      if (!t.is_zero() && (s / t) * t != s) {
        res.fail("division does not invert multiplication");
      }
    }
    return res;
  }

}  // namespace fulcrum::test

#endif  // FULCRUM_TESTS_PROPERTIES_HPP_
