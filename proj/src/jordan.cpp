#include "fulcrum/jordan.hpp"

#include <array>
#include <stdexcept>

namespace fulcrum {

  std::string to_string(JordanFlavor f) {
    switch (f) {
      case JordanFlavor::bosonization:
        return "BOSONIZATION";
      case JordanFlavor::u_jordan:
        return "U_JORDAN";
      case JordanFlavor::u_prime:
        return "U_PRIME";
    }
    return "?";
  }

  namespace {
    using Mat2 = std::array<std::array<Scalar, 2>, 2>;

    RingPtr jordan_ring(JordanFlavor flavor) {
      std::string const m = flavor == JordanFlavor::u_prime ? "y" : "x";
      Alphabet abc({{m + "1", Sort::module_letter},
                    {m + "2", Sort::module_letter},
                    {"g", Sort::group_letter},
                    {"G", Sort::group_letter}});
      return make_ring(std::move(abc), Field::rational(),
                       MonomialOrder::module_deglex);
    }

    // Inverse of an invertible 2x2 matrix by Gauss-Jordan elimination.
    Mat2 invert(Mat2 a, Field const& f) {
      Mat2 inv{{{f.one(), f.zero()}, {f.zero(), f.one()}}};
      for (std::size_t col = 0; col < 2; ++col) {
        std::size_t piv = col;
        while (piv < 2 && a[piv][col].is_zero()) {
          ++piv;
        }
        if (piv == 2) {
          throw std::logic_error("action of g is not invertible");
        }
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Scalar const s = a[col][col].inverse();
        for (std::size_t c = 0; c < 2; ++c) {
          a[col][c] *= s;
          inv[col][c] *= s;
        }
        for (std::size_t r = 0; r < 2; ++r) {
          if (r == col || a[r][col].is_zero()) {
            continue;
          }
          Scalar const t = a[r][col];
          for (std::size_t c = 0; c < 2; ++c) {
            a[r][c] -= t * a[col][c];
            inv[r][c] -= t * inv[col][c];
          }
        }
      }
      return inv;
    }
  }  // namespace

  JordanPresentation build_jordan(JordanFlavor flavor, std::size_t truncation) {
    if (truncation < 2) {
      throw std::invalid_argument("Jordan truncation must be at least 2");
    }
    using P = JordanPresentation;
    RingPtr const ring = jordan_ring(flavor);
    Field const   Q    = ring->field;
    auto lt = [&](letter_type a) { return NcPoly::letter(ring, a); };
    NcPoly const one(ring, Q.one());
    NcPoly const x1 = lt(P::x1), x2 = lt(P::x2), g = lt(P::g), G = lt(P::G);
    Scalar const half = Q.from_fraction(1, 2);

    // g x_k = (sum_l act[k][l] x_l + shift[k]) g with shift[k] in kZ.
    Mat2 const act{{{Q.one(), Q.zero()}, {Q.one(), Q.one()}}};
    std::array<NcPoly, 2> shift{NcPoly(ring), NcPoly(ring)};
    if (flavor == JordanFlavor::u_jordan) {
      shift[0] = one - g;
    } else if (flavor == JordanFlavor::u_prime) {
      shift[0] = one;
    }

    ReductionSystem units(ring, truncation);
    units.add_rule({Word{P::g, P::G}, one});
    units.add_rule({Word{P::G, P::g}, one});

    ReductionSystem sys(ring, truncation);
    sys.add_rule({Word{P::g, P::G}, one});
    sys.add_rule({Word{P::G, P::g}, one});
    std::array<NcPoly, 2> const xs{x1, x2};
    Mat2 const                  inv = invert(act, Q);
    for (std::size_t k = 0; k < 2; ++k) {
      letter_type const xk = k == 0 ? P::x1 : P::x2;
      NcPoly            up = shift[k] * g;
      // G x_k = (sum_l inv[k][l] (x_l - shift[l])) G, since Z acts trivially
      // on kZ.
      NcPoly down(ring);
      for (std::size_t l = 0; l < 2; ++l) {
        up += xs[l] * g * act[k][l];
        down += (xs[l] - shift[l]) * G * inv[k][l];
      }
      sys.add_rule({Word{P::g, xk}, units.normal_form(up)});
      sys.add_rule({Word{P::G, xk}, units.normal_form(down)});
    }
    NcPoly quad = x1 * x2 - x1 * x1 * half;
    if (flavor != JordanFlavor::bosonization) {
      quad += x2 + x1 * half;
    }
    sys.add_rule({Word{P::x2, P::x1}, quad});
    return {flavor, std::move(sys), truncation};
  }

  std::size_t pbw_count(std::size_t ell) {
    std::size_t total = 0;
    for (std::size_t m = 0; m <= ell; ++m) {
      total += (ell - m + 1) * (m == 0 ? 1 : 2);
    }
    return total;
  }

  namespace {
    // x1^a x2^b followed by a power of g or a power of G.
    bool is_pbw_word(Word const& w) {
      using P = JordanPresentation;
      std::size_t i = 0;
      while (i < w.size() && w[i] == P::x1) {
        ++i;
      }
      while (i < w.size() && w[i] == P::x2) {
        ++i;
      }
      if (i == w.size()) {
        return true;
      }
      letter_type const grp = w[i];
      while (i < w.size() && w[i] == grp) {
        ++i;
      }
      return i == w.size();
    }

    bool small_denominators(NcPoly const& p) {
      for (auto const& [w, c] : p.terms()) {
        auto const& den = c.rational().get_den();
        if (den != 1 && den != 2) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool PbwReport::ok() const {
    return completion.status == CompletionStatus::confluent
           && completion.new_rules.empty() && shape_ok && denominators_ok
           && counts.per_length == expected;
  }

  PbwReport verify_pbw(JordanPresentation const& p) {
    PbwReport r{complete(p.system), {}, {}, false, false};
    auto const& sys = r.completion.system;
    r.counts        = count_irreducible(sys, p.truncation);
    for (std::size_t ell = 0; ell <= p.truncation; ++ell) {
      r.expected.push_back(pbw_count(ell));
    }
    r.shape_ok = true;
    for (auto const& w : irreducible_words(sys, p.truncation)) {
      if (!is_pbw_word(w)) {
        r.shape_ok = false;
        break;
      }
    }
    r.denominators_ok = true;
    for (auto const& rule : sys.rules()) {
      r.denominators_ok = r.denominators_ok && small_denominators(rule.tail);
    }
    return r;
  }

  JordanCoactionReport jordan_coactions(std::size_t truncation) {
    using P   = JordanPresentation;
    auto bos  = build_jordan(JordanFlavor::bosonization, truncation);
    auto u    = build_jordan(JordanFlavor::u_jordan, truncation);
    auto up   = build_jordan(JordanFlavor::u_prime, truncation);
    auto cbos = complete(bos.system);
    auto cu   = complete(u.system);
    auto cup  = complete(up.system);
    for (auto const* c : {&cbos, &cu, &cup}) {
      if (c->status != CompletionStatus::confluent) {
        throw std::runtime_error("Jordan presentation did not complete");
      }
    }
    Field const Q = up.ring()->field;

    // a -> a ⊗ 1 + g ⊗ a on module letters, grouplikes diagonal.
    auto images = [&](RingPtr const& left, RingPtr const& right) {
      std::vector<TensorPoly> out;
      for (letter_type a = 0; a < 4; ++a) {
        TensorPoly t({left, right});
        if (a == P::g || a == P::G) {
          t.add_term({Word::letter(a), Word::letter(a)}, Q.one());
        } else {
          t.add_term({Word::letter(a), Word()}, Q.one());
          t.add_term({Word::letter(P::g), Word::letter(a)}, Q.one());
        }
        out.push_back(std::move(t));
      }
      return out;
    };

    JordanCoactionReport report;
    report.failures = check_algebra_map(
        "rho_r", cup.system, images(up.ring(), bos.ring()),
        {&cup.system, &cbos.system});
    auto more = check_algebra_map("rho_l", cup.system,
                                  images(u.ring(), up.ring()),
                                  {&cu.system, &cup.system});
    report.failures.insert(report.failures.end(), more.begin(), more.end());
    report.relations_checked = 2 * cup.system.rules().size();
    return report;
  }

}  // namespace fulcrum
