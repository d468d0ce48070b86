#include "fulcrum/fulcrum.hpp"

#include <stdexcept>

namespace fulcrum {

  ////////////////////////////////////////////////////////////////////////
  // Matrices and lambda
  ////////////////////////////////////////////////////////////////////////

  ScalarMatrix matrix_from_bits(std::string_view bits, std::size_t n) {
    if (bits.size() != n * n) {
      throw std::invalid_argument("expected " + std::to_string(n * n)
                                  + " bits, got \"" + std::string(bits) + "\"");
    }
    Field const  f2 = Field::f2();
    ScalarMatrix m(n, std::vector<Scalar>(n, f2.zero()));
    for (std::size_t k = 0; k < bits.size(); ++k) {
      if (bits[k] != '0' && bits[k] != '1') {
        throw std::invalid_argument("bitstring may only contain 0 and 1");
      }
      m[k / n][k % n] = f2.from_int(bits[k] - '0');
    }
    return m;
  }

  std::string bits_of(ScalarMatrix const& m) {
    std::string out;
    for (auto const& row : m) {
      for (auto const& c : row) {
        if (c.field() != Field::f2()) {
          throw std::invalid_argument("bits_of: matrix is not over F2");
        }
        out += c.is_zero() ? '0' : '1';
      }
    }
    return out;
  }

  ScalarMatrix zero_matrix(Field const& f, std::size_t n) {
    return ScalarMatrix(n, std::vector<Scalar>(n, f.zero()));
  }

  std::string to_string(LambdaMode m) {
    return m == LambdaMode::gx ? "gx" : "s3";
  }

  LambdaMode parse_lambda_mode(std::string_view s) {
    if (s == "gx") {
      return LambdaMode::gx;
    }
    if (s == "s3") {
      return LambdaMode::s3;
    }
    throw std::invalid_argument("unknown group mode \"" + std::string(s) + "\"");
  }

  LambdaMatrix LambdaMatrix::zero(Field const& f, std::size_t n) {
    return LambdaMatrix(zero_matrix(f, n));
  }

  bool LambdaMatrix::is_zero() const {
    for (auto const& row : _m) {
      for (auto const& c : row) {
        if (!c.is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  LambdaReport validate_lambda(ScalarMatrix const& m,
                               RackData const&     rack,
                               LambdaMode          mode) {
    std::size_t const n = rack.size();
    if (m.size() != n) {
      throw std::invalid_argument("lambda matrix does not match the rack size");
    }
    for (auto const& row : m) {
      if (row.size() != n) {
        throw std::invalid_argument("lambda matrix is not square");
      }
    }
    LambdaReport report;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          Scalar lhs = m[i][rack.op(j, k)] + m[j][k];
          Scalar rhs = m[rack.op(i, j)][rack.op(i, k)] + m[i][k];
          if (!(lhs == rhs)) {
            report.cocycle_violations.push_back({i, j, k});
          }
        }
      }
    }
    if (mode == LambdaMode::s3) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (!(m[i][rack.op(i, j)] + m[i][j]).is_zero()) {
            report.quotient_violations.push_back({i, j});
          }
        }
      }
    }
    if (report.cocycle_violations.empty() && report.quotient_violations.empty()) {
      report.lambda = LambdaMatrix(m);
    }
    return report;
  }

  LambdaMatrix require_lambda(ScalarMatrix const& m,
                              RackData const&     rack,
                              LambdaMode          mode) {
    auto report = validate_lambda(m, rack, mode);
    if (!report.accepted()) {
      std::string msg = "invalid lambda:";
      for (auto const& [i, j, k] : report.cocycle_violations) {
        msg += " cocycle(" + std::to_string(i) + "," + std::to_string(j) + ","
               + std::to_string(k) + ")";
      }
      for (auto const& [i, j] : report.quotient_violations) {
        msg += " quotient(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
      throw std::invalid_argument(msg);
    }
    return *report.lambda;
  }

  bool satisfies_quotient_condition(LambdaMatrix const& lam, RackData const& rack) {
    for (std::size_t i = 0; i < lam.size(); ++i) {
      for (std::size_t j = 0; j < lam.size(); ++j) {
        if (!(lam(i, rack.op(i, j)) + lam(i, j)).is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  Scalar extend_lambda(LambdaMatrix const&             lam,
                       RackData const&                 rack,
                       std::vector<std::size_t> const& word,
                       std::size_t                     j) {
    // lambda(g_a h, x_j) = lambda_{a, h.j} + lambda(h, x_j), unfolded from
    // the right.
    Scalar      acc = lam.field().zero();
    std::size_t idx = j;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      acc += lam(*it, idx);
      idx = rack.op(*it, idx);
    }
    return acc;
  }

  ////////////////////////////////////////////////////////////////////////
  // Yetter-Drinfeld data and presentations
  ////////////////////////////////////////////////////////////////////////

  PointedYDData::PointedYDData(GroupTable group) : _group(std::move(group)) {
    std::size_t const n = _group.rack().size();
    _action.assign(_group.order(), std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < _group.order(); ++g) {
      for (std::size_t i = 0; i < n; ++i) {
        _action[g][i] = conjugation_action(g, i, _group);
        // deg(g.x_i) = g deg(x_i) g^-1
        if (_group.g(_action[g][i]) != _group.conjugate(g, _group.g(i))) {
          throw group_structure_error("Yetter-Drinfeld compatibility fails");
        }
      }
    }
  }

  std::string to_string(Flavor f) {
    switch (f) {
      case Flavor::t_lambda:
        return "T_LAMBDA";
      case Flavor::t_prime_lambda:
        return "T_PRIME_LAMBDA";
      case Flavor::bosonization:
        return "BOSONIZATION";
    }
    return "?";
  }

  FulcrumPresentation::FulcrumPresentation(Flavor          flavor,
                                           PointedYDData   yd,
                                           LambdaMatrix    lambda,
                                           ReductionSystem system)
      : _flavor(flavor),
        _yd(std::move(yd)),
        _lambda(std::move(lambda)),
        _system(std::move(system)) {}

  letter_type FulcrumPresentation::module_letter(std::size_t i) const {
    if (i >= _yd.dim()) {
      throw std::out_of_range("module index out of range");
    }
    return static_cast<letter_type>(i);
  }

  Word FulcrumPresentation::group_word(std::size_t g) const {
    if (g >= _yd.group().order()) {
      throw std::out_of_range("group element out of range");
    }
    if (g == _yd.group().identity()) {
      return Word();
    }
    return Word::letter(static_cast<letter_type>(_yd.dim() + g - 1));
  }

  NcPoly FulcrumPresentation::x(std::size_t i) const {
    return NcPoly::letter(ring(), module_letter(i));
  }

  NcPoly FulcrumPresentation::element(std::size_t g) const {
    return NcPoly(ring(), group_word(g));
  }

  std::optional<std::size_t>
  FulcrumPresentation::group_of_letter(letter_type a) const {
    if (a < _yd.dim()) {
      return std::nullopt;
    }
    return a - _yd.dim() + 1;
  }

  Scalar FulcrumPresentation::lambda_at(std::size_t g, std::size_t i) const {
    return extend_lambda(_lambda, _yd.rack(), _yd.group().factorization(g), i);
  }

  RingPtr fulcrum_ring(PointedYDData const& yd,
                       Field const&         field,
                       std::string const&   prefix) {
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < yd.dim(); ++i) {
      letters.push_back({prefix + std::to_string(i), Sort::module_letter});
    }
    for (std::size_t g = 1; g < yd.group().order(); ++g) {
      letters.push_back({yd.group().name(g), Sort::group_letter});
    }
    if (letters.size() > 255) {
      throw std::invalid_argument("alphabet too large");
    }
    return make_ring(Alphabet(std::move(letters)), field, MonomialOrder::deglex);
  }

  FulcrumPresentation build_presentation(PointedYDData const& yd,
                                         LambdaMatrix const&  lam,
                                         Flavor               flavor,
                                         std::size_t          degree_cap) {
    if (lam.size() != yd.dim()) {
      throw std::invalid_argument("lambda does not match the rack size");
    }
    Field const      f    = lam.field();
    RingPtr const    ring = fulcrum_ring(
        yd, f, flavor == Flavor::t_prime_lambda ? "y" : "x");
    ReductionSystem  sys(ring, degree_cap);
    GroupTable const& G = yd.group();
    std::size_t const n = yd.dim();

    auto word_of = [&](std::size_t g) {
      return g == 0 ? Word()
                    : Word::letter(static_cast<letter_type>(n + g - 1));
    };
    auto lambda_at = [&](std::size_t g, std::size_t i) {
      return extend_lambda(lam, yd.rack(), G.factorization(g), i);
    };

    for (std::size_t g = 1; g < G.order(); ++g) {
      for (std::size_t h = 1; h < G.order(); ++h) {
        sys.add_rule({word_of(g) * word_of(h),
                      NcPoly(ring, word_of(G.mul(g, h)))});
      }
    }
    for (std::size_t g = 1; g < G.order(); ++g) {
      for (std::size_t i = 0; i < n; ++i) {
        Word const xi = Word::letter(static_cast<letter_type>(i));
        Word const gi = Word::letter(static_cast<letter_type>(yd.act(g, i)));
        NcPoly     tail(ring, gi * word_of(g));
        Scalar     l = lambda_at(g, i);
        switch (flavor) {
          case Flavor::t_lambda:
            // (g.x_i) g with g.x_i = x_{g.i} + l (1 - g g_i g^-1)
            tail += NcPoly(ring, l, word_of(g));
            tail -= NcPoly(ring, l, word_of(G.mul(g, G.g(i))));
            break;
          case Flavor::t_prime_lambda:
            tail += NcPoly(ring, l, word_of(g));
            break;
          case Flavor::bosonization:
            break;
        }
        sys.add_rule({word_of(g) * xi, tail});
      }
    }
    LambdaMatrix stored
        = flavor == Flavor::bosonization ? LambdaMatrix::zero(f, n) : lam;
    return FulcrumPresentation(flavor, yd, std::move(stored), std::move(sys));
  }

  ////////////////////////////////////////////////////////////////////////
  // Comultiplication
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Delta on letters, in the free algebra.
    std::vector<TensorPoly> coproduct_images(FulcrumPresentation const& pres) {
      RingPtr const&          ring = pres.ring();
      Field const&            f    = ring->field;
      std::vector<TensorPoly> images;
      for (std::size_t a = 0; a < ring->alphabet.size(); ++a) {
        TensorPoly  t(ring);
        letter_type la = static_cast<letter_type>(a);
        if (auto g = pres.group_of_letter(la)) {
          t.add_term({Word::letter(la), Word::letter(la)}, f.one());
        } else {
          t.add_term({Word::letter(la), Word()}, f.one());
          t.add_term({pres.group_word(pres.yd().degree(a)), Word::letter(la)},
                     f.one());
        }
        images.push_back(std::move(t));
      }
      return images;
    }

    TensorPoly free_coproduct(Word const& w, std::vector<TensorPoly> const& images,
                              RingPtr const& ring) {
      TensorPoly acc = TensorPoly::unit(ring);
      for (std::size_t i = 0; i < w.size(); ++i) {
        acc = acc * images[w[i]];
      }
      return acc;
    }
  }  // namespace

  TensorPoly coproduct(FulcrumPresentation const& pres, NcPoly const& p) {
    if (pres.flavor() == Flavor::t_prime_lambda) {
      throw std::invalid_argument("T' carries no comultiplication");
    }
    ReductionSystem const* s = &pres.system();
    return apply_algebra_map<2>(p, coproduct_images(pres), {s, s});
  }

  bool check_skew_primitive(FulcrumPresentation const& pres,
                            NcPoly const&              rel,
                            std::size_t                grp) {
    if (grp >= pres.yd().group().order()) {
      throw std::out_of_range("check_skew_primitive: unknown group element");
    }
    NcPoly const reduced = pres.system().normal_form(rel);
    TensorPoly   expected
        = TensorPoly::pure({reduced, NcPoly(pres.ring(), pres.ring()->field.one())})
          + TensorPoly::pure({pres.element(grp), reduced});
    ReductionSystem const* s = &pres.system();
    expected                 = reduce_factors<2>(expected, {s, s});
    return coproduct(pres, rel) == expected;
  }

  bool coassociative_on_generators(FulcrumPresentation const& pres) {
    auto const     images = coproduct_images(pres);
    RingPtr const& ring   = pres.ring();
    for (std::size_t a = 0; a < images.size(); ++a) {
      Tensor<3> left(ring), right(ring);
      for (auto const& [k, c] : images[a].terms()) {
        Tensor<1> first(ring), second(ring);
        first.add_term({k[0]}, ring->field.one());
        second.add_term({k[1]}, ring->field.one());
        left += outer(free_coproduct(k[0], images, ring), second) * c;
        right += outer(first, free_coproduct(k[1], images, ring)) * c;
      }
      if (!(left == right)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Coactions
  ////////////////////////////////////////////////////////////////////////

  std::vector<MapFailure> check_algebra_map(
      std::string const&                           name,
      ReductionSystem const&                       source,
      std::vector<TensorPoly> const&               images,
      std::array<ReductionSystem const*, 2> const& targets) {
    std::vector<MapFailure> failures;
    for (auto const& rule : source.rules()) {
      NcPoly     rel   = rule.as_poly();
      TensorPoly image = apply_algebra_map<2>(rel, images, targets);
      if (!image.is_zero()) {
        failures.push_back({name, rel.to_string(), image.to_string()});
      }
    }
    return failures;
  }

  namespace {
    void check_layout(PointedYDData const& yd, RingPtr const& ring) {
      if (ring->alphabet.size() != yd.dim() + yd.group().order() - 1
          || ring->alphabet.module_count() != yd.dim()) {
        throw std::invalid_argument("ring does not have the fulcrum letter layout");
      }
    }

    // g -> g ⊗ g on group letters; `module_image` on module letters.
    template <typename F>
    std::vector<TensorPoly> layout_images(PointedYDData const& yd,
                                          RingPtr const&       left,
                                          RingPtr const&       right,
                                          F                    module_image) {
      check_layout(yd, left);
      check_layout(yd, right);
      Field const&            f = left->field;
      std::vector<TensorPoly> images;
      for (std::size_t a = 0; a < left->alphabet.size(); ++a) {
        TensorPoly  t({left, right});
        letter_type la = static_cast<letter_type>(a);
        if (a >= yd.dim()) {
          t.add_term({Word::letter(la), Word::letter(la)}, f.one());
        } else {
          module_image(t, a, f);
        }
        images.push_back(std::move(t));
      }
      return images;
    }

    Word group_letter_word(PointedYDData const& yd, std::size_t g) {
      return g == 0 ? Word()
                    : Word::letter(static_cast<letter_type>(yd.dim() + g - 1));
    }
  }  // namespace

  namespace {
    // a_i -> a_i ⊗ 1 + g_i ⊗ a_i, g -> g ⊗ g, between two fulcrum layouts.
    std::vector<TensorPoly> coaction_images(PointedYDData const& yd,
                                            RingPtr const&       left,
                                            RingPtr const&       right) {
      return layout_images(
          yd, left, right, [&](TensorPoly& t, std::size_t i, Field const& f) {
            letter_type li = static_cast<letter_type>(i);
            t.add_term({Word::letter(li), Word()}, f.one());
            t.add_term({group_letter_word(yd, yd.degree(i)), Word::letter(li)},
                       f.one());
          });
    }
  }  // namespace

  std::vector<TensorPoly> right_coaction_images(PointedYDData const& yd,
                                                RingPtr const& source_ring,
                                                RingPtr const& right_ring) {
    return coaction_images(yd, source_ring, right_ring);
  }

  std::vector<TensorPoly> left_coaction_images(PointedYDData const& yd,
                                               RingPtr const& left_ring,
                                               RingPtr const& source_ring) {
    return coaction_images(yd, left_ring, source_ring);
  }

  CoactionReport coaction_maps(PointedYDData const& yd, LambdaMatrix const& lam) {
    auto t   = build_presentation(yd, lam, Flavor::t_lambda);
    auto tp  = build_presentation(yd, lam, Flavor::t_prime_lambda);
    auto bos = build_presentation(yd, lam, Flavor::bosonization);

    CoactionReport report;
    report.rho_r = right_coaction_images(yd, tp.ring(), bos.ring());
    report.rho_l = left_coaction_images(yd, t.ring(), tp.ring());
    report.failures
        = check_algebra_map("rho_r", tp.system(), report.rho_r,
                            {&tp.system(), &bos.system()});
    auto more = check_algebra_map("rho_l", tp.system(), report.rho_l,
                                  {&t.system(), &tp.system()});
    report.failures.insert(report.failures.end(), more.begin(), more.end());
    report.relations_checked = 2 * tp.system().rules().size();
    return report;
  }

}  // namespace fulcrum
