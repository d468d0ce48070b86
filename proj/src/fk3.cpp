#include "fulcrum/fk3.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fulcrum/gf2.hpp"

namespace fulcrum {

  namespace {
    NcPoly module_word(RingPtr const& ring, std::initializer_list<std::size_t> idx) {
      std::vector<letter_type> ls;
      for (auto i : idx) {
        ls.push_back(static_cast<letter_type>(i));
      }
      return NcPoly(ring, Word(ls));
    }
  }  // namespace

  NcPoly fk3_relation(RingPtr const& ring, RackData const& rack,
                      std::size_t i, std::size_t j) {
    std::size_t const k = rack.op(i, j);
    std::size_t const l = rack.op(k, i);
    return module_word(ring, {i, j}) + module_word(ring, {k, i})
           + module_word(ring, {l, k});
  }

  std::vector<NcPoly> fk3_relations(RingPtr const& ring, RackData const& rack) {
    std::vector<NcPoly> out;
    for (std::size_t i = 0; i < rack.size(); ++i) {
      for (std::size_t j = 0; j < rack.size(); ++j) {
        NcPoly r = fk3_relation(ring, rack, i, j);
        if (std::find(out.begin(), out.end(), r) == out.end()) {
          out.push_back(std::move(r));
        }
      }
    }
    return out;
  }

  std::vector<NcPoly> fk3_relations() {
    auto ring = make_ring(Alphabet::module_only({"x0", "x1", "x2"}),
                          Field::f2(), MonomialOrder::deglex);
    return fk3_relations(ring, dihedral_rack());
  }

  NcPoly linear_deformation(RingPtr const&      ring,
                            RackData const&     rack,
                            LambdaMatrix const& lam,
                            std::size_t         i,
                            std::size_t         j) {
    std::size_t const k = rack.op(i, j);
    NcPoly            r(ring);
    r.add_term(Word::letter(static_cast<letter_type>(i)), lam(i, j));
    r.add_term(Word::letter(static_cast<letter_type>(k)), lam(k, i));
    r.add_term(Word::letter(static_cast<letter_type>(j)), lam(j, k));
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Nichols algebra
  ////////////////////////////////////////////////////////////////////////

  NicholsReport nichols_algebra() {
    auto rels   = fk3_relations();
    auto ring   = rels.front().ring();
    auto sys    = ReductionSystem::from_relations(ring, rels);
    auto report = complete(std::move(sys));
    auto counts = count_irreducible(report.system, report.system.degree_cap());
    return {std::move(report), std::move(counts)};
  }

  std::size_t nichols_dimension() {
    auto r = nichols_algebra();
    if (r.completion.status != CompletionStatus::confluent || !r.counts.finite) {
      throw std::runtime_error("Nichols algebra completion: "
                               + to_string(r.completion.status));
    }
    return r.counts.total;
  }

  ////////////////////////////////////////////////////////////////////////
  // mu
  ////////////////////////////////////////////////////////////////////////

  MuReport validate_mu(ScalarMatrix const& mu,
                       LambdaMatrix const& lam,
                       RackData const&     rack) {
    std::size_t const n = rack.size();
    if (mu.size() != n || lam.size() != n) {
      throw std::invalid_argument("mu and lambda must match the rack size");
    }
    MuReport report;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t const k = rack.op(i, j);
        if (!(mu[i][j] == mu[k][i]) || !(mu[i][j] == mu[j][k])) {
          report.symmetry_violations.push_back({i, j});
        }
      }
    }
    auto const& l = lam;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t const ij = rack.op(i, j);
        for (std::size_t k = 0; k < n; ++k) {
          Scalar lhs = mu[i][j] + mu[rack.op(k, i)][rack.op(k, j)];
          Scalar rhs = l(k, i) * (l(k, ij) + l(i, j))
                       + l(k, j) * (l(k, i) + l(j, ij))
                       + l(k, ij) * (l(k, j) + l(ij, i));
          if (!(lhs == rhs)) {
            report.compatibility_violations.push_back({i, j, k});
          }
        }
      }
    }
    if (report.symmetry_violations.empty()
        && report.compatibility_violations.empty()) {
      report.mu = MuMatrix(mu);
    }
    return report;
  }

  GroupTable fk3_group(LambdaMode mode) {
    return enveloping_quotient(dihedral_rack(), mode == LambdaMode::s3 ? 2 : 4);
  }

  ////////////////////////////////////////////////////////////////////////
  // Liftings and cleft objects
  ////////////////////////////////////////////////////////////////////////

  NcPoly lifting_relation(FulcrumPresentation const& t_lambda,
                          ScalarMatrix const&        mu,
                          std::size_t                i,
                          std::size_t                j) {
    auto const& ring = t_lambda.ring();
    auto const& yd   = t_lambda.yd();
    auto const& G    = yd.group();
    NcPoly rel = fk3_relation(ring, yd.rack(), i, j)
                 + linear_deformation(ring, yd.rack(), t_lambda.lambda(), i, j);
    rel += NcPoly(ring, mu[i][j]);
    rel -= t_lambda.element(G.mul(G.g(i), G.g(j))) * mu[i][j];
    return rel;
  }

  NcPoly cleft_relation(FulcrumPresentation const& t_prime,
                        ScalarMatrix const&        mu,
                        std::size_t                i,
                        std::size_t                j) {
    auto const& ring = t_prime.ring();
    auto const& rack = t_prime.yd().rack();
    return fk3_relation(ring, rack, i, j)
           + linear_deformation(ring, rack, t_prime.lambda(), i, j)
           + NcPoly(ring, mu[i][j]);
  }

  namespace {
    QuotientAlgebra quotient(FulcrumPresentation base, std::vector<NcPoly> rels) {
      ReductionSystem sys = base.system();
      for (auto const& r : rels) {
        if (!sys.add_relation(r)) {
          break;  // collapsed; completion reports it
        }
      }
      CompletionReport report = complete(std::move(sys));
      IrreducibleCounts counts
          = count_irreducible(report.system, report.system.degree_cap());
      std::optional<std::size_t> dim;
      if (report.status == CompletionStatus::collapsed_to_zero) {
        dim = 0;
      } else if (report.status == CompletionStatus::confluent && counts.finite) {
        dim = counts.total;
      }
      return {std::move(base), std::move(rels), std::move(report),
              std::move(counts), dim};
    }

    void check_mu_shape(ScalarMatrix const& mu, std::size_t n) {
      if (mu.size() != n) {
        throw std::invalid_argument("mu does not match the rack size");
      }
      for (auto const& row : mu) {
        if (row.size() != n) {
          throw std::invalid_argument("mu is not square");
        }
      }
    }
  }  // namespace

  QuotientAlgebra build_lifting(PointedYDData const& yd,
                                LambdaMatrix const&  lam,
                                ScalarMatrix const&  mu) {
    check_mu_shape(mu, yd.dim());
    auto                base = build_presentation(yd, lam, Flavor::t_lambda);
    std::vector<NcPoly> rels;
    for (std::size_t i = 0; i < yd.dim(); ++i) {
      for (std::size_t j = 0; j < yd.dim(); ++j) {
        rels.push_back(lifting_relation(base, mu, i, j));
      }
    }
    return quotient(std::move(base), std::move(rels));
  }

  QuotientAlgebra build_cleft(PointedYDData const& yd,
                              LambdaMatrix const&  lam,
                              ScalarMatrix const&  mu) {
    check_mu_shape(mu, yd.dim());
    auto                base = build_presentation(yd, lam, Flavor::t_prime_lambda);
    std::vector<NcPoly> rels;
    for (std::size_t i = 0; i < yd.dim(); ++i) {
      for (std::size_t j = 0; j < yd.dim(); ++j) {
        rels.push_back(cleft_relation(base, mu, i, j));
      }
    }
    return quotient(std::move(base), std::move(rels));
  }

  QuotientAlgebra build_lifting(LambdaMatrix const& lam, MuMatrix const& mu) {
    return build_lifting(PointedYDData(fk3_group(LambdaMode::s3)), lam,
                         mu.entries());
  }

  QuotientAlgebra build_cleft(LambdaMatrix const& lam, MuMatrix const& mu) {
    return build_cleft(PointedYDData(fk3_group(LambdaMode::s3)), lam,
                       mu.entries());
  }

  ////////////////////////////////////////////////////////////////////////
  // Cubic relation
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(IndexConvention c) {
    return c == IndexConvention::shift ? "shift" : "mod3";
  }

  NcPoly cubic_formula(RingPtr const&      ring,
                       LambdaMatrix const& lam,
                       ScalarMatrix const& mu,
                       IndexConvention     convention) {
    auto at = [&](std::size_t p) {
      return convention == IndexConvention::shift ? p - 1 : p % 3;
    };
    auto L = [&](std::size_t p, std::size_t q) { return lam(at(p), at(q)); };
    auto M = [&](std::size_t p, std::size_t q) { return mu[at(p)][at(q)]; };
    auto w = [&](std::initializer_list<std::size_t> ps) {
      std::vector<letter_type> ls;
      for (auto p : ps) {
        ls.push_back(static_cast<letter_type>(at(p)));
      }
      return Word(ls);
    };
    Scalar const l12 = L(1, 2), l21 = L(2, 1);
    NcPoly       rhs(ring);
    rhs.add_term(w({1, 2, 1}), ring->field.one());
    rhs.add_term(w({2, 1}), l21 + l12);
    rhs.add_term(w({1, 2}), l21 + l12);
    rhs.add_term(w({2}), l12 * l21 + M(3, 3) + M(1, 1) + M(1, 2));
    rhs.add_term(w({1}), l12 * l21 + M(3, 3) + M(2, 2) + M(1, 2));
    rhs.add_term(Word(), l21 * (M(2, 2) + M(1, 2)) + l12 * (M(1, 1) + M(1, 2)));
    return NcPoly(ring, w({2, 1, 2})) - rhs;
  }

  CubicRelation derived_cubic_relation(PointedYDData const& yd,
                                       LambdaMatrix const&  lam,
                                       ScalarMatrix const&  mu) {
    auto A = build_cleft(yd, lam, mu);
    if (A.completion.status != CompletionStatus::confluent) {
      throw std::runtime_error("cleft object does not complete: "
                               + to_string(A.completion.status));
    }
    auto const&               abc = A.system().ring()->alphabet;
    std::optional<NcPoly>     found;
    for (auto const& r : A.system().rules()) {
      bool module_lead = r.lead.size() == 3;
      for (std::size_t i = 0; i < r.lead.size(); ++i) {
        module_lead = module_lead && abc.is_module(r.lead[i]);
      }
      if (module_lead) {
        if (found) {
          throw std::runtime_error("more than one cubic module rule");
        }
        found = r.as_poly();
      }
    }
    if (!found) {
      throw std::runtime_error("completion produced no cubic module rule");
    }
    CubicRelation out{*found, {}};
    for (auto c : {IndexConvention::shift, IndexConvention::mod3}) {
      if (cubic_formula(A.system().ring(), lam, mu, c) == out.relation) {
        out.matching.push_back(c);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Galois maps
  ////////////////////////////////////////////////////////////////////////

  namespace {
    struct Basis {
      std::vector<Word>                           words;
      std::unordered_map<Word, std::size_t, WordHash> index;

      explicit Basis(QuotientAlgebra const& q) {
        words = irreducible_words(q.system(), q.system().degree_cap());
        for (std::size_t i = 0; i < words.size(); ++i) {
          index.emplace(words[i], i);
        }
      }
      std::size_t at(Word const& w) const {
        auto it = index.find(w);
        if (it == index.end()) {
          throw std::logic_error("word outside the irreducible basis");
        }
        return it->second;
      }
    };

    void require_finite(QuotientAlgebra const& q, char const* what) {
      if (!q.dimension || *q.dimension == 0) {
        throw std::runtime_error(std::string(what)
                                 + " is not finite-dimensional after completion");
      }
    }
  }  // namespace

  GaloisReport galois_certificate(PointedYDData const& yd,
                                  LambdaMatrix const&  lam,
                                  ScalarMatrix const&  mu) {
    if (lam.field() != Field::f2()) {
      throw std::invalid_argument("Galois ranks are computed over F2 only");
    }
    auto const L = build_lifting(yd, lam, mu);
    auto const A = build_cleft(yd, lam, mu);
    auto const B = build_lifting(yd, LambdaMatrix::zero(lam.field(), yd.dim()),
                                 zero_matrix(lam.field(), yd.dim()));
    require_finite(L, "lifting");
    require_finite(A, "cleft object");
    require_finite(B, "graded algebra");

    ReductionSystem const& sa = A.system();
    ReductionSystem const& sb = B.system();
    ReductionSystem const& sl = L.system();

    auto rho_r = right_coaction_images(yd, sa.ring(), sb.ring());
    auto rho_l = left_coaction_images(yd, sl.ring(), sa.ring());

    GaloisReport report;
    report.failures = check_algebra_map("rho_r", sa, rho_r, {&sa, &sb});
    auto more       = check_algebra_map("rho_l", sa, rho_l, {&sl, &sa});
    report.failures.insert(report.failures.end(), more.begin(), more.end());
    if (!report.failures.empty()) {
      return report;
    }

    Basis const ba(A), bb(B), bl(L);
    std::size_t const n = ba.words.size();
    report.dimension    = n;
    if (bb.words.size() != n || bl.words.size() != n) {
      throw std::runtime_error("Galois maps need equal dimensions");
    }

    std::vector<TensorPoly> right_images, left_images;
    for (auto const& w : ba.words) {
      NcPoly p(sa.ring(), w);
      right_images.push_back(apply_algebra_map<2>(p, rho_r, {&sa, &sb}));
      left_images.push_back(apply_algebra_map<2>(p, rho_l, {&sl, &sa}));
    }

    auto odd = [](Scalar const& c) { return c.residue() != 0; };

    // a ⊗ b -> a b_(0) ⊗ b_(1)
    std::vector<BitVector> rows;
    rows.reserve(n * n);
    for (std::size_t ia = 0; ia < n; ++ia) {
      for (std::size_t ib = 0; ib < n; ++ib) {
        BitVector row(n * n);
        for (auto const& [k, c] : right_images[ib].terms()) {
          NcPoly prod = sa.normal_form(ba.words[ia] * k[0]);
          for (auto const& [w, d] : prod.terms()) {
            if (odd(c * d)) {
              row.flip(ba.at(w) * n + bb.at(k[1]));
            }
          }
        }
        rows.push_back(std::move(row));
      }
    }
    report.rank_right = rank_f2(std::move(rows));

    // a ⊗ b -> a_(-1) ⊗ a_(0) b
    rows.clear();
    for (std::size_t ia = 0; ia < n; ++ia) {
      for (std::size_t ib = 0; ib < n; ++ib) {
        BitVector row(n * n);
        for (auto const& [k, c] : left_images[ia].terms()) {
          NcPoly prod = sa.normal_form(k[1] * ba.words[ib]);
          for (auto const& [w, d] : prod.terms()) {
            if (odd(c * d)) {
              row.flip(bl.at(k[0]) * n + ba.at(w));
            }
          }
        }
        rows.push_back(std::move(row));
      }
    }
    report.rank_left = rank_f2(std::move(rows));
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificates
  ////////////////////////////////////////////////////////////////////////

  std::vector<SkewCheck> skew_primitivity(PointedYDData const& yd,
                                          LambdaMatrix const&  lam,
                                          ScalarMatrix const&  mu) {
    check_mu_shape(mu, yd.dim());
    auto const              t = build_presentation(yd, lam, Flavor::t_lambda);
    auto const&             G = yd.group();
    auto const&             rack = yd.rack();
    std::vector<SkewCheck>  out;
    for (std::size_t i = 0; i < yd.dim(); ++i) {
      for (std::size_t j = 0; j < yd.dim(); ++j) {
        std::size_t const grp   = G.mul(G.g(i), G.g(j));
        NcPoly const      plain = fk3_relation(t.ring(), rack, i, j)
                             + linear_deformation(t.ring(), rack, lam, i, j);
        out.push_back({i, j, check_skew_primitive(t, plain, grp),
                       check_skew_primitive(t, lifting_relation(t, mu, i, j), grp)});
      }
    }
    return out;
  }

  bool LiftingCertificate::valid() const {
    if (!lambda_valid || !mu_valid) {
      return false;
    }
    for (auto const& s : skew) {
      if (!s.plain || !s.with_mu) {
        return false;
      }
    }
    if (!quotient_compatible) {
      return true;
    }
    std::size_t const expected = 12 * group_order;
    if (!lifting || lifting->dimension != expected || !cleft
        || cleft->dimension != expected) {
      return false;
    }
    if (!cubic || cubic->matching.size() != 1) {
      return false;
    }
    return !galois || galois->bijective();
  }

  LiftingCertificate certify_pair(std::string const&    lambda_bits,
                                  std::string const&    mu_bits,
                                  CertifyOptions const& options) {
    RackData const     rack = dihedral_rack();
    ScalarMatrix const lm   = matrix_from_bits(lambda_bits);
    ScalarMatrix const mm   = matrix_from_bits(mu_bits);

    LiftingCertificate cert;
    cert.lambda_bits = lambda_bits;
    cert.mu_bits     = mu_bits;

    auto lr           = validate_lambda(lm, rack, LambdaMode::gx);
    cert.lambda_valid = lr.accepted();
    if (!cert.lambda_valid) {
      return cert;
    }
    LambdaMatrix const lam = *lr.lambda;
    cert.mu_valid          = validate_mu(mm, lam, rack).accepted();
    cert.quotient_compatible = satisfies_quotient_condition(lam, rack);

    LambdaMode const    mode = cert.quotient_compatible ? LambdaMode::s3 : LambdaMode::gx;
    PointedYDData const yd(fk3_group(mode));
    cert.group       = mode == LambdaMode::s3 ? "s3" : "gx/<g0^4>";
    cert.group_order = yd.group().order();
    cert.skew        = skew_primitivity(yd, lam, mm);

    if (cert.quotient_compatible) {
      cert.lifting = build_lifting(yd, lam, mm);
      cert.cleft   = build_cleft(yd, lam, mm);
      if (cert.cleft->completion.status == CompletionStatus::confluent) {
        try {
          cert.cubic = derived_cubic_relation(yd, lam, mm);
        } catch (std::runtime_error const&) {
        }
      }
      if (options.galois) {
        cert.galois = galois_certificate(yd, lam, mm);
      }
    }
    return cert;
  }

}  // namespace fulcrum
