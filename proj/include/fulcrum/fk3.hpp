// The Fomin-Kirillov algebra on three letters over F2, its liftings
// L(lambda, mu) and cleft objects A(lambda, mu).

#ifndef FULCRUM_FK3_HPP_
#define FULCRUM_FK3_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fulcrum/fulcrum.hpp"

namespace fulcrum {

  /// R_{i,j} = x_i x_j + x_{i▷j} x_i + x_{(i▷j)▷i} x_{i▷j} on the module
  /// letters 0..n-1 of the ring.
  NcPoly fk3_relation(RingPtr const& ring, RackData const& rack,
                      std::size_t i, std::size_t j);

  /// The distinct R_{i,j}, in order of first occurrence of (i, j).
  std::vector<NcPoly> fk3_relations(RingPtr const& ring, RackData const& rack);
  /// Over F2 with letters x0, x1, x2.
  std::vector<NcPoly> fk3_relations();

  /// r_{i,j} = lambda_{i,j} x_i + lambda_{i▷j,i} x_{i▷j} + lambda_{j,i▷j} x_j.
  NcPoly linear_deformation(RingPtr const&      ring,
                            RackData const&     rack,
                            LambdaMatrix const& lam,
                            std::size_t         i,
                            std::size_t         j);

  struct NicholsReport {
    CompletionReport  completion;
    IrreducibleCounts counts;
  };

  NicholsReport nichols_algebra();
  /// Total number of irreducible words after completion. Throws
  /// std::runtime_error if completion does not reach a confluent system.
  std::size_t nichols_dimension();

  class MuMatrix;
  struct MuReport;

  MuReport validate_mu(ScalarMatrix const& mu,
                       LambdaMatrix const& lam,
                       RackData const&     rack);

  class MuMatrix {
   public:
    Scalar const& operator()(std::size_t i, std::size_t j) const {
      return _m[i][j];
    }
    ScalarMatrix const& entries() const noexcept { return _m; }
    std::string         bits() const { return bits_of(_m); }

    bool operator==(MuMatrix const& o) const { return _m == o._m; }

   private:
    friend MuReport validate_mu(ScalarMatrix const&,
                                LambdaMatrix const&,
                                RackData const&);
    explicit MuMatrix(ScalarMatrix m) : _m(std::move(m)) {}
    ScalarMatrix _m;
  };

  struct MuReport {
    std::optional<MuMatrix> mu;
    // (i, j) with mu_{i,j}, mu_{i▷j,i}, mu_{j,i▷j} not all equal.
    std::vector<std::array<std::size_t, 2>> symmetry_violations;
    // (i, j, k) where the quadratic compatibility with lambda fails.
    std::vector<std::array<std::size_t, 3>> compatibility_violations;

    bool accepted() const noexcept { return mu.has_value(); }
  };

  /// S_3 in S3 mode; in GX mode the quotient by g_0^4 (order 12), on which
  /// every F2 cocycle is still defined.
  GroupTable fk3_group(LambdaMode mode);

  /// A fulcrum modulo deformed quadratic relations, completed.
  struct QuotientAlgebra {
    FulcrumPresentation base;
    std::vector<NcPoly> relations;
    CompletionReport    completion;
    IrreducibleCounts   counts;
    // 0 if collapsed, nullopt if not confluent or not finite within the cap.
    std::optional<std::size_t> dimension;

    ReductionSystem const& system() const noexcept { return completion.system; }
  };

  /// R_{i,j} + r_{i,j} + mu_{i,j} (1 - g_i g_j) in T_lambda.
  NcPoly lifting_relation(FulcrumPresentation const& t_lambda,
                          ScalarMatrix const&        mu,
                          std::size_t                i,
                          std::size_t                j);
  /// R'_{i,j} + r'_{i,j} + mu_{i,j} in T'_lambda.
  NcPoly cleft_relation(FulcrumPresentation const& t_prime,
                        ScalarMatrix const&        mu,
                        std::size_t                i,
                        std::size_t                j);

  /// mu is taken as given; invalid values are allowed so that their effect
  /// on the quotient can be observed.
  QuotientAlgebra build_lifting(PointedYDData const& yd,
                                LambdaMatrix const&  lam,
                                ScalarMatrix const&  mu);
  QuotientAlgebra build_cleft(PointedYDData const& yd,
                              LambdaMatrix const&  lam,
                              ScalarMatrix const&  mu);
  QuotientAlgebra build_lifting(LambdaMatrix const& lam, MuMatrix const& mu);
  QuotientAlgebra build_cleft(LambdaMatrix const& lam, MuMatrix const& mu);

  /// The closed formula for the cubic relation of A(lambda, mu) is written
  /// with indices 1, 2, 3. `shift` reads index p as p - 1, `mod3` as p mod 3.
  enum class IndexConvention { shift, mod3 };

  std::string to_string(IndexConvention c);

  /// The closed formula, moved to one side, under a convention.
  NcPoly cubic_formula(RingPtr const&      ring,
                       LambdaMatrix const& lam,
                       ScalarMatrix const& mu,
                       IndexConvention     convention);

  struct CubicRelation {
    // lead - tail of the completion-produced rule with a cubic module lead.
    NcPoly                       relation;
    std::vector<IndexConvention> matching;
  };

  /// Throws std::runtime_error if the cleft object does not complete to a
  /// confluent system with exactly one cubic module rule.
  CubicRelation derived_cubic_relation(PointedYDData const& yd,
                                       LambdaMatrix const&  lam,
                                       ScalarMatrix const&  mu);

  struct GaloisReport {
    std::size_t dimension  = 0;  // of A; matrices are dimension^2 square
    std::size_t rank_right = 0;
    std::size_t rank_left  = 0;
    std::vector<MapFailure> failures;

    bool bijective() const noexcept {
      return failures.empty() && rank_right == dimension * dimension
             && rank_left == dimension * dimension;
    }
  };

  /// Ranks over F2 of a ⊗ b -> a b_(0) ⊗ b_(1) into A ⊗ (B(V)#kG) and
  /// a ⊗ b -> a_(-1) ⊗ a_(0) b into L ⊗ A. Throws std::runtime_error if one
  /// of the three algebras is not finite-dimensional after completion.
  GaloisReport galois_certificate(PointedYDData const& yd,
                                  LambdaMatrix const&  lam,
                                  ScalarMatrix const&  mu);

  struct SkewCheck {
    std::size_t i, j;
    // R + r and R + r + mu (1 - g_i g_j) against g_i g_j.
    bool plain, with_mu;
  };

  /// Skew-primitivity of every deformed relation in T_lambda.
  std::vector<SkewCheck> skew_primitivity(PointedYDData const& yd,
                                          LambdaMatrix const&  lam,
                                          ScalarMatrix const&  mu);

  struct CertifyOptions {
    bool galois = false;
  };

  struct LiftingCertificate {
    std::string            lambda_bits;
    std::string            mu_bits;
    std::string            group;
    std::size_t            group_order = 0;
    bool                   lambda_valid = false;
    bool                   mu_valid     = false;
    bool                   quotient_compatible = false;
    std::vector<SkewCheck> skew;
    // Only for lambda compatible with the S_3 quotient.
    std::optional<QuotientAlgebra> lifting;
    std::optional<QuotientAlgebra> cleft;
    std::optional<CubicRelation>   cubic;
    std::optional<GaloisReport>    galois;

    bool valid() const;
  };

  /// Full pipeline for one F2 pair given as bitstrings.
  LiftingCertificate certify_pair(std::string const&    lambda_bits,
                                  std::string const&    mu_bits,
                                  CertifyOptions const& options = {});

}  // namespace fulcrum

#endif  // FULCRUM_FK3_HPP_
