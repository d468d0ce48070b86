// Pointed fulcrum algebras T(V) #_M kG over a finite group: cocycle data,
// presentations, comultiplication and coactions.

#ifndef FULCRUM_FULCRUM_HPP_
#define FULCRUM_FULCRUM_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fulcrum/rack.hpp"
#include "fulcrum/rewrite.hpp"
#include "fulcrum/tensor.hpp"

namespace fulcrum {

  using ScalarMatrix = std::vector<std::vector<Scalar>>;

  /// Row-major bitstring, e.g. "000101110", as a square matrix over F2.
  /// Throws std::invalid_argument on a bad length or character.
  ScalarMatrix matrix_from_bits(std::string_view bits, std::size_t n = 3);
  /// Inverse of matrix_from_bits; the matrix must be over F2.
  std::string bits_of(ScalarMatrix const& m);
  ScalarMatrix zero_matrix(Field const& f, std::size_t n = 3);

  enum class LambdaMode {
    // Cocycle condition only: extensions over the enveloping group.
    gx,
    // Additionally descends to the quotient by g_0^2.
    s3
  };

  std::string     to_string(LambdaMode m);
  LambdaMode      parse_lambda_mode(std::string_view s);

  class LambdaMatrix;
  struct LambdaReport;

  LambdaReport validate_lambda(ScalarMatrix const& m,
                               RackData const&     rack,
                               LambdaMode          mode);

  /// lambda(g_i, x_j) for rack indices i, j, validated.
  class LambdaMatrix {
   public:
    static LambdaMatrix zero(Field const& f, std::size_t n = 3);

    Scalar const&       operator()(std::size_t i, std::size_t j) const {
      return _m[i][j];
    }
    ScalarMatrix const& entries() const noexcept { return _m; }
    std::size_t         size() const noexcept { return _m.size(); }
    Field               field() const { return _m.at(0).at(0).field(); }
    bool                is_zero() const;
    std::string         bits() const { return bits_of(_m); }

    bool operator==(LambdaMatrix const& o) const { return _m == o._m; }

   private:
    friend LambdaReport validate_lambda(ScalarMatrix const&,
                                        RackData const&,
                                        LambdaMode);
    explicit LambdaMatrix(ScalarMatrix m) : _m(std::move(m)) {}
    ScalarMatrix _m;
  };

  struct LambdaReport {
    std::optional<LambdaMatrix> lambda;
    // (i, j, k) where the cocycle condition fails, lexicographic.
    std::vector<std::array<std::size_t, 3>> cocycle_violations;
    // (i, j) where lambda(g_i^2, x_j) != 0, i.e. the quotient condition.
    std::vector<std::array<std::size_t, 2>> quotient_violations;

    bool accepted() const noexcept { return lambda.has_value(); }
  };

  /// Like validate_lambda but throws std::invalid_argument on rejection.
  LambdaMatrix require_lambda(ScalarMatrix const& m,
                              RackData const&     rack,
                              LambdaMode          mode);

  bool satisfies_quotient_condition(LambdaMatrix const& lam, RackData const& rack);

  /// lambda(g, x_j) for g = g_{w_0} g_{w_1} ..., folded with the cocycle law.
  Scalar extend_lambda(LambdaMatrix const&             lam,
                       RackData const&                 rack,
                       std::vector<std::size_t> const& word,
                       std::size_t                     j);

  /// Group, rack and the degree map i -> g_i of the braided vector space.
  class PointedYDData {
   public:
    explicit PointedYDData(GroupTable group);

    GroupTable const& group() const noexcept { return _group; }
    RackData const&   rack() const noexcept { return _group.rack(); }
    std::size_t       dim() const noexcept { return rack().size(); }
    std::size_t       degree(std::size_t i) const { return _group.g(i); }
    std::size_t       act(std::size_t g, std::size_t i) const {
      return _action[g][i];
    }

   private:
    GroupTable                            _group;
    std::vector<std::vector<std::size_t>> _action;
  };

  enum class Flavor { t_lambda, t_prime_lambda, bosonization };

  std::string to_string(Flavor f);

  /// A presentation of a fulcrum as a rewriting system. Module letters come
  /// first (ordinal i for index i), then one letter per non-identity group
  /// element (ordinal n + g - 1); the identity is the empty word.
  class FulcrumPresentation {
   public:
    FulcrumPresentation(Flavor          flavor,
                        PointedYDData   yd,
                        LambdaMatrix    lambda,
                        ReductionSystem system);

    Flavor                 flavor() const noexcept { return _flavor; }
    PointedYDData const&   yd() const noexcept { return _yd; }
    LambdaMatrix const&    lambda() const noexcept { return _lambda; }
    ReductionSystem const& system() const noexcept { return _system; }
    RingPtr const&         ring() const noexcept { return _system.ring(); }

    letter_type module_letter(std::size_t i) const;
    // Empty word for the identity.
    Word        group_word(std::size_t g) const;
    NcPoly      x(std::size_t i) const;
    NcPoly      element(std::size_t g) const;
    // Group element named by a letter, or nullopt for module letters.
    std::optional<std::size_t> group_of_letter(letter_type a) const;

    // lambda(g, x_i), extended along the stored factorisation of g.
    Scalar lambda_at(std::size_t g, std::size_t i) const;

   private:
    Flavor          _flavor;
    PointedYDData   _yd;
    LambdaMatrix    _lambda;
    ReductionSystem _system;
  };

  /// Ring of a fulcrum: module letters named prefix0, prefix1, ..., then
  /// group letters named by their factorisation. Ordered by deglex.
  RingPtr fulcrum_ring(PointedYDData const& yd,
                       Field const&         field,
                       std::string const&   prefix);

  FulcrumPresentation build_presentation(PointedYDData const& yd,
                                         LambdaMatrix const&  lam,
                                         Flavor               flavor,
                                         std::size_t          degree_cap
                                         = configured_degree_cap());

  namespace detail {
    template <std::size_t N>
    void expand_into(Tensor<N>&                 out,
                     std::vector<NcPoly> const& parts,
                     std::size_t                i,
                     WordTuple<N>&              key,
                     Scalar const&              c) {
      if (i == N) {
        out.add_term(key, c);
        return;
      }
      for (auto const& [w, a] : parts[i].terms()) {
        key[i] = w;
        expand_into(out, parts, i + 1, key, c * a);
      }
    }
  }  // namespace detail

  /// Normal form of each tensor factor in its own system.
  template <std::size_t N>
  Tensor<N> reduce_factors(Tensor<N> const&                           t,
                           std::array<ReductionSystem const*, N> const& sys) {
    Tensor<N>           out(t.rings());
    std::vector<NcPoly> parts;
    parts.reserve(N);
    WordTuple<N> key;
    for (auto const& [k, c] : t.terms()) {
      parts.clear();
      for (std::size_t i = 0; i < N; ++i) {
        parts.push_back(sys[i]->normal_form(k[i]));
      }
      detail::expand_into(out, parts, 0, key, c);
    }
    return out;
  }

  /// Image of p under the algebra map sending letter a to images[a],
  /// reducing the target factors after every multiplication.
  template <std::size_t N>
  Tensor<N> apply_algebra_map(NcPoly const&                                p,
                              std::vector<Tensor<N>> const&                images,
                              std::array<ReductionSystem const*, N> const& sys) {
    if (images.size() != p.ring()->alphabet.size()) {
      throw std::invalid_argument("apply_algebra_map: one image per letter");
    }
    Tensor<N> out(images.front().rings());
    for (auto const& [w, c] : p.terms()) {
      Tensor<N> acc = Tensor<N>::unit(out.rings());
      for (std::size_t i = 0; i < w.size(); ++i) {
        acc = reduce_factors(acc * images[w[i]], sys);
      }
      out += acc * c;
    }
    return out;
  }

  /// Delta(p) with both factors reduced in the presentation's system.
  TensorPoly coproduct(FulcrumPresentation const& pres, NcPoly const& p);

  /// Delta(rel) == rel ⊗ 1 + grp ⊗ rel after reduction. Throws
  /// std::out_of_range for an unknown group element and
  /// std::invalid_argument for the T' flavor, which has no coproduct.
  bool check_skew_primitive(FulcrumPresentation const& pres,
                            NcPoly const&              rel,
                            std::size_t                grp);

  /// (Delta ⊗ id) Delta = (id ⊗ Delta) Delta on every letter, in the free
  /// algebra.
  bool coassociative_on_generators(FulcrumPresentation const& pres);

  struct MapFailure {
    std::string map;
    std::string relation;
    std::string image;
  };

  /// Checks that letter images define an algebra map on the algebra
  /// presented by `source`: every rule lead - tail maps to zero.
  std::vector<MapFailure> check_algebra_map(
      std::string const&                           name,
      ReductionSystem const&                       source,
      std::vector<TensorPoly> const&               images,
      std::array<ReductionSystem const*, 2> const& targets);

  struct CoactionReport {
    // Images of the letters of T'_lambda.
    std::vector<TensorPoly> rho_r;  // into T'_lambda ⊗ T(V)#kG
    std::vector<TensorPoly> rho_l;  // into T_lambda ⊗ T'_lambda
    std::vector<MapFailure> failures;
    std::size_t             relations_checked = 0;

    bool ok() const noexcept { return failures.empty(); }
  };

  /// Letter images of the right and left coactions, from a source algebra
  /// with the y-type layout into the given target rings.
  std::vector<TensorPoly> right_coaction_images(PointedYDData const& yd,
                                                RingPtr const& source_ring,
                                                RingPtr const& right_ring);
  std::vector<TensorPoly> left_coaction_images(PointedYDData const& yd,
                                               RingPtr const& left_ring,
                                               RingPtr const& source_ring);

  CoactionReport coaction_maps(PointedYDData const& yd, LambdaMatrix const& lam);

}  // namespace fulcrum

#endif  // FULCRUM_FULCRUM_HPP_
