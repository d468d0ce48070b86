// The Jordan plane over Q with the infinite cyclic group: bosonization,
// its deformation U and the cleft object U'.

#ifndef FULCRUM_JORDAN_HPP_
#define FULCRUM_JORDAN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "fulcrum/fulcrum.hpp"

namespace fulcrum {

  enum class JordanFlavor { bosonization, u_jordan, u_prime };

  std::string to_string(JordanFlavor f);

  /// Letters x1 < x2 < g < G (y1, y2 for U'), G = g^-1.
  struct JordanPresentation {
    static constexpr letter_type x1 = 0, x2 = 1, g = 2, G = 3;

    JordanFlavor    flavor;
    ReductionSystem system;
    std::size_t     truncation;

    RingPtr const& ring() const noexcept { return system.ring(); }
  };

  /// Rules for g are given; rules for G come from inverting the action of
  /// g on the module extension. Throws std::invalid_argument if L < 2.
  JordanPresentation build_jordan(JordanFlavor flavor, std::size_t truncation);

  /// Number of words x1^a x2^b g^c or x1^a x2^b G^c of length exactly ell.
  std::size_t pbw_count(std::size_t ell);

  struct PbwReport {
    CompletionReport         completion;
    IrreducibleCounts        counts;
    std::vector<std::size_t> expected;  // pbw_count per length
    bool                     shape_ok = false;  // irreducibles are PBW words
    bool                     denominators_ok = false;

    bool ok() const;
  };

  PbwReport verify_pbw(JordanPresentation const& p);

  struct JordanCoactionReport {
    std::vector<MapFailure> failures;
    std::size_t             relations_checked = 0;

    bool ok() const noexcept { return failures.empty(); }
  };

  /// rho_r: U' -> U' ⊗ B(V)#kZ and rho_l: U' -> U ⊗ U' on every defining
  /// relation of U'.
  JordanCoactionReport jordan_coactions(std::size_t truncation = 6);

}  // namespace fulcrum

#endif  // FULCRUM_JORDAN_HPP_
