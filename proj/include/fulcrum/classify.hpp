// Enumeration of F2 pairs (lambda, mu) and their isomorphism classes.

#ifndef FULCRUM_CLASSIFY_HPP_
#define FULCRUM_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fulcrum/fk3.hpp"

namespace fulcrum {

  struct PairRecord {
    LambdaMatrix lambda;
    MuMatrix     mu;
    LambdaMode   mode;
    std::optional<std::size_t> class_id;
    // Filled in by certification.
    std::optional<std::size_t> dimension;
    std::optional<std::size_t> galois_r;
    std::optional<std::size_t> galois_l;

    std::string lambda_bits() const { return lambda.bits(); }
    std::string mu_bits() const { return mu.bits(); }
  };

  /// All valid pairs over F2, ordered by lambda bits then mu bits (the
  /// bitstring read as a binary number, first character most significant).
  std::vector<PairRecord> enumerate_pairs(LambdaMode mode);

  struct IsoWitness {
    RackAutomorphism    phi;
    std::vector<Scalar> shifts;  // one per rack index
    Scalar              scale;
  };

  /// First witness for an isomorphism from p to q, searching rack
  /// automorphisms in order, then shift vectors in binary order with the
  /// shift of index 0 most significant.
  std::optional<IsoWitness> iso_related(PairRecord const& p,
                                        PairRecord const& q,
                                        RackData const&   rack = dihedral_rack());

  /// Checks the three conditions for a given witness.
  bool is_witness(IsoWitness const& w,
                  PairRecord const& p,
                  PairRecord const& q,
                  RackData const&   rack = dihedral_rack());

  struct Classification {
    std::vector<PairRecord> pairs;  // with class ids
    // Indices into pairs; classes ordered by decreasing size, then by
    // smallest member.
    std::vector<std::vector<std::size_t>> classes;
    // Ordered pairs (p, q), p != q, with a witness p -> q.
    std::size_t related_ordered_pairs = 0;
    // Ordered pairs with a witness p -> q but none q -> p.
    std::size_t missing_inverse_witnesses = 0;
  };

  Classification partition_classes(std::vector<PairRecord> pairs);

  enum class TableFormat { json, csv, markdown };

  TableFormat parse_table_format(std::string_view s);

  std::string emit_table(Classification const& c, TableFormat format);

  /// Reads the JSON produced by emit_table. Throws std::invalid_argument
  /// on malformed input.
  Classification read_table(std::string const& json);

}  // namespace fulcrum

#endif  // FULCRUM_CLASSIFY_HPP_
