// Racks, their automorphisms, and finite quotients of enveloping groups.

#ifndef FULCRUM_RACK_HPP_
#define FULCRUM_RACK_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fulcrum {

  class rack_error : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
  };

  /// A finite rack given by its table t[i][j] = i ▷ j.
  class RackData {
   public:
    // Validates bijectivity of left translations and self-distributivity.
    explicit RackData(std::vector<std::vector<std::size_t>> table);

    std::size_t size() const noexcept { return _table.size(); }
    std::size_t op(std::size_t i, std::size_t j) const { return _table[i][j]; }
    std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return _table;
    }

    bool operator==(RackData const&) const = default;

   private:
    std::vector<std::vector<std::size_t>> _table;
  };

  /// The affine rack (Z_3, 2): i ▷ j = 2i - j mod 3.
  RackData dihedral_rack();

  class RackAutomorphism {
   public:
    RackAutomorphism(RackData const& rack, std::vector<std::size_t> perm);

    std::size_t operator()(std::size_t i) const { return _perm[i]; }
    std::vector<std::size_t> const& perm() const noexcept { return _perm; }
    RackAutomorphism inverse() const;

    bool operator==(RackAutomorphism const& o) const { return _perm == o._perm; }

   private:
    RackAutomorphism(std::vector<std::size_t> perm) : _perm(std::move(perm)) {}
    std::vector<std::size_t> _perm;
  };

  /// All permutations preserving ▷, in lexicographic order of the
  /// permutation (the identity first).
  std::vector<RackAutomorphism> rack_automorphisms(RackData const& rack);

  class group_structure_error : public std::logic_error {
    using std::logic_error::logic_error;
  };

  /// A finite group as a multiplication table, identity at index 0, with
  /// distinguished elements g_i indexed by a rack. Every element stores a
  /// shortlex-minimal factorisation into the g_i.
  class GroupTable {
   public:
    // Validates the group axioms exhaustively and the compatibility
    // g_i g_j g_i^{-1} = g_{i▷j}.
    GroupTable(RackData                              rack,
               std::vector<std::vector<std::size_t>> mult,
               std::vector<std::size_t>              distinguished,
               std::vector<std::vector<std::size_t>> factorizations);

    std::size_t     order() const noexcept { return _mult.size(); }
    std::size_t     identity() const noexcept { return 0; }
    RackData const& rack() const noexcept { return _rack; }

    std::size_t mul(std::size_t a, std::size_t b) const { return _mult[a][b]; }
    std::size_t inverse(std::size_t a) const { return _inverse[a]; }
    std::size_t conjugate(std::size_t g, std::size_t h) const {
      return mul(mul(g, h), inverse(g));
    }

    std::size_t g(std::size_t i) const { return _distinguished.at(i); }
    std::vector<std::size_t> const& distinguished() const noexcept {
      return _distinguished;
    }

    std::vector<std::size_t> const& factorization(std::size_t a) const {
      return _factorizations.at(a);
    }
    // Product g_{w_0} g_{w_1} ... of distinguished elements.
    std::size_t evaluate(std::vector<std::size_t> const& word) const;

    // Generator-style name: "e" for the identity, otherwise the
    // concatenated factorisation, e.g. "g0g1".
    std::string name(std::size_t a) const;

    std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return _mult;
    }
    std::vector<std::size_t> const& inverses() const noexcept {
      return _inverse;
    }

   private:
    RackData                              _rack;
    std::vector<std::vector<std::size_t>> _mult;
    std::vector<std::size_t>              _inverse;
    std::vector<std::size_t>              _distinguished;
    std::vector<std::vector<std::size_t>> _factorizations;
  };

  /// The j with g g_i g^{-1} = g_j. Throws group_structure_error if the
  /// conjugate is not distinguished.
  std::size_t conjugation_action(std::size_t g, std::size_t i, GroupTable const& G);

  class coset_overflow : public std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  /// Quotient of the enveloping group <g_i | g_i g_j = g_{i▷j} g_i> by
  /// g_0^{power}, built by coset enumeration over the trivial subgroup.
  /// Throws coset_overflow if more than max_cosets live cosets are needed.
  GroupTable enveloping_quotient(RackData const& rack,
                                 std::size_t     power,
                                 std::size_t     max_cosets = 24);

  /// S_3 as the quotient by g_0^2.
  GroupTable s3_quotient(RackData const& rack);

}  // namespace fulcrum

#endif  // FULCRUM_RACK_HPP_
