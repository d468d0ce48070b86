// Exact coefficient fields: F2, Fp (p < 2^16) and the rationals.

#ifndef FULCRUM_SCALAR_HPP_
#define FULCRUM_SCALAR_HPP_

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace fulcrum {

  enum class FieldKind : std::uint8_t { F2, Fp, Rational };

  class Scalar;

  /// A coefficient field. Equality compares kind and modulus.
  class Field {
   public:
    static Field f2() { return Field(FieldKind::F2, 2); }
    static Field fp(std::uint32_t p);
    static Field rational() { return Field(FieldKind::Rational, 0); }

    FieldKind     kind() const noexcept { return _kind; }
    std::uint32_t characteristic() const noexcept { return _p; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(long v) const;
    Scalar from_fraction(long num, long den) const;
    // Accepts "n", "-n" or "n/d".
    Scalar parse(std::string_view text) const;

    std::string name() const;

    bool operator==(Field const&) const = default;

   private:
    Field(FieldKind k, std::uint32_t p) : _kind(k), _p(p) {}
    FieldKind     _kind;
    std::uint32_t _p;
  };

  class field_mismatch : public std::logic_error {
    using std::logic_error::logic_error;
  };

  /// A field element. Residues carry their modulus so that values from
  /// different prime fields are never silently combined.
  class Scalar {
   public:
    struct Residue {
      std::uint32_t value;
      std::uint32_t modulus;
      bool          operator==(Residue const&) const = default;
    };

    Scalar() : _v(Residue{0, 2}) {}
    explicit Scalar(Residue r) : _v(r) {}
    explicit Scalar(mpq_class q);

    Field field() const;
    bool  is_zero() const;
    bool  is_one() const;

    Scalar operator+(Scalar const& o) const;
    Scalar operator-(Scalar const& o) const;
    Scalar operator*(Scalar const& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar operator/(Scalar const& o) const { return *this * o.inverse(); }

    Scalar& operator+=(Scalar const& o) { return *this = *this + o; }
    Scalar& operator-=(Scalar const& o) { return *this = *this - o; }
    Scalar& operator*=(Scalar const& o) { return *this = *this * o; }

    bool operator==(Scalar const& o) const;

    // Rationals only: true if numerator and denominator are coprime and the
    // denominator is positive.
    bool is_canonical() const;

    std::string to_string() const;

    // Valid only for residues.
    std::uint32_t residue() const;
    // Valid only for rationals.
    mpq_class const& rational() const;

   private:
    void check_same(Scalar const& o) const;

    std::variant<Residue, mpq_class> _v;
  };

}  // namespace fulcrum

#endif  // FULCRUM_SCALAR_HPP_
