#include "fulcrum/scalar.hpp"

#include <cassert>
#include <charconv>

namespace fulcrum {

  namespace {
    bool is_prime(std::uint32_t p) {
      if (p < 2) {
        return false;
      }
      for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    std::uint32_t reduce(long v, std::uint32_t p) {
      long r = v % static_cast<long>(p);
      return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }

    std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
      // a^(p-2) mod p
      std::uint64_t result = 1, base = a, e = p - 2;
      while (e > 0) {
        if (e & 1) {
          result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
      }
      return static_cast<std::uint32_t>(result);
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Field
  ////////////////////////////////////////////////////////////////////////

  Field Field::fp(std::uint32_t p) {
    if (p >= (1u << 16) || !is_prime(p)) {
      throw std::invalid_argument("Fp modulus must be a prime below 2^16, got "
                                  + std::to_string(p));
    }
    return p == 2 ? f2() : Field(FieldKind::Fp, p);
  }

  Scalar Field::zero() const {
    return from_int(0);
  }

  Scalar Field::one() const {
    return from_int(1);
  }

  Scalar Field::from_int(long v) const {
    if (_kind == FieldKind::Rational) {
      return Scalar(mpq_class(v));
    }
    return Scalar(Scalar::Residue{reduce(v, _p), _p});
  }

  Scalar Field::from_fraction(long num, long den) const {
    if (den == 0) {
      throw std::domain_error("zero denominator");
    }
    if (_kind == FieldKind::Rational) {
      mpq_class q(num, den);
      q.canonicalize();
      return Scalar(q);
    }
    return from_int(num) / from_int(den);
  }

  Scalar Field::parse(std::string_view text) const {
    auto slash = text.find('/');
    auto to_long = [&](std::string_view s) {
      long v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw std::invalid_argument("malformed coefficient '"
                                    + std::string(text) + "'");
      }
      return v;
    };
    if (slash == std::string_view::npos) {
      return from_int(to_long(text));
    }
    return from_fraction(to_long(text.substr(0, slash)),
                         to_long(text.substr(slash + 1)));
  }

  std::string Field::name() const {
    switch (_kind) {
      case FieldKind::F2:
        return "F2";
      case FieldKind::Fp:
        return "F" + std::to_string(_p);
      case FieldKind::Rational:
        return "Q";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Scalar
  ////////////////////////////////////////////////////////////////////////

  Scalar::Scalar(mpq_class q) : _v(std::move(q)) {
    std::get<mpq_class>(_v).canonicalize();
  }

  Field Scalar::field() const {
    if (auto r = std::get_if<Residue>(&_v)) {
      return Field::fp(r->modulus);
    }
    return Field::rational();
  }

  bool Scalar::is_zero() const {
    if (auto r = std::get_if<Residue>(&_v)) {
      return r->value == 0;
    }
    return sgn(std::get<mpq_class>(_v)) == 0;
  }

  bool Scalar::is_one() const {
    if (auto r = std::get_if<Residue>(&_v)) {
      return r->value == 1;
    }
    return std::get<mpq_class>(_v) == 1;
  }

  void Scalar::check_same(Scalar const& o) const {
    if (_v.index() != o._v.index()) {
      throw field_mismatch("arithmetic between a residue and a rational");
    }
    if (auto r = std::get_if<Residue>(&_v)) {
      if (r->modulus != std::get<Residue>(o._v).modulus) {
        throw field_mismatch("arithmetic between residues of different moduli");
      }
    }
  }

  Scalar Scalar::operator+(Scalar const& o) const {
    check_same(o);
    if (auto r = std::get_if<Residue>(&_v)) {
      auto const& s = std::get<Residue>(o._v);
      return Scalar(Residue{(r->value + s.value) % r->modulus, r->modulus});
    }
    mpq_class q = std::get<mpq_class>(_v) + std::get<mpq_class>(o._v);
    return Scalar(std::move(q));
  }

  Scalar Scalar::operator-() const {
    if (auto r = std::get_if<Residue>(&_v)) {
      return Scalar(
          Residue{(r->modulus - r->value) % r->modulus, r->modulus});
    }
    mpq_class q = -std::get<mpq_class>(_v);
    return Scalar(std::move(q));
  }

  Scalar Scalar::operator-(Scalar const& o) const {
    return *this + (-o);
  }

  Scalar Scalar::operator*(Scalar const& o) const {
    check_same(o);
    if (auto r = std::get_if<Residue>(&_v)) {
      auto const& s = std::get<Residue>(o._v);
      auto        v = static_cast<std::uint64_t>(r->value) * s.value;
      return Scalar(
          Residue{static_cast<std::uint32_t>(v % r->modulus), r->modulus});
    }
    mpq_class q = std::get<mpq_class>(_v) * std::get<mpq_class>(o._v);
    return Scalar(std::move(q));
  }

  Scalar Scalar::inverse() const {
    if (is_zero()) {
      throw std::domain_error("inverse of zero");
    }
    if (auto r = std::get_if<Residue>(&_v)) {
      return Scalar(Residue{inv_mod(r->value, r->modulus), r->modulus});
    }
    mpq_class q = 1 / std::get<mpq_class>(_v);
    return Scalar(std::move(q));
  }

  bool Scalar::operator==(Scalar const& o) const {
    return _v == o._v;
  }

  bool Scalar::is_canonical() const {
    auto q = std::get_if<mpq_class>(&_v);
    if (q == nullptr) {
      return true;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q->get_num_mpz_t(), q->get_den_mpz_t());
    return sgn(q->get_den()) > 0 && g == 1;
  }

  std::string Scalar::to_string() const {
    if (auto r = std::get_if<Residue>(&_v)) {
      return std::to_string(r->value);
    }
    return std::get<mpq_class>(_v).get_str();
  }

  std::uint32_t Scalar::residue() const {
    return std::get<Residue>(_v).value;
  }

  mpq_class const& Scalar::rational() const {
    return std::get<mpq_class>(_v);
  }

}  // namespace fulcrum
