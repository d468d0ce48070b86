// Elements of tensor powers P ⊗ ... ⊗ P of a free algebra.

#ifndef FULCRUM_TENSOR_HPP_
#define FULCRUM_TENSOR_HPP_

#include <array>
#include <map>
#include <string>

#include "fulcrum/ncpoly.hpp"

namespace fulcrum {

  template <std::size_t N>
  using WordTuple = std::array<Word, N>;

  template <std::size_t N>
  using RingTuple = std::array<RingPtr, N>;

  template <std::size_t N>
  struct TupleDescending {
    std::array<Descending, N> cmp;
    bool operator()(WordTuple<N> const& a, WordTuple<N> const& b) const {
      for (std::size_t i = 0; i < N; ++i) {
        if (cmp[i](a[i], b[i])) {
          return true;
        }
        if (cmp[i](b[i], a[i])) {
          return false;
        }
      }
      return false;
    }
  };

  namespace detail {
    template <std::size_t N>
    RingTuple<N> same_ring(RingPtr const& r) {
      RingTuple<N> out;
      out.fill(r);
      return out;
    }

    template <std::size_t N>
    TupleDescending<N> tuple_order(RingTuple<N> const& rings) {
      TupleDescending<N> t;
      for (std::size_t i = 0; i < N; ++i) {
        if (!(rings[i]->field == rings[0]->field)) {
          throw ring_mismatch("tensor factors over different fields");
        }
        t.cmp[i] = rings[i]->descending();
      }
      return t;
    }
  }  // namespace detail

  /// Sparse element of A_0 ⊗ ... ⊗ A_{N-1}, each factor a word over its
  /// own ring; all rings share one field. Multiplication is componentwise.
  template <std::size_t N>
  class Tensor {
   public:
    using key_type = WordTuple<N>;
    using term_map = std::map<key_type, Scalar, TupleDescending<N>>;

    explicit Tensor(RingTuple<N> rings)
        : _rings(std::move(rings)), _terms(detail::tuple_order<N>(_rings)) {}
    explicit Tensor(RingPtr const& ring) : Tensor(detail::same_ring<N>(ring)) {}

    static Tensor unit(RingTuple<N> const& rings) {
      Tensor t(rings);
      t.add_term(key_type{}, rings[0]->field.one());
      return t;
    }
    static Tensor unit(RingPtr const& ring) {
      return unit(detail::same_ring<N>(ring));
    }

    // p_0 ⊗ p_1 ⊗ ... ⊗ p_{N-1}
    static Tensor pure(std::array<NcPoly, N> const& ps) {
      RingTuple<N> rings;
      for (std::size_t i = 0; i < N; ++i) {
        rings[i] = ps[i].ring();
      }
      Tensor t(rings);
      t.add_pure(ps, ps[0].field().one(), 0, key_type{});
      return t;
    }

    RingTuple<N> const& rings() const noexcept { return _rings; }
    RingPtr const&      ring(std::size_t i = 0) const { return _rings[i]; }
    Field const&        field() const noexcept { return _rings[0]->field; }
    term_map const& terms() const noexcept { return _terms; }
    bool            is_zero() const noexcept { return _terms.empty(); }
    std::size_t     size() const noexcept { return _terms.size(); }

    void add_term(key_type const& k, Scalar const& c) {
      if (c.is_zero()) {
        return;
      }
      auto [it, inserted] = _terms.try_emplace(k, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          _terms.erase(it);
        }
      }
    }

    Tensor& operator+=(Tensor const& o) {
      check_ring(o);
      for (auto const& [k, c] : o._terms) {
        add_term(k, c);
      }
      return *this;
    }
    Tensor& operator-=(Tensor const& o) {
      check_ring(o);
      for (auto const& [k, c] : o._terms) {
        add_term(k, -c);
      }
      return *this;
    }
    Tensor operator+(Tensor const& o) const {
      Tensor r = *this;
      return r += o;
    }
    Tensor operator-(Tensor const& o) const {
      Tensor r = *this;
      return r -= o;
    }
    Tensor operator*(Scalar const& c) const {
      Tensor r(_rings);
      for (auto const& [k, a] : _terms) {
        r.add_term(k, a * c);
      }
      return r;
    }

    Tensor operator*(Tensor const& o) const {
      check_ring(o);
      Tensor r(_rings);
      for (auto const& [k1, a] : _terms) {
        for (auto const& [k2, b] : o._terms) {
          key_type k;
          for (std::size_t i = 0; i < N; ++i) {
            k[i] = k1[i] * k2[i];
          }
          r.add_term(k, a * b);
        }
      }
      return r;
    }

    bool operator==(Tensor const& o) const {
      check_ring(o);
      if (_terms.size() != o._terms.size()) {
        return false;
      }
      auto it = o._terms.begin();
      for (auto const& [k, c] : _terms) {
        if (!(k == it->first) || !(c == it->second)) {
          return false;
        }
        ++it;
      }
      return true;
    }

    std::string to_string() const {
      if (_terms.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [k, c] : _terms) {
        if (!first) {
          out += " + ";
        }
        first = false;
        if (!c.is_one()) {
          out += c.to_string() + " ";
        }
        for (std::size_t i = 0; i < N; ++i) {
          if (i > 0) {
            out += " (x) ";
          }
          out += fulcrum::to_string(k[i], _rings[i]->alphabet);
        }
      }
      return out;
    }

   private:
    void check_ring(Tensor const& o) const {
      for (std::size_t i = 0; i < N; ++i) {
        if (_rings[i] != o._rings[i] && !(*_rings[i] == *o._rings[i])) {
          throw ring_mismatch("tensors over different rings");
        }
      }
    }

    void add_pure(std::array<NcPoly, N> const& ps,
                  Scalar const&                c,
                  std::size_t                  i,
                  key_type                     k) {
      if (i == N) {
        add_term(k, c);
        return;
      }
      for (auto const& [w, a] : ps[i].terms()) {
        k[i] = w;
        add_pure(ps, c * a, i + 1, k);
      }
    }

    RingTuple<N> _rings;
    term_map     _terms;
  };

  using TensorPoly = Tensor<2>;

  inline TensorPoly tensor_mul(TensorPoly const& s, TensorPoly const& t) {
    return s * t;
  }

  /// Outer product a ⊗ b of tensors of arities A and B.
  template <std::size_t A, std::size_t B>
  Tensor<A + B> outer(Tensor<A> const& a, Tensor<B> const& b) {
    RingTuple<A + B> rings;
    for (std::size_t i = 0; i < A; ++i) {
      rings[i] = a.ring(i);
    }
    for (std::size_t i = 0; i < B; ++i) {
      rings[A + i] = b.ring(i);
    }
    Tensor<A + B> r(rings);
    for (auto const& [ka, ca] : a.terms()) {
      for (auto const& [kb, cb] : b.terms()) {
        WordTuple<A + B> k;
        for (std::size_t i = 0; i < A; ++i) {
          k[i] = ka[i];
        }
        for (std::size_t i = 0; i < B; ++i) {
          k[A + i] = kb[i];
        }
        r.add_term(k, ca * cb);
      }
    }
    return r;
  }

  /// Embed a polynomial as a 1-fold tensor.
  inline Tensor<1> as_tensor(NcPoly const& p) {
    return Tensor<1>::pure({p});
  }

}  // namespace fulcrum

#endif  // FULCRUM_TENSOR_HPP_
