#ifndef LINDEF_SCALAR_HPP
#define LINDEF_SCALAR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace lindef {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; every constructor path below
// canonicalizes, so Rat values are always in canonical form.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rat_of: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n" or "n/d", optional leading minus.
inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_parse: bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Prime field element. The modulus lives in a thread-local context,
// NTL-style; all elements in one thread share it. Default 32003.
struct FpCtx {
  static std::uint64_t& modulus() {
    thread_local std::uint64_t p = 32003;
    return p;
  }
  static void set(std::uint64_t p) {
    if (p < 2) throw std::invalid_argument("FpCtx: modulus must be >= 2");
    modulus() = p;
  }
};

struct Fp {
  std::uint64_t v = 0;  // invariant: v < FpCtx::modulus()

  Fp() = default;
  Fp(long x) {
    std::uint64_t p = FpCtx::modulus();
    long r = x % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    v = static_cast<std::uint64_t>(r);
  }
  static Fp raw(std::uint64_t x) {
    Fp e;
    e.v = x % FpCtx::modulus();
    return e;
  }

  friend Fp operator+(Fp a, Fp b) {
    std::uint64_t p = FpCtx::modulus(), s = a.v + b.v;
    return raw(s >= p ? s - p : s);
  }
  friend Fp operator-(Fp a, Fp b) {
    std::uint64_t p = FpCtx::modulus();
    return raw(a.v >= b.v ? a.v - b.v : a.v + p - b.v);
  }
  friend Fp operator*(Fp a, Fp b) { return raw((a.v * b.v) % FpCtx::modulus()); }
  Fp operator-() const { return v == 0 ? *this : raw(FpCtx::modulus() - v); }

  Fp inv() const {
    // extended Euclid; modulus assumed prime
    if (v == 0) throw std::domain_error("Fp: division by zero");
    std::int64_t p = static_cast<std::int64_t>(FpCtx::modulus());
    std::int64_t a = static_cast<std::int64_t>(v), b = p, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (a != 1) throw std::domain_error("Fp: modulus not prime?");
    if (x0 < 0) x0 += p;
    return raw(static_cast<std::uint64_t>(x0));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
};

template <class K> inline bool is_zero(const K& x) { return x == K(0); }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(Fp x) { return x.v == 0; }

template <class K> struct FieldInfo;
template <> struct FieldInfo<Rat> {
  static constexpr bool exact_char0 = true;
  static std::string name() { return "QQ"; }
};
template <> struct FieldInfo<Fp> {
  static constexpr bool exact_char0 = false;
  static std::string name() { return "F" + std::to_string(FpCtx::modulus()); }
};

// Rational -> F_p. Fails (unlucky prime) if the denominator vanishes mod p.
inline bool fp_of_rat(const Rat& q, Fp& out) {
  std::uint64_t p = FpCtx::modulus();
  mpz_class num = q.get_num(), den = q.get_den();
  std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) return false;
  std::uint64_t n = mpz_fdiv_ui(num.get_mpz_t(), p);
  out = Fp::raw(n) / Fp::raw(d);
  return true;
}

inline std::string scalar_str(const Rat& q) { return rat_str(q); }
inline std::string scalar_str(Fp x) { return std::to_string(x.v); }

}  // namespace lindef

#endif
