#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affsg {

// Exact scalars. Rationals are always canonical: positive denominator,
// gcd(num, den) = 1 (mpq_class maintains this through canonicalize()).
using Int = mpz_class;
using Rat = mpq_class;

using VecInt = std::vector<Int>;
using VecRat = std::vector<Rat>;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct dimension_error : error {
  using error::error;
};
struct precondition_error : error {
  using error::error;
};
struct parse_error : error {
  using error::error;
};

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division, used throughout the normal-form reductions so that
// remainders land in [0, |b|).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int rat_floor(const Rat& r) {
  return fdiv(r.get_num(), r.get_den());
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p" or "p/q"; q > 0 after canonicalization.
Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

// --- small vector helpers (row vectors over Int/Rat) ---

inline bool is_zero(const VecInt& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline VecInt vec_add(const VecInt& a, const VecInt& b) {
  VecInt r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecInt vec_sub(const VecInt& a, const VecInt& b) {
  VecInt r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline VecInt vec_scale(const Int& c, const VecInt& a) {
  VecInt r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline VecInt vec_neg(const VecInt& a) {
  return vec_scale(-1, a);
}

inline Rat dot(const VecRat& a, const VecInt& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline VecInt concat(const VecInt& a, const VecInt& b) {
  VecInt r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

inline VecInt zero_vec(int n) {
  return VecInt(static_cast<size_t>(n), Int(0));
}

// gcd of all entries (0 for the zero vector).
inline Int content(const VecInt& v) {
  Int g = 0;
  for (const auto& x : v) g = int_gcd(g, x);
  return g;
}

inline bool lex_less(const VecInt& a, const VecInt& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

std::string vec_to_string(const VecInt& v);

}  // namespace affsg
