#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conetop {

// Exact arithmetic everywhere: normal-form computations must not overflow.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;

// Invalid caller input (shape mismatch, bad parameter, malformed set description).
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operation exists but is refused for this variant/shape by contract.
struct contract_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A theorem the implementation relies on failed to hold; always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline Int int_of(long v) { return Int(v); }

inline long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw internal_error("integer exceeds machine range: " + v.get_str());
  return v.get_si();
}

// Mathematical floor division and the matching remainder (sign of divisor ignored).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline std::string vec_str(const IntVec& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

}  // namespace conetop
