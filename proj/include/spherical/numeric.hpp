#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic scalars and Eigen glue. All lattice/cone computations in
// this library run on mpz_class / mpq_class; no floating point anywhere.

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpq_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 80
  };
};

namespace internal {

// FullPivLU scores pivot candidates through this functor; the default wants
// abs() returning the scalar itself, which gmpxx expression templates break.
template <>
struct scalar_score_coeff_op<mpq_class> {
  struct result_type : mpq_class {
    result_type() : mpq_class() {}
    result_type(const mpq_class& v) : mpq_class(::abs(v)) {}
  };
  result_type operator()(const mpq_class& v) const { return result_type(v); }
};

}  // namespace internal
}  // namespace Eigen

namespace spherical {

using Int = mpz_class;
using Rat = mpq_class;

using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;

inline VecQ to_q(const VecZ& v) {
  VecQ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

inline MatQ to_q(const MatZ& m) {
  MatQ r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline bool is_integral(const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integral(v(i))) return false;
  return true;
}

// Requires is_integral(v).
inline VecZ to_z(const VecQ& v) {
  VecZ r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integral(v(i))) throw std::invalid_argument("to_z: non-integral entry");
    r(i) = v(i).get_num();
  }
  return r;
}

inline Rat dot_qz(const VecQ& a, const VecZ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_qz: size mismatch");
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * Rat(b(i));
  return s;
}

inline Int dot_zz(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot_zz: size mismatch");
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

inline bool is_zero(const VecZ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

inline bool is_zero(const VecQ& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

// Smallest positive rational multiple of v with coprime integer coordinates.
inline VecZ primitive(const VecQ& v) {
  if (is_zero(v)) throw std::invalid_argument("zero vector has no primitive representative");
  Int lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v(i).get_den().get_mpz_t());
  VecZ w(v.size());
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Rat q = v(i) * Rat(lcm_den);
    w(i) = q.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w(i).get_mpz_t());
  }
  for (Eigen::Index i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

inline VecZ primitive(const VecZ& v) { return primitive(to_q(v)); }

inline std::string show(const Int& n) { return n.get_str(); }

inline std::string show(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline std::string show(const VecZ& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += show(v(i));
  }
  return s + ")";
}

inline std::string show(const VecQ& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += show(v(i));
  }
  return s + ")";
}

// Parses "p", "-p" or "p/q". Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rat q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
}

inline Int parse_int(const std::string& s) {
  Rat q = parse_rat(s);
  if (!is_integral(q)) throw std::invalid_argument("expected integer, got '" + s + "'");
  return q.get_num();
}

}  // namespace spherical
