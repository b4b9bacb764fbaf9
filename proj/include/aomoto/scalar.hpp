#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace aomoto {

/// Error kinds surfaced to the CLI as precondition failures (exit code 1).
enum class ErrorKind {
  MalformedScalar,
  ZeroNormal,
  DuplicateLine,
  MixedField,
  BadLineName,
  InvalidFlag,
  NotASubmodule,
  NonUnitAlpha,
  BadModulus,
  NotACocycle,
  NotAPartition,
  BadInput,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// Coordinate field descriptor: the rationals (d == 0) or the real quadratic
/// field Q(sqrt(d)) for a fixed squarefree d > 0.
struct Field {
  long d = 0;
  bool quadratic() const { return d != 0; }
  bool operator==(const Field&) const = default;
};

/// Element p + q*sqrt(d) of Q(sqrt(d)); d == 0 encodes a plain rational
/// (q must then be zero).  All arithmetic is exact.
class Scalar {
public:
  Scalar() : p_(0), q_(0), d_(0) {}
  Scalar(long v) : p_(v), q_(0), d_(0) {}           // NOLINT(runtime/explicit)
  Scalar(mpq_class v) : p_(std::move(v)), q_(0), d_(0) {}
  Scalar(mpq_class p, mpq_class q, long d)
      : p_(std::move(p)), q_(std::move(q)), d_(d) {
    if (q_ == 0) d_ = 0;
  }

  const mpq_class& rat() const { return p_; }
  const mpq_class& quad() const { return q_; }
  long d() const { return d_; }
  bool is_rational() const { return q_ == 0; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }

  /// Exact sign of the real number p + q*sqrt(d).
  int sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // p and q have opposite signs: compare p^2 against q^2 d.
    mpq_class lhs = p_ * p_;
    mpq_class rhs = q_ * q_ * d_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // cannot happen for squarefree d, kept for safety
    return c > 0 ? sp : sq;
  }

  Scalar operator-() const { return Scalar(-p_, -q_, d_); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    long d = join(a, b);
    return Scalar(a.p_ + b.p_, a.q_ + b.q_, d);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    long d = join(a, b);
    return Scalar(a.p_ - b.p_, a.q_ - b.q_, d);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    long d = join(a, b);
    return Scalar(a.p_ * b.p_ + mpq_class(d) * a.q_ * b.q_,
                  a.p_ * b.q_ + a.q_ * b.p_, d);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
  }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw Error(ErrorKind::BadInput, "division by zero");
    if (is_rational()) return Scalar(mpq_class(1) / p_);
    mpq_class norm = p_ * p_ - q_ * q_ * d_;  // nonzero: sqrt(d) irrational
    return Scalar(p_ / norm, -q_ / norm, d_);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_);
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  /// Deterministic total order usable as a map key (value order; ties cannot
  /// occur between distinct representations over a fixed field).
  friend int key_cmp(const Scalar& a, const Scalar& b) {
    return (a - b).sign();
  }

  std::string str() const;

  /// Parses "p/q", "p", "p/q+r/s w", "r/s w", "-w", ... ; `field` fixes d.
  static Scalar parse(const std::string& text, const Field& field);

private:
  static long join(const Scalar& a, const Scalar& b) {
    if (a.q_ == 0) return b.d_;
    if (b.q_ == 0) return a.d_;
    if (a.d_ != b.d_)
      throw Error(ErrorKind::MixedField, "mixing different quadratic fields");
    return a.d_;
  }

  mpq_class p_, q_;
  long d_;
};

struct Point {
  Scalar x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

/// Lexicographic exact comparison, for use as a map key.
struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    int c = key_cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return key_cmp(a.y, b.y) < 0;
  }
};

}  // namespace aomoto
