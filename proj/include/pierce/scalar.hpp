#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pierce {

/// Usage errors: bad arguments, dimension mismatches, malformed input.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural validation failures (associativity, module axioms, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation refused because it would exceed a configured cap.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ground field: the rationals (p == 0) or the prime field F_p.
struct FieldSpec {
    long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
    std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

/// An exact field element: a rational in lowest terms, or a residue in F_p.
///
/// Elements carry their field tag; mixing fields throws. Rational values are
/// kept canonical (gcd 1, positive denominator) by GMP.
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(const FieldSpec& f) : p_(f.p) {}
    Scalar(long num, const FieldSpec& f) : p_(f.p) {
        if (p_ == 0)
            q_ = num;
        else
            r_ = modp(num);
    }
    static Scalar rational(const mpq_class& q) {
        Scalar s;
        s.q_ = q;
        s.q_.canonicalize();
        return s;
    }
    static Scalar residue(long r, long p) {
        Scalar s;
        s.p_ = p;
        s.r_ = s.modp(r);
        return s;
    }
    static Scalar zero(const FieldSpec& f) { return Scalar(0, f); }
    static Scalar one(const FieldSpec& f) { return Scalar(1, f); }

    /// Parse "a/b" or "a" into the given field. Over F_p the denominator
    /// must be invertible.
    static Scalar parse(const std::string& text, const FieldSpec& f);

    FieldSpec field() const { return FieldSpec{p_}; }
    bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        check(o);
        return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Canonical text form: "a/b" (b > 1) or "a" over Q; "r" over F_p.
    std::string str() const;

    const mpq_class& rational_value() const { return q_; }
    long residue_value() const { return r_; }

  private:
    void check(const Scalar& o) const {
        if (p_ != o.p_) throw UsageError("scalar field mismatch");
    }
    long modp(long v) const {
        long m = v % p_;
        return m < 0 ? m + p_ : m;
    }

    mpq_class q_;  // value when p_ == 0
    long r_ = 0;   // canonical residue in [0,p) when p_ > 0
    long p_ = 0;   // 0 = rationals
};

/// Modular inverse of a mod p (p prime, a not divisible by p).
long mod_inverse(long a, long p);

}  // namespace pierce
