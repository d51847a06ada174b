#include "pierce/scalar.hpp"

namespace pierce {

long mod_inverse(long a, long p) {
    long r0 = p, r1 = ((a % p) + p) % p;
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        long t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw UsageError("element not invertible mod " + std::to_string(p));
    return ((t0 % p) + p) % p;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw UsageError("cannot parse scalar '" + text + "'");
    q.canonicalize();
    if (f.is_rational()) return Scalar::rational(q);
    mpz_class num = q.get_num(), den = q.get_den();
    mpz_class pz(f.p);
    mpz_class dmod = den % pz;
    if (dmod == 0)
        throw UsageError("denominator of '" + text + "' is not invertible in " + f.name());
    long n = mpz_class(num % pz).get_si();
    long d = dmod.get_si();
    long r = ((n % f.p) + f.p) % f.p;
    return Scalar::residue(r * mod_inverse(d, f.p) % f.p, f.p);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (p_ == 0)
        s.q_ += o.q_;
    else
        s.r_ = (r_ + o.r_) % p_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (p_ == 0)
        s.q_ -= o.q_;
    else
        s.r_ = ((r_ - o.r_) % p_ + p_) % p_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    Scalar s(*this);
    if (p_ == 0)
        s.q_ *= o.q_;
    else
        s.r_ = (r_ * o.r_) % p_;
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (p_ == 0)
        s.q_ = -q_;
    else
        s.r_ = (p_ - r_) % p_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw UsageError("division by zero");
    Scalar s(*this);
    if (p_ == 0)
        s.q_ = 1 / q_;
    else
        s.r_ = mod_inverse(r_, p_);
    return s;
}

std::string Scalar::str() const {
    if (p_ != 0) return std::to_string(r_);
    return q_.get_str();
}

}  // namespace pierce
