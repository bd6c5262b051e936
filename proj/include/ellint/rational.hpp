#ifndef ELLINT_RATIONAL_HPP
#define ELLINT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

// Reduced fractions over arbitrary-precision integers, for the exact
// KK' moment recurrence.  cpp_int does the heavy lifting; this wrapper
// just pins the gcd(num,den)=1, den>0 invariant.

namespace ellint::rational {

using BigInt = boost::multiprecision::cpp_int;

class BigRational {
  public:
    BigRational() : num_(0), den_(1) {}
    BigRational(long n) : num_(n), den_(1) {}
    BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    friend BigRational operator+(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator-(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend BigRational operator*(const BigRational& a, const BigRational& b) {
        return BigRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend BigRational operator/(const BigRational& a, const BigRational& b) {
        if (b.num_ == 0) throw std::domain_error("BigRational: division by zero");
        return BigRational(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const BigRational& a, const BigRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const BigRational& a, const BigRational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const { return num_.str() + "/" + den_.str(); }

  private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("BigRational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

} // namespace ellint::rational

#endif
