#ifndef SKEWRIT_RATIONAL_HPP
#define SKEWRIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skewrit {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct FieldMismatch : std::invalid_argument {
    explicit FieldMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1, den >= 1.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long n, long d) {
        if (d == 0) throw DivisionByZero();
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    // Accepts "p" or "p/q" with q > 0.
    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
        if (slash != std::string::npos && q.get_den() == 0) throw DivisionByZero();
        q.canonicalize();
        if (q.get_den() < 0) throw std::invalid_argument("negative denominator: " + s);
        return Rat(q);
    }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

private:
    mpq_class v_;
};

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& a) { return a.is_zero(); }
inline Rat inv(const Rat& a) {
    if (a.is_zero()) throw DivisionByZero();
    return Rat(1) / a;
}
inline Rat from_rat(const Rat&, const Rat& c) { return c; }
inline std::string to_text(const Rat& a) { return a.str(); }

}  // namespace skewrit

#endif
