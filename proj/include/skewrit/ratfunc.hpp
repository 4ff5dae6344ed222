#ifndef SKEWRIT_RATFUNC_HPP
#define SKEWRIT_RATFUNC_HPP

#include <utility>

#include "skewrit/poly.hpp"

namespace skewrit {

// Fraction field of F[x]: num/den reduced (monic gcd 1), den monic and nonzero.
template <class F>
class RatFunc {
public:
    RatFunc() = default;  // zero with an empty denominator exemplar is invalid; use of
                          // default-constructed values is restricted to assignment targets.

    RatFunc(Poly<F> num, Poly<F> den) { assign(std::move(num), std::move(den)); }

    static RatFunc from_poly(Poly<F> p, const F& like) {
        return RatFunc(std::move(p), Poly<F>::constant(one_like(like)));
    }
    static RatFunc constant(const F& a) {
        return RatFunc(Poly<F>::constant(a), Poly<F>::constant(one_like(a)));
    }
    static RatFunc variable(const F& like) {
        return RatFunc(Poly<F>::variable(like), Poly<F>::constant(one_like(like)));
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    bool zero() const { return num_.zero(); }

    F like() const { return zero_like(den_.lead()); }

    RatFunc operator-() const { return RatFunc(-num_, den_, no_reduce_tag{}); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    RatFunc inverse() const {
        if (zero()) throw DivisionByZero();
        return RatFunc(den_, num_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    struct no_reduce_tag {};
    RatFunc(Poly<F> num, Poly<F> den, no_reduce_tag) : num_(std::move(num)), den_(std::move(den)) {}

    void assign(Poly<F> num, Poly<F> den) {
        if (den.zero()) throw DivisionByZero();
        if (num.zero()) {
            num_ = Poly<F>();
            den_ = Poly<F>::constant(one_like(den.lead()));
            return;
        }
        // a degree-0 side can share no nontrivial factor
        if (num.degree() > 0 && den.degree() > 0) {
            Poly<F> g = Poly<F>::gcd(num, den);
            if (g.degree() > 0) {
                Poly<F> q, r;
                Poly<F>::divmod(num, g, q, r);
                num = std::move(q);
                Poly<F>::divmod(den, g, q, r);
                den = std::move(q);
            }
        }
        F lead_inv = inv(den.lead());
        num_ = num.scaled(lead_inv);
        den_ = den.scaled(lead_inv);
    }

    Poly<F> num_;
    Poly<F> den_;
};

template <class F>
RatFunc<F> zero_like(const RatFunc<F>& a) {
    return RatFunc<F>(Poly<F>(), Poly<F>::constant(one_like(a.den().lead())));
}
template <class F>
RatFunc<F> one_like(const RatFunc<F>& a) {
    return RatFunc<F>::constant(one_like(a.den().lead()));
}
template <class F>
bool is_zero(const RatFunc<F>& a) {
    return a.zero();
}
template <class F>
RatFunc<F> inv(const RatFunc<F>& a) {
    return a.inverse();
}
template <class F>
RatFunc<F> from_rat(const RatFunc<F>& like, const Rat& c) {
    return RatFunc<F>::constant(from_rat(like.den().lead(), c));
}
template <class F>
std::string to_text(const RatFunc<F>& a) {
    std::string s = "(";
    for (int k = 0; k <= a.num().degree(); ++k) {
        if (k) s += " + ";
        s += to_text(a.num().coeff(k)) + "*X^" + std::to_string(k);
    }
    s += ")/(";
    for (int k = 0; k <= a.den().degree(); ++k) {
        if (k) s += " + ";
        s += to_text(a.den().coeff(k)) + "*X^" + std::to_string(k);
    }
    return s + ")";
}

}  // namespace skewrit

#endif
