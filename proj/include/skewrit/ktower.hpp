#ifndef SKEWRIT_KTOWER_HPP
#define SKEWRIT_KTOWER_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrit/cyclotomic.hpp"
#include "skewrit/ratfunc.hpp"

namespace skewrit {

struct DenominatorVanishes : std::domain_error {
    DenominatorVanishes() : std::domain_error("denominator vanishes at the substitution") {}
};

// The automorphism sigma of K = Q(omega, z), stored as the exponent kappa with
// sigma(omega) = omega^(2^kappa + 1) and sigma fixing Q(z) pointwise.
struct Sigma {
    uint64_t order;
    uint32_t kappa;

    Sigma(uint64_t order_, uint32_t kappa_) : order(order_), kappa(kappa_) {
        if (!is_power_of_two(order) || order < 2)
            throw std::invalid_argument("sigma: order must be a power of two >= 2");
        if (kappa == 0) throw std::invalid_argument("sigma: kappa must be positive");
    }

    // (2^kappa + 1)^times mod order
    uint64_t exponent(uint64_t times) const {
        uint64_t two_k = 1;
        for (uint32_t i = 0; i < kappa; ++i) two_k = (two_k * 2) % order;
        uint64_t base = (two_k + 1) % order;
        uint64_t r = 1 % order;
        for (uint64_t i = 0; i < times; ++i) r = (r * base) % order;
        return r;
    }

    CycloElem apply(const CycloElem& e, uint64_t times = 1) const {
        if (e.order() != order) throw FieldMismatch("sigma/element order mismatch");
        if (times == 0) return e;
        uint64_t ex = exponent(times);
        CycloElem out = CycloElem::zero(order);
        const auto& c = e.coeffs();
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j].is_zero()) continue;
            uint64_t img = (j * ex) % order;
            std::vector<Rat> tc(CycloElem::omega_pow(order, static_cast<int64_t>(img)).coeffs());
            for (auto& t : tc) t = t * c[j];
            out += CycloElem(order, std::move(tc));
        }
        return out;
    }
};

// Scalar of the tower K = Q(omega)(z): a reduced rational function in z with
// cyclotomic coefficients of a fixed power-of-two order.
class KElem {
public:
    KElem(uint64_t order, RatFunc<CycloElem> f) : order_(order), f_(std::move(f)) {}

    static KElem zero(uint64_t order) {
        return KElem(order, RatFunc<CycloElem>::constant(CycloElem::zero(order)));
    }
    static KElem one(uint64_t order) {
        return KElem(order, RatFunc<CycloElem>::constant(CycloElem::one(order)));
    }
    static KElem from_rational(uint64_t order, const Rat& a) {
        return KElem(order, RatFunc<CycloElem>::constant(CycloElem::from_rat(order, a)));
    }
    static KElem from_cyclo(const CycloElem& a) {
        return KElem(a.order(), RatFunc<CycloElem>::constant(a));
    }
    static KElem z(uint64_t order) {
        return KElem(order, RatFunc<CycloElem>::variable(CycloElem::zero(order)));
    }
    static KElem omega(uint64_t order) { return from_cyclo(CycloElem::omega_pow(order, 1)); }
    static KElem omega_pow(uint64_t order, int64_t k) {
        return from_cyclo(CycloElem::omega_pow(order, k));
    }

    uint64_t order() const { return order_; }
    const RatFunc<CycloElem>& f() const { return f_; }
    const Poly<CycloElem>& num() const { return f_.num(); }
    const Poly<CycloElem>& den() const { return f_.den(); }

    bool is_zero() const { return f_.zero(); }
    bool is_polynomial() const { return f_.den().degree() == 0; }
    // true when the element lies in the fixed field F = Q(z)
    bool in_base_field() const {
        for (int k = 0; k <= f_.num().degree(); ++k)
            if (!f_.num().coeff(k).is_rational()) return false;
        for (int k = 0; k <= f_.den().degree(); ++k)
            if (!f_.den().coeff(k).is_rational()) return false;
        return true;
    }

    KElem operator-() const { return KElem(order_, -f_); }
    friend KElem operator+(const KElem& a, const KElem& b) {
        a.check(b);
        return KElem(a.order_, a.f_ + b.f_);
    }
    friend KElem operator-(const KElem& a, const KElem& b) {
        a.check(b);
        return KElem(a.order_, a.f_ - b.f_);
    }
    friend KElem operator*(const KElem& a, const KElem& b) {
        a.check(b);
        return KElem(a.order_, a.f_ * b.f_);
    }
    KElem inverse() const { return KElem(order_, f_.inverse()); }
    friend KElem operator/(const KElem& a, const KElem& b) {
        a.check(b);
        return KElem(a.order_, a.f_ / b.f_);
    }
    KElem& operator+=(const KElem& o) { return *this = *this + o; }
    KElem& operator-=(const KElem& o) { return *this = *this - o; }
    KElem& operator*=(const KElem& o) { return *this = *this * o; }

    friend bool operator==(const KElem& a, const KElem& b) {
        return a.order_ == b.order_ && a.f_ == b.f_;
    }
    friend bool operator!=(const KElem& a, const KElem& b) { return !(a == b); }

    // Specializes z -> z0 over Q(omega); throws when the denominator vanishes.
    CycloElem at_z(const Rat& z0) const {
        CycloElem zc = CycloElem::from_rat(order_, z0);
        CycloElem d = f_.den().eval(zc);
        if (d.is_zero()) throw DenominatorVanishes();
        CycloElem n = f_.num().zero() ? CycloElem::zero(order_) : f_.num().eval(zc);
        return n * d.inverse();
    }

private:
    void check(const KElem& o) const {
        if (order_ != o.order_) throw FieldMismatch("KElem order mismatch");
    }
    uint64_t order_;
    RatFunc<CycloElem> f_;
};

// sigma applied `times` times; z is fixed, omega-monomials are permuted.
inline KElem sigma_apply(const KElem& e, const Sigma& s, uint64_t times = 1) {
    if (e.order() != s.order) throw FieldMismatch("sigma/element order mismatch");
    if (times == 0) return e;
    auto lift = [&](const CycloElem& c) { return s.apply(c, times); };
    return KElem(e.order(), RatFunc<CycloElem>(e.num().map(lift), e.den().map(lift)));
}

// Substitutes omega -> t1 and z -> t2 formally in num and den, then divides.
inline Rat eval_at_rationals(const KElem& e, const Rat& t1, const Rat& t2) {
    auto eval_poly = [&](const Poly<CycloElem>& p) {
        Rat acc(0), zp(1);
        for (int k = 0; k <= p.degree(); ++k) {
            acc += p.coeff(k).eval_omega(t1) * zp;
            zp *= t2;
        }
        return acc;
    };
    Rat d = eval_poly(e.den());
    if (d.is_zero()) throw DenominatorVanishes();
    if (e.num().zero()) return Rat(0);
    return eval_poly(e.num()) / d;
}

inline KElem zero_like(const KElem& a) { return KElem::zero(a.order()); }
inline KElem one_like(const KElem& a) { return KElem::one(a.order()); }
inline bool is_zero(const KElem& a) { return a.is_zero(); }
inline KElem inv(const KElem& a) { return a.inverse(); }
inline KElem from_rat(const KElem& like, const Rat& c) {
    return KElem::from_rational(like.order(), c);
}
inline std::string to_text(const KElem& a) { return to_text(a.f()); }

}  // namespace skewrit

#endif
