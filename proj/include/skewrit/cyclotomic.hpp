#ifndef SKEWRIT_CYCLOTOMIC_HPP
#define SKEWRIT_CYCLOTOMIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewrit/poly.hpp"
#include "skewrit/rational.hpp"

namespace skewrit {

inline bool is_power_of_two(uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Element of Q(omega) with omega a primitive 2^L-th root of unity, represented
// modulo the minimal polynomial omega^(l/2) + 1. Coefficient vector has length
// exactly l/2 (coefficients of 1, omega, ..., omega^(l/2 - 1)).
class CycloElem {
public:
    CycloElem(uint64_t order, std::vector<Rat> coeffs) : order_(order), c_(std::move(coeffs)) {
        check_order(order_);
        if (c_.size() != order_ / 2)
            throw std::invalid_argument("cyclotomic coefficient vector has wrong length");
    }

    static CycloElem zero(uint64_t order) {
        check_order(order);
        return CycloElem(order, std::vector<Rat>(order / 2, Rat(0)));
    }
    static CycloElem from_rat(uint64_t order, const Rat& a) {
        CycloElem e = zero(order);
        e.c_[0] = a;
        return e;
    }
    static CycloElem one(uint64_t order) { return from_rat(order, Rat(1)); }
    // omega^k, k may be any integer
    static CycloElem omega_pow(uint64_t order, int64_t k) {
        CycloElem e = zero(order);
        int64_t l = static_cast<int64_t>(order);
        int64_t j = ((k % l) + l) % l;
        int64_t h = l / 2;
        if (j < h) e.c_[static_cast<size_t>(j)] = Rat(1);
        else e.c_[static_cast<size_t>(j - h)] = Rat(-1);
        return e;
    }

    // Folds a raw coefficient vector of length <= order via omega^(l/2) = -1.
    static CycloElem reduce(uint64_t order, const std::vector<Rat>& raw) {
        check_order(order);
        if (raw.size() > order)
            throw std::invalid_argument("raw vector longer than the order");
        CycloElem e = zero(order);
        size_t h = order / 2;
        for (size_t j = 0; j < raw.size(); ++j) {
            if (j < h) e.c_[j] += raw[j];
            else e.c_[j - h] -= raw[j];
        }
        return e;
    }

    uint64_t order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t j = 1; j < c_.size(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }
    Rat rational_part() const { return c_[0]; }

    CycloElem operator-() const {
        std::vector<Rat> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(-a);
        return CycloElem(order_, std::move(r));
    }

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
        a.check_same(b);
        std::vector<Rat> r(a.c_.size());
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
        return CycloElem(a.order_, std::move(r));
    }
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b) { return a + (-b); }

    // negacyclic convolution modulo omega^(l/2) + 1
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        a.check_same(b);
        size_t h = a.c_.size();
        std::vector<Rat> r(h, Rat(0));
        for (size_t i = 0; i < h; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < h; ++j) {
                if (b.c_[j].is_zero()) continue;
                Rat p = a.c_[i] * b.c_[j];
                size_t k = i + j;
                if (k < h) r[k] += p;
                else r[k - h] -= p;
            }
        }
        return CycloElem(a.order_, std::move(r));
    }

    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
    CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }
    CycloElem& operator*=(const CycloElem& o) { return *this = *this * o; }

    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    // Inverse via extended Euclid in Q[X] against X^(l/2) + 1 (irreducible).
    CycloElem inverse() const {
        if (is_zero()) throw DivisionByZero();
        size_t h = c_.size();
        std::vector<Rat> mod(h + 1, Rat(0));
        mod[0] = Rat(1);
        mod[h] = Rat(1);
        Poly<Rat> m{std::vector<Rat>(mod)};
        Poly<Rat> a{std::vector<Rat>(c_)};
        // extended Euclid: s*a + t*m = gcd
        Poly<Rat> r0 = m, r1 = a;
        Poly<Rat> t0, t1 = Poly<Rat>::constant(Rat(1));
        while (!r1.zero()) {
            Poly<Rat> q, r;
            Poly<Rat>::divmod(r0, r1, q, r);
            Poly<Rat> t2 = t0 - q * t1;
            r0 = std::move(r1);
            r1 = std::move(r);
            t0 = std::move(t1);
            t1 = std::move(t2);
        }
        // r0 = gcd = nonzero constant (minimal polynomial is irreducible)
        if (r0.degree() != 0) throw std::logic_error("cyclotomic inverse: gcd not constant");
        Poly<Rat> s = t0.scaled(inv(r0.coeff(0)));
        std::vector<Rat> out(h, Rat(0));
        for (int k = 0; k <= s.degree(); ++k) out[static_cast<size_t>(k)] = s.coeff(k);
        return CycloElem(order_, std::move(out));
    }

    // Substitutes omega -> t formally (no minimal-polynomial identities used).
    Rat eval_omega(const Rat& t) const {
        Rat acc(0), p(1);
        for (const auto& a : c_) {
            acc += a * p;
            p *= t;
        }
        return acc;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + "]";
    }

private:
    static void check_order(uint64_t order) {
        if (order < 2 || !is_power_of_two(order))
            throw std::invalid_argument("cyclotomic order must be a power of two >= 2");
    }
    void check_same(const CycloElem& o) const {
        if (order_ != o.order_) throw FieldMismatch("cyclotomic order mismatch");
    }

    uint64_t order_;
    std::vector<Rat> c_;
};

inline CycloElem zero_like(const CycloElem& a) { return CycloElem::zero(a.order()); }
inline CycloElem one_like(const CycloElem& a) { return CycloElem::one(a.order()); }
inline bool is_zero(const CycloElem& a) { return a.is_zero(); }
inline CycloElem inv(const CycloElem& a) { return a.inverse(); }
inline CycloElem from_rat(const CycloElem& like, const Rat& c) {
    return CycloElem::from_rat(like.order(), c);
}
inline std::string to_text(const CycloElem& a) { return a.str(); }

}  // namespace skewrit

#endif
