#ifndef SKEWRIT_POLY_HPP
#define SKEWRIT_POLY_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "skewrit/rational.hpp"

namespace skewrit {

// Dense univariate polynomial over a field scalar F. Coefficients are stored
// by ascending degree with trailing zeros trimmed; the zero polynomial has an
// empty coefficient vector.
template <class F>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const F& a) {
        if (is_zero(a)) return Poly();
        return Poly(std::vector<F>{a});
    }
    // like carries the field descriptor (e.g. cyclotomic order)
    static Poly variable(const F& like) {
        return Poly(std::vector<F>{zero_like(like), one_like(like)});
    }

    bool zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<F>& coeffs() const { return c_; }

    F coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) {
            if (c_.empty()) throw std::logic_error("coeff of zero polynomial needs exemplar");
            return zero_like(c_.front());
        }
        return c_[static_cast<size_t>(k)];
    }

    const F& lead() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    Poly operator-() const {
        std::vector<F> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(-a);
        return Poly(std::move(r));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> r;
        size_t n = std::max(a.c_.size(), b.c_.size());
        r.reserve(n);
        for (size_t i = 0; i < n; ++i) {
            if (i < a.c_.size() && i < b.c_.size()) r.push_back(a.c_[i] + b.c_[i]);
            else if (i < a.c_.size()) r.push_back(a.c_[i]);
            else r.push_back(b.c_[i]);
        }
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.zero() || b.zero()) return Poly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly scaled(const F& s) const {
        if (is_zero(s)) return Poly();
        std::vector<F> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(a * s);
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    F eval(const F& x) const {
        if (c_.empty()) return zero_like(x);
        F acc = c_.back();
        for (size_t i = c_.size(); i-- > 1;) acc = acc * x + c_[i - 1];
        return acc;
    }

    template <class Fn>
    auto map(Fn&& fn) const -> Poly<std::decay_t<decltype(fn(std::declval<const F&>()))>> {
        using G = std::decay_t<decltype(fn(std::declval<const F&>()))>;
        std::vector<G> r;
        r.reserve(c_.size());
        for (const auto& a : c_) r.push_back(fn(a));
        return Poly<G>(std::move(r));
    }

    // Division with remainder; divisor must be nonzero.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
        if (b.zero()) throw DivisionByZero();
        F lead_inv = inv(b.c_.back());
        std::vector<F> rem = a.c_;
        std::vector<F> quo;
        int db = b.degree();
        int da = static_cast<int>(rem.size()) - 1;
        if (da < db) {
            q = Poly();
            r = a;
            return;
        }
        quo.assign(static_cast<size_t>(da - db + 1), zero_like(b.c_.back()));
        for (int k = da; k >= db; --k) {
            F c = rem[static_cast<size_t>(k)] * lead_inv;
            if (!is_zero(c)) {
                quo[static_cast<size_t>(k - db)] = c;
                for (int j = 0; j <= db; ++j)
                    rem[static_cast<size_t>(k - db + j)] -= c * b.c_[static_cast<size_t>(j)];
            }
        }
        rem.erase(rem.begin() + (db >= 0 ? db : 0), rem.end());
        q = Poly(std::move(quo));
        r = Poly(std::move(rem));
    }

    Poly monic() const {
        if (zero()) return *this;
        return scaled(inv(c_.back()));
    }

    // Monic gcd by the Euclidean algorithm; remainders are re-normalized each
    // round to keep coefficient sizes in check.
    static Poly gcd(Poly a, Poly b) {
        while (!b.zero()) {
            b = b.monic();
            Poly q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<F> c_;
};

}  // namespace skewrit

#endif
