#ifndef SKEWRIT_COMMPOLY_HPP
#define SKEWRIT_COMMPOLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "skewrit/rational.hpp"

namespace skewrit {

// Sparse multivariate polynomial over F in commuting variables identified by
// integer ids. Monomials are sorted (id, exponent) lists. Every value carries
// a field exemplar so the zero polynomial knows its coefficient field.
template <class F>
class CommPoly {
public:
    using Monomial = std::vector<std::pair<uint32_t, uint32_t>>;

    explicit CommPoly(F like) : like_(std::move(like)) {}

    static CommPoly constant(const F& v) {
        CommPoly p(zero_like(v));
        if (!is_zero(v)) p.terms_.emplace(Monomial{}, v);
        return p;
    }
    static CommPoly variable(uint32_t id, const F& like) {
        CommPoly p(zero_like(like));
        p.terms_.emplace(Monomial{{id, 1}}, one_like(like));
        return p;
    }

    const std::map<Monomial, F>& terms() const { return terms_; }
    const F& like() const { return like_; }
    bool is_zero_poly() const { return terms_.empty(); }

    size_t total_degree() const {
        size_t d = 0;
        for (const auto& [m, c] : terms_) {
            size_t t = 0;
            for (auto [id, e] : m) t += e;
            d = std::max(d, t);
        }
        return d;
    }

    CommPoly operator-() const {
        CommPoly r(like_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend CommPoly operator+(const CommPoly& a, const CommPoly& b) {
        CommPoly r = a;
        for (const auto& [m, c] : b.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                r.terms_.emplace(m, c);
            } else {
                it->second += c;
                if (is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }
    friend CommPoly operator-(const CommPoly& a, const CommPoly& b) { return a + (-b); }
    CommPoly& operator+=(const CommPoly& o) { return *this = *this + o; }
    CommPoly& operator-=(const CommPoly& o) { return *this = *this - o; }

    friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
        CommPoly r(a.like_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                F c = ca * cb;
                if (is_zero(c)) continue;
                Monomial m = merge(ma, mb);
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(std::move(m), c);
                } else {
                    it->second += c;
                    if (is_zero(it->second)) r.terms_.erase(it);
                }
            }
        return r;
    }

    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

    F eval(const std::map<uint32_t, F>& assignment) const {
        F acc = zero_like(like_);
        for (const auto& [m, c] : terms_) {
            F t = c;
            for (auto [id, e] : m) {
                auto it = assignment.find(id);
                if (it == assignment.end()) throw std::invalid_argument("unassigned variable");
                for (uint32_t k = 0; k < e; ++k) t = t * it->second;
            }
            acc += t;
        }
        return acc;
    }

private:
    static Monomial merge(const Monomial& a, const Monomial& b) {
        Monomial m;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) m.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first) m.push_back(b[j++]);
            else {
                m.push_back({a[i].first, a[i].second + b[j].second});
                ++i;
                ++j;
            }
        }
        return m;
    }

    std::map<Monomial, F> terms_;
    F like_;
};

template <class F>
CommPoly<F> zero_like(const CommPoly<F>& a) {
    return CommPoly<F>(a.like());
}
template <class F>
CommPoly<F> one_like(const CommPoly<F>& a) {
    return CommPoly<F>::constant(one_like(a.like()));
}
template <class F>
bool is_zero(const CommPoly<F>& a) {
    return a.is_zero_poly();
}
template <class F>
CommPoly<F> from_rat(const CommPoly<F>& like, const Rat& c) {
    return CommPoly<F>::constant(from_rat(like.like(), c));
}

}  // namespace skewrit

#endif
