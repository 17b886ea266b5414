#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>

#include "sl3web/diagram.hpp"
#include "sl3web/laurent.hpp"

namespace sl3web {

/// Integer Laurent polynomial in the two skein variables a and z.
class HomflyPoly {
public:
    HomflyPoly() = default;
    static HomflyPoly monomial(std::int64_t c, int a_exp, int z_exp) {
        HomflyPoly p;
        if (c != 0) p.terms_[{a_exp, z_exp}] = c;
        return p;
    }
    static HomflyPoly one() { return monomial(1, 0, 0); }

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int a_exp, int z_exp) const {
        auto it = terms_.find({a_exp, z_exp});
        return it == terms_.end() ? 0 : it->second;
    }

    HomflyPoly& operator+=(const HomflyPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    friend HomflyPoly operator+(HomflyPoly x, const HomflyPoly& y) { return x += y; }
    friend HomflyPoly operator-(const HomflyPoly& x) {
        HomflyPoly r;
        for (const auto& [k, c] : x.terms_) r.terms_[k] = checked_mul(c, -1);
        return r;
    }
    friend HomflyPoly operator-(HomflyPoly x, const HomflyPoly& y) { return x += -y; }
    friend HomflyPoly operator*(const HomflyPoly& x, const HomflyPoly& y) {
        HomflyPoly r;
        for (const auto& [ka, ca] : x.terms_)
            for (const auto& [kb, cb] : y.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, checked_mul(ca, cb));
        return r;
    }
    HomflyPoly& operator*=(const HomflyPoly& o) { return *this = *this * o; }
    HomflyPoly pow(unsigned k) const {
        HomflyPoly r = one();
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }
    bool operator==(const HomflyPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const HomflyPoly& o) const { return terms_ != o.terms_; }

    /// a -> a^-1, z -> -z; the standard mirror-image symmetry.
    HomflyPoly mirror() const {
        HomflyPoly r;
        for (const auto& [k, c] : terms_)
            r.terms_[{-k.first, k.second}] = (k.second % 2 == 0) ? c : checked_mul(c, -1);
        return r;
    }

    const std::map<std::pair<int, int>, std::int64_t>& terms() const { return terms_; }
    std::string str(const std::string& a_name = "a", const std::string& z_name = "z") const;

private:
    void add_term(int ae, int ze, std::int64_t c) {
        auto key = std::make_pair(ae, ze);
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (c != 0) terms_[key] = c;
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }
    std::map<std::pair<int, int>, std::int64_t> terms_;
};

struct HomflyOptions {
    int crossing_cap = 20;
};

/// HOMFLY polynomial under the skein relation
///   a^-1 P(L+) - a P(L-) = z P(L0),  P(unknot) = 1,
/// computed by switching toward descending diagrams and smoothing, with
/// memoization on a canonical diagram encoding.
HomflyPoly homfly(const LinkDiagram& d, const HomflyOptions& opts = {});

/// Substitute a = q^-3, z = q - q^-1 and multiply by [3]. Negative powers of
/// z are cleared by exact division, which must leave no remainder.
LaurentPoly specialize_sl3(const HomflyPoly& p);

/// Parser for HOMFLY polynomial expressions as they appear in knot-table
/// exports: integer arithmetic over two variables with +, -, *, ^ and
/// parentheses. Variable names are configurable.
HomflyPoly parse_homfly_expression(const std::string& text,
                                   const std::string& a_name = "v",
                                   const std::string& z_name = "z");

}  // namespace sl3web
