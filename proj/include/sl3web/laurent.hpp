#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace sl3web {

// Coefficient arithmetic traps on overflow instead of wrapping. State sums
// multiply long chains of quantum integers, so silent wraparound would
// corrupt results without any visible symptom.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer coefficient overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer coefficient overflow in multiplication");
    return r;
}

/// Exact integer Laurent polynomial in one variable q.
///
/// Stored as exponent -> coefficient with no zero coefficients. Values are
/// immutable in spirit: all operations return fresh polynomials, so they can
/// be shared freely across threads.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(std::int64_t coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exp] = coeff;
        return p;
    }

    static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
    static LaurentPoly one() { return constant(1); }

    /// Quantum integer [n]; only [2] = q + q^-1 and [3] = q^2 + 1 + q^-2 arise here.
    static LaurentPoly quantum_int(int n) {
        LaurentPoly p;
        switch (n) {
            case 2:
                p.terms_ = {{1, 1}, {-1, 1}};
                return p;
            case 3:
                p.terms_ = {{2, 1}, {0, 1}, {-2, 1}};
                return p;
            default:
                throw std::domain_error("quantum_int: only n = 2 and n = 3 are supported");
        }
    }

    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (terms_.empty()) throw std::domain_error("degree of the zero polynomial");
        return terms_.rbegin()->first;
    }

    int low_degree() const {
        if (terms_.empty()) throw std::domain_error("low degree of the zero polynomial");
        return terms_.begin()->first;
    }

    std::int64_t coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? 0 : it->second;
    }

    std::int64_t leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return terms_.rbegin()->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(ea + eb, checked_mul(ca, cb));
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = checked_mul(c, -1);
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return terms_ != o.terms_; }

    LaurentPoly pow(unsigned k) const {
        LaurentPoly r = one();
        for (unsigned i = 0; i < k; ++i) r *= *this;
        return r;
    }

    /// q -> q^-1 (exponent negation).
    LaurentPoly substitute_q_inverse() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    const std::map<int, std::int64_t>& terms() const { return terms_; }

    /// Canonical rendering in decreasing exponents, e.g.
    /// "q^4 + 2*q^2 + 3 + 2*q^-2 + q^-4".
    std::string str() const;

    /// JSON object {"exponent": coefficient} with string keys.
    nlohmann::json to_json() const;
    static LaurentPoly from_json(const nlohmann::json& j);

private:
    void add_term(int e, std::int64_t c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<int, std::int64_t> terms_;
};

/// Exact division, used when a specialization is known to land back in the
/// Laurent ring. Throws std::domain_error if the division leaves a remainder.
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace sl3web
