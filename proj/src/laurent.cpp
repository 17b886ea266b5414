#include "sl3web/laurent.hpp"

#include <sstream>

namespace sl3web {

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        const std::int64_t c = it->second;
        const std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::string qpart;
        if (e == 1)
            qpart = "q";
        else if (e != 0)
            qpart = "q^" + std::to_string(e);
        if (qpart.empty())
            out << mag;
        else if (mag == 1)
            out << qpart;
        else
            out << mag << "*" << qpart;
    }
    return out.str();
}

nlohmann::json LaurentPoly::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : terms_) j[std::to_string(e)] = c;
    return j;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int e = std::stoi(it.key());
        std::int64_t c = it.value().get<std::int64_t>();
        if (c != 0) p.terms_[e] = c;
    }
    return p;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num.is_zero()) return {};
    LaurentPoly rem = num;
    LaurentPoly quot;
    const int dd = den.degree();
    const std::int64_t dc = den.leading_coeff();
    // For an exact quotient the lowest quotient exponent is bounded below.
    const int low_bound = num.low_degree() - den.low_degree();
    while (!rem.is_zero()) {
        const int rd = rem.degree();
        const std::int64_t rc = rem.leading_coeff();
        if (rc % dc != 0 || rd - dd < low_bound)
            throw std::domain_error("non-exact polynomial division");
        LaurentPoly t = LaurentPoly::monomial(rc / dc, rd - dd);
        quot += t;
        rem -= t * den;
        if (!rem.is_zero() && rem.degree() >= rd)
            throw std::domain_error("non-exact polynomial division");
    }
    return quot;
}

}  // namespace sl3web
