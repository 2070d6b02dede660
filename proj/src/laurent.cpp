#include "levelone/laurent.hpp"

#include "levelone/error.hpp"

namespace levelone {

LaurentPoly::LaurentPoly(long long c) { add_term(0, c); }

LaurentPoly LaurentPoly::monomial(int exp, long long coeff) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

void LaurentPoly::add_term(int exp, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

long long LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

long long LaurentPoly::at_q1() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + s, c);
    return p;
}

std::optional<LaurentPoly> LaurentPoly::divided(long long d) const {
    if (d == 0) throw InvalidDatum("division by zero");
    LaurentPoly p;
    for (const auto& [e, c] : terms_) {
        if (c % d != 0) return std::nullopt;
        p.terms_.emplace(e, c / d);
    }
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
    *this = std::move(out);
    return *this;
}

LaurentPoly qint(int k) {
    if (k < 0) throw InvalidDatum("quantum integer needs k >= 0");
    LaurentPoly p;
    for (int e = k - 1; e >= 1 - k; e -= 2) p += LaurentPoly::monomial(e);
    return p;
}

LaurentPoly qfact(int k) {
    if (k < 0) throw InvalidDatum("quantum factorial needs k >= 0");
    LaurentPoly p(1);
    for (int t = 2; t <= k; ++t) p *= qint(t);
    return p;
}

std::optional<int> shift_between(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero() ? std::optional<int>(0) : std::nullopt;
    const int s = a.terms().begin()->first - b.terms().begin()->first;
    if (b.shifted(s) == a) return s;
    return std::nullopt;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto [e, c] = *it;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const long long m = c < 0 ? -c : c;
        if (e == 0) {
            out += std::to_string(m);
            continue;
        }
        if (m != 1) out += std::to_string(m);
        out += "q";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace levelone
