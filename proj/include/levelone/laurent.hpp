#pragma once

// Laurent polynomials in q with integer coefficients.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace levelone {

class LaurentPoly {
public:
    LaurentPoly() = default;
    /// The constant c.
    LaurentPoly(long long c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(int exp, long long coeff = 1);

    const std::map<int, long long>& terms() const noexcept { return terms_; }
    long long coeff(int exp) const;
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Value at q = 1.
    long long at_q1() const;
    /// Multiplies by q^s.
    LaurentPoly shifted(int s) const;
    /// Every coefficient divided by d; nullopt unless all are divisible.
    std::optional<LaurentPoly> divided(long long d) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const { return LaurentPoly() - *this; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// [[exp, coeff], ...] with exponents ascending.
    std::vector<std::pair<int, long long>> pairs() const { return {terms_.begin(), terms_.end()}; }

private:
    void add_term(int exp, long long c);
    std::map<int, long long> terms_;
};

/// [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}; [0] = 0.
LaurentPoly qint(int k);
/// [k]! = [k][k-1]...[1]; [0]! = 1.
LaurentPoly qfact(int k);

/// The s with a = q^s b, if any (nullopt for b = 0 unless a = 0, then 0).
std::optional<int> shift_between(const LaurentPoly& a, const LaurentPoly& b);

std::string to_string(const LaurentPoly& p);

}  // namespace levelone
