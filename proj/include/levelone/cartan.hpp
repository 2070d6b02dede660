#pragma once

// Cartan datum of affine type A_{ℓ-1}^{(1)}.
//
// Every residue, root and weight carries its own ℓ; combining values with
// different ℓ throws InvalidDatum.  Weights are kept only through their
// coroot evaluations <h_j, w>, so the null root is not representable.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "levelone/error.hpp"

namespace levelone {

void require_ell(int ell);
void require_same_ell(int a, int b);

/// An element of I = Z/ℓZ.
class Residue {
public:
    Residue(int ell, long long value);

    int ell() const noexcept { return ell_; }
    int value() const noexcept { return value_; }

    Residue succ() const { return *this + 1; }
    Residue pred() const { return *this - 1; }

    friend Residue operator+(Residue r, long long k) { return Residue(r.ell_, r.value_ + k); }
    friend Residue operator-(Residue r, long long k) { return Residue(r.ell_, r.value_ - k); }

    friend bool operator==(const Residue& a, const Residue& b) {
        require_same_ell(a.ell_, b.ell_);
        return a.value_ == b.value_;
    }
    friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) {
        require_same_ell(a.ell_, b.ell_);
        return a.value_ <=> b.value_;
    }

private:
    int ell_;
    int value_;
};

/// Kronecker delta on residues, with integer arguments reduced mod ℓ.
int delta(int ell, long long a, long long b);

/// ν ∈ Q^+: nonnegative coefficients indexed by I.
class RootVector {
public:
    explicit RootVector(int ell);
    RootVector(int ell, std::vector<int> coeffs);

    static RootVector simple(Residue i);

    int ell() const noexcept { return static_cast<int>(coeffs_.size()); }
    int operator[](Residue i) const;
    int coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<int>& coeffs() const noexcept { return coeffs_; }
    int height() const noexcept;
    bool is_zero() const noexcept { return height() == 0; }

    void add(Residue i, int count = 1);

    RootVector& operator+=(const RootVector& other);
    /// Throws InvalidDatum if a coefficient would go negative.
    RootVector& operator-=(const RootVector& other);
    friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
    friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }

    friend bool operator==(const RootVector&, const RootVector&) = default;

private:
    std::vector<int> coeffs_;
};

/// A weight w stored as its coroot evaluations <h_j, w>, j ∈ I.
class CorootWeight {
public:
    explicit CorootWeight(int ell);
    CorootWeight(int ell, std::vector<int> evals);

    /// Λ_i.
    static CorootWeight fundamental(Residue i);
    /// The weight -ν.
    static CorootWeight of_root(const RootVector& nu);

    int ell() const noexcept { return static_cast<int>(evals_.size()); }
    int operator[](Residue j) const;
    int eval(int j) const { return evals_.at(static_cast<std::size_t>(j)); }
    const std::vector<int>& evals() const noexcept { return evals_; }
    bool dominant() const noexcept;

    CorootWeight& operator+=(const CorootWeight& other);
    CorootWeight& operator-=(const CorootWeight& other);
    friend CorootWeight operator+(CorootWeight a, const CorootWeight& b) { return a += b; }
    friend CorootWeight operator-(CorootWeight a, const CorootWeight& b) { return a -= b; }

    friend bool operator==(const CorootWeight&, const CorootWeight&) = default;

private:
    std::vector<int> evals_;
};

/// a_{ij}.
int cartan_entry(int ell, Residue i, Residue j);
/// (α_i, α_j), normalised so that (α_i, α_i) = 2.
int symmetric_form(int ell, Residue i, Residue j);

enum class Direction { plus, minus };

/// γ^±_{i;k}: α_i + α_{i±1} + ... (k terms).
RootVector gamma(int ell, Residue i, int k, Direction direction);

/// <h_j, ν> = Σ_i a_{ji} ν_i.
int pair_coroot(int ell, Residue j, const RootVector& nu);

std::string to_string(const RootVector& nu);
std::string to_string(const CorootWeight& w);

}  // namespace levelone
