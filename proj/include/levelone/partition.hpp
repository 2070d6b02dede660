#pragma once

// Partition labels for the two models of B(Λ_i): ℓ-restricted partitions
// (peeled row by row through Φ) and ℓ-regular partitions (peeled column by
// column through Φ').  Parts are stored without trailing zeros.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levelone/cartan.hpp"
#include "levelone/perfect.hpp"

namespace levelone {

using Parts = std::vector<int>;

/// Weakly decreasing, all parts positive.
bool is_partition(const Parts& parts);
/// 0 <= λ_r - λ_{r+1} < ℓ for all r (with λ_{t+1} = 0).
bool is_restricted(int ell, const Parts& parts);
/// No part occurs ℓ or more times, i.e. the transpose is ℓ-restricted.
bool is_regular(int ell, const Parts& parts);
Parts transpose(const Parts& parts);
int size(const Parts& parts);

struct RestrictedPartition {
    Parts parts;
    Residue hw;
    bool empty() const noexcept { return parts.empty(); }
    friend bool operator==(const RestrictedPartition&, const RestrictedPartition&) = default;
};

struct RegularPartition {
    Parts parts;
    Residue hw;
    bool empty() const noexcept { return parts.empty(); }
    friend bool operator==(const RegularPartition&, const RegularPartition&) = default;
};

/// Validating constructors; throw InvalidDatum on a bad shape.
RestrictedPartition make_restricted(Residue hw, Parts parts);
RegularPartition make_regular(Residue hw, Parts parts);
void validate(const RestrictedPartition& p);
void validate(const RegularPartition& p);

/// `R<i>:a,b,...` and `G<i>:a,b,...`; the empty partition is `R<i>:`.
std::string serialize(const RestrictedPartition& p);
std::string serialize(const RegularPartition& p);
/// Reads either prefix back; returns the parts and hw value.
std::pair<Parts, int> parse_partition_label(std::string_view label, char prefix);

/// Residue (i + c - r) mod ℓ of the box in row r, column c (1-based).
Residue residue(int ell, Residue i, int r, int c);

/// Multiset of box residues of λ drawn in B(Λ_i).
RootVector nu_of(int ell, Residue i, const Parts& parts);

/// Φ: λ ↦ b_k ⊗ (λ_2, ...), k ≡ λ_1 + i - 1; ∅ ↦ b_{i-1} ⊗ ∅.
std::pair<PerfectNode, RestrictedPartition> phi_peel(const RestrictedPartition& lambda);
/// Φ^{-1}: b_k ⊗ μ ↦ λ with λ_1 ∈ [μ_1, μ_1 + ℓ), λ_1 ≡ k + 1 - i.
RestrictedPartition phi_unpeel(Residue i, const PerfectNode& k, const RestrictedPartition& mu);

/// Φ': λ ↦ b_k ⊗ (λ minus its first column), k ≡ i + 1 - λ^T_1.
std::pair<PerfectNode, RegularPartition> phiop_peel(const RegularPartition& lambda);
RegularPartition phiop_unpeel(Residue i, const PerfectNode& k, const RegularPartition& mu);

/// Direct enumeration (no crystal operators involved).
std::vector<Parts> partitions_of(int n);
std::vector<Parts> restricted_partitions(int ell, int n);
std::vector<Parts> regular_partitions(int ell, int n);

}  // namespace levelone
