#pragma once

// B(Λ_i) on partitions.  Crystal data is computed by peeling one row (Φ,
// restricted model) or one column (Φ', regular model) into a perfect-crystal
// factor and the smaller partition in B(Λ_{i∓1}), applying the tensor rule,
// and unpeeling.  The empty partition is the base case.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levelone/cartan.hpp"
#include "levelone/crystal.hpp"
#include "levelone/partition.hpp"
#include "levelone/perfect.hpp"

namespace levelone {

enum class Model { restricted, regular };

Model parse_model(std::string_view name);
std::string_view to_string(Model m);

template <class P>
class PartitionCrystal {
public:
    using Node = P;

    PartitionCrystal(int ell, Residue hw);

    int ell() const noexcept { return ell_; }
    Residue hw() const noexcept { return hw_; }
    const PerfectCrystal& perfect() const noexcept { return perfect_; }
    /// B(Λ_{i-1}) for the restricted model, B(Λ_{i+1}) for the regular one.
    PartitionCrystal lower() const;

    Node highest() const { return Node{{}, hw_}; }
    /// Validating constructor for a node of this crystal.
    Node node(Parts parts) const;

    std::pair<PerfectNode, Node> peel(const Node& lambda) const;
    Node unpeel(const PerfectNode& b, const Node& mu) const;

    CorootWeight wt(const Node& lambda) const;
    int eps(Residue j, const Node& lambda) const;
    int phi(Residue j, const Node& lambda) const;
    std::optional<Node> e(Residue j, const Node& lambda) const;
    std::optional<Node> f(Residue j, const Node& lambda) const;
    std::string serialize(const Node& lambda) const { return levelone::serialize(lambda); }

private:
    void check(const Node& lambda) const;

    int ell_;
    Residue hw_;
    PerfectCrystal perfect_;
};

using RestrictedCrystal = PartitionCrystal<RestrictedPartition>;
using RegularCrystal = PartitionCrystal<RegularPartition>;

extern template class PartitionCrystal<RestrictedPartition>;
extern template class PartitionCrystal<RegularPartition>;

RestrictedCrystal restricted_crystal(int ell, int i);
RegularCrystal regular_crystal(int ell, int i);

/// Applies f̃_{colors[0]} first, then f̃_{colors[1]}, ...; nullopt once any
/// step is null.
template <class P>
std::optional<P> f_chain(const PartitionCrystal<P>& c, const P& start, const std::vector<int>& colors) {
    std::optional<P> cur = start;
    for (int j : colors) {
        cur = c.f(Residue(c.ell(), j), *cur);
        if (!cur) break;
    }
    return cur;
}

/// Nodes of B(Λ_i) grouped by distance from ∅ (= number of boxes), levels
/// 0..depth, each level in first-reached order.
template <class P>
std::vector<std::vector<P>> levels(const PartitionCrystal<P>& c, int depth) {
    if (depth < 0) throw InvalidDatum("depth must be nonnegative");
    std::vector<std::vector<P>> out{{c.highest()}};
    std::set<std::string> seen{c.serialize(c.highest())};
    for (int d = 1; d <= depth; ++d) {
        std::vector<P> next;
        for (const auto& b : out.back())
            for (int j = 0; j < c.ell(); ++j)
                if (auto t = c.f(Residue(c.ell(), j), b); t && seen.insert(c.serialize(*t)).second)
                    next.push_back(std::move(*t));
        out.push_back(std::move(next));
    }
    return out;
}

template <class P>
std::vector<P> nodes_to_depth(const PartitionCrystal<P>& c, int depth) {
    std::vector<P> all;
    for (auto& level : levels(c, depth))
        for (auto& b : level) all.push_back(std::move(b));
    return all;
}

/// ε^∨_j on B(Λ_i): δ_{ij} for λ ≠ ∅, zero for ∅.
template <class P>
std::vector<int> eps_vee(const P& lambda) {
    const int ell = lambda.hw.ell();
    std::vector<int> v(static_cast<std::size_t>(ell), 0);
    if (!lambda.empty()) v[static_cast<std::size_t>(lambda.hw.value())] = 1;
    return v;
}

/// -<h_j, ν(λ)> + ε_j(λ) + ε^∨_j(λ).
template <class P>
int jump_stat(const PartitionCrystal<P>& c, const P& lambda, Residue j) {
    const auto nu = nu_of(c.ell(), lambda.hw, lambda.parts);
    return -pair_coroot(c.ell(), j, nu) + c.eps(j, lambda) + eps_vee(lambda)[static_cast<std::size_t>(j.value())];
}

/// φ^Λ_j = <h_j, Λ> + ε_j - <h_j, ν>.  Throws unless Λ is dominant.
int phcyc_stat(const CorootWeight& Lambda, Residue j, int eps_j, const RootVector& nu);

template <class P>
int phcyc_stat(const PartitionCrystal<P>& c, const CorootWeight& Lambda, const P& lambda, Residue j) {
    return phcyc_stat(Lambda, j, c.eps(j, lambda), nu_of(c.ell(), lambda.hw, lambda.parts));
}

}  // namespace levelone
