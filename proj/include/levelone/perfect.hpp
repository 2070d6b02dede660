#pragma once

// The level 1 perfect crystals B^{1,1} and B^{ℓ-1,1}.  Both are single
// ℓ-cycles; nodes are labelled so that ε_j(b_k) = δ_{jk}.

#include <optional>
#include <string>

#include "levelone/cartan.hpp"

namespace levelone {

enum class PerfectFamily { b11, bopp };

struct PerfectNode {
    Residue label;
    PerfectFamily family;
    friend bool operator==(const PerfectNode&, const PerfectNode&) = default;
};

class PerfectCrystal {
public:
    using Node = PerfectNode;

    PerfectCrystal(int ell, PerfectFamily family);

    int ell() const noexcept { return ell_; }
    PerfectFamily family() const noexcept { return family_; }

    Node node(long long k) const { return {Residue(ell_, k), family_}; }

    CorootWeight wt(const Node& b) const;
    int eps(Residue j, const Node& b) const;
    int phi(Residue j, const Node& b) const;
    std::optional<Node> e(Residue j, const Node& b) const;
    std::optional<Node> f(Residue j, const Node& b) const;
    /// `B11:<k>` or `BOP:<k>`.
    std::string serialize(const Node& b) const;

private:
    void check(const Node& b) const;
    /// The label that f̃ moves b_k towards: k+1 for B11, k-1 for Bopp.
    Residue step(Residue k) const { return family_ == PerfectFamily::b11 ? k.succ() : k.pred(); }

    int ell_;
    PerfectFamily family_;
};

PerfectCrystal b11(int ell);
PerfectCrystal bopp(int ell);

}  // namespace levelone
