#pragma once

// One-dimensional R(ν)-modules, found by brute force from the defining
// relations, and the q = 1 Serre sweep over shuffle products.  Both are
// OpenMP loops with deterministic output; the *_serial versions are the
// single-threaded references.

#include <cstddef>
#include <string>
#include <vector>

#include "levelone/character.hpp"

namespace levelone {

/// Scalars a_r (ψ_r ↦ a_r, x_r ↦ 0) making [seq] a 1-dimensional module,
/// or an empty optional if no choice in {-1, 0, 1}^{m-1} satisfies every
/// relation.
std::optional<std::vector<int>> onedim_solve(int ell, const Seq& seq);

/// All admissible sequences of length m, sorted.
std::vector<Seq> onedim_classify(int ell, int m);
std::vector<Seq> onedim_classify_serial(int ell, int m);

/// Ascending ∪ descending sequences of length m, built directly.
std::vector<Seq> onedim_families(int ell, int m);

struct SerreFailure {
    std::string product;  // factor names joined by " ⧢ "
    int i;
    int j;
    std::string detail;
};

struct SerreSweep {
    std::size_t products = 0;
    std::size_t checks = 0;
    std::vector<SerreFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Every multiset of factors from {T(i;k), S(i;k), L(iⁿ)} (deduplicated at
/// q = 1) of total length <= max_len, shuffled at q = 1 and tested with
/// serre_defect for every ordered pair i != j.
SerreSweep serre_sweep(int ell, int max_len);
SerreSweep serre_sweep_serial(int ell, int max_len);

}  // namespace levelone
