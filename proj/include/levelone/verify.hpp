#pragma once

// Verification suites.  Each returns a Report whose failing checks carry a
// concrete witness; suites are deterministic in their parameters.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace levelone {

struct Failure {
    std::string check;
    std::string witness;
    friend bool operator==(const Failure&, const Failure&) = default;
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::variant<int, std::string>>> params;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<Failure> failures;
    std::size_t nodes_checked = 0;

    bool ok() const { return failed == 0; }
    /// Records one check.
    void expect(bool cond, const std::string& check, const std::string& witness);
    friend bool operator==(const Report&, const Report&) = default;
};

enum class IsoDirection { row, column, both };
IsoDirection parse_direction(std::string_view name);

/// Φ (row) and/or Φ' (column) are strict bijective morphisms onto the
/// tensor product truncated at `depth`, and the peeled labels match the
/// trailing letters of T(i;λ_1) resp. S(i;λ^T_1).
Report verify_iso(int ell, int i, int depth, IsoDirection direction = IsoDirection::both);

/// For every node and color: f̃_j grows the first row (column) iff
/// ε_j(b) >= φ^{Λ_{i∓1}}_j(μ), ẽ_j shrinks it iff ε_j(b) > φ_j(μ).
Report verify_case_split(int ell, int i, int depth);

/// Closed forms for wt, jump and φ^Λ on T(i;k), the jump table along
/// R^t(T(i;m)), first rows of the crystal nodes of T(i;m), f̃-survival on
/// those nodes, and the mass of T(i;k) ⧢ [i-1]; 1 <= k <= kmax, all i.
Report verify_trivial_family(int ell, int kmax);

/// Level sizes of both models against direct partition enumeration.
Report verify_counts(int ell, int i, int nmax);

/// Crystal axioms on B^{1,1}, B^{ℓ-1,1}, both models of B(Λ_i) to depth,
/// and on B^{1,1} ⊗ B(Λ_{i-1}).
Report verify_axioms(int ell, int i, int depth);

/// q = 1 Serre relations on shuffle products of total length <= max_len.
Report verify_serre(int ell, int max_len);

/// Every suite named in `suites` ("axioms", "iso", "casesplit", "trivial",
/// "serre", "counts" or "all"), for each i in `hws` where the suite takes
/// one.  Runs the suites in parallel; the order of the result is fixed.
std::vector<Report> run_suites(const std::vector<std::string>& suites, int ell, const std::vector<int>& hws,
                               int depth);

std::string to_json(const Report& r);
std::string to_json(const std::vector<Report>& rs);

}  // namespace levelone
