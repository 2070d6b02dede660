#include "levelone/hw_crystal.hpp"

#include <type_traits>

namespace levelone {

Model parse_model(std::string_view name) {
    if (name == "restricted") return Model::restricted;
    if (name == "regular") return Model::regular;
    throw UsageError("unknown model '" + std::string(name) + "' (expected restricted|regular)");
}

std::string_view to_string(Model m) { return m == Model::restricted ? "restricted" : "regular"; }

namespace {

template <class P>
constexpr bool row_model = std::is_same_v<P, RestrictedPartition>;

}  // namespace

template <class P>
PartitionCrystal<P>::PartitionCrystal(int ell, Residue hw)
    : ell_(ell), hw_(hw), perfect_(ell, row_model<P> ? PerfectFamily::b11 : PerfectFamily::bopp) {
    require_same_ell(ell, hw.ell());
}

template <class P>
PartitionCrystal<P> PartitionCrystal<P>::lower() const {
    return PartitionCrystal(ell_, row_model<P> ? hw_.pred() : hw_.succ());
}

template <class P>
void PartitionCrystal<P>::check(const Node& lambda) const {
    validate(lambda);
    if (!(lambda.hw == hw_))
        throw InvalidDatum("node " + serialize(lambda) + " is not in B(Λ_" + std::to_string(hw_.value()) + ")");
}

template <class P>
P PartitionCrystal<P>::node(Parts parts) const {
    Node n{std::move(parts), hw_};
    check(n);
    return n;
}

template <class P>
std::pair<PerfectNode, P> PartitionCrystal<P>::peel(const Node& lambda) const {
    check(lambda);
    if constexpr (row_model<P>)
        return phi_peel(lambda);
    else
        return phiop_peel(lambda);
}

template <class P>
P PartitionCrystal<P>::unpeel(const PerfectNode& b, const Node& mu) const {
    if constexpr (row_model<P>)
        return phi_unpeel(hw_, b, mu);
    else
        return phiop_unpeel(hw_, b, mu);
}

template <class P>
CorootWeight PartitionCrystal<P>::wt(const Node& lambda) const {
    check(lambda);
    if (lambda.empty()) return CorootWeight::fundamental(hw_);
    auto [b, mu] = peel(lambda);
    return perfect_.wt(b) + lower().wt(mu);
}

template <class P>
int PartitionCrystal<P>::eps(Residue j, const Node& lambda) const {
    check(lambda);
    if (lambda.empty()) return 0;
    auto [b, mu] = peel(lambda);
    return tensor_stats(perfect_, lower(), j, b, mu).eps;
}

template <class P>
int PartitionCrystal<P>::phi(Residue j, const Node& lambda) const {
    check(lambda);
    if (lambda.empty()) return j == hw_ ? 1 : 0;
    auto [b, mu] = peel(lambda);
    return tensor_stats(perfect_, lower(), j, b, mu).phi;
}

template <class P>
std::optional<P> PartitionCrystal<P>::e(Residue j, const Node& lambda) const {
    check(lambda);
    if (lambda.empty()) return std::nullopt;
    auto [b, mu] = peel(lambda);
    const auto low = lower();
    auto r = tensor_e(perfect_, low, j, TensorNode<PerfectNode, P>{b, std::move(mu)});
    if (!r) return std::nullopt;
    return unpeel(r->left, r->right);
}

template <class P>
std::optional<P> PartitionCrystal<P>::f(Residue j, const Node& lambda) const {
    check(lambda);
    if (lambda.empty()) {
        if (!(j == hw_)) return std::nullopt;
        return Node{{1}, hw_};
    }
    auto [b, mu] = peel(lambda);
    const auto low = lower();
    auto r = tensor_f(perfect_, low, j, TensorNode<PerfectNode, P>{b, std::move(mu)});
    if (!r) return std::nullopt;
    return unpeel(r->left, r->right);
}

template class PartitionCrystal<RestrictedPartition>;
template class PartitionCrystal<RegularPartition>;

RestrictedCrystal restricted_crystal(int ell, int i) {
    require_ell(ell);
    return RestrictedCrystal(ell, Residue(ell, i));
}

RegularCrystal regular_crystal(int ell, int i) {
    require_ell(ell);
    return RegularCrystal(ell, Residue(ell, i));
}

int phcyc_stat(const CorootWeight& Lambda, Residue j, int eps_j, const RootVector& nu) {
    require_same_ell(Lambda.ell(), j.ell());
    require_same_ell(Lambda.ell(), nu.ell());
    if (!Lambda.dominant()) throw InvalidDatum("φ^Λ needs a dominant Λ, got " + to_string(Lambda));
    return Lambda[j] + eps_j - pair_coroot(Lambda.ell(), j, nu);
}

}  // namespace levelone
