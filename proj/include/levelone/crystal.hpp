#pragma once

// Abstract crystals, the tensor product (reverse Kashiwara convention),
// and checkers for the crystal axioms and morphism axioms.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "levelone/cartan.hpp"

namespace levelone {

/// A crystal over nodes of type C::Node.  e/f return std::nullopt for the
/// null node 0.  All crystals here are seminormal, so eps/phi are finite.
template <class C>
concept Crystal = std::equality_comparable<typename C::Node> &&
    requires(const C& c, const typename C::Node& b, Residue j) {
        { c.ell() } -> std::convertible_to<int>;
        { c.wt(b) } -> std::same_as<CorootWeight>;
        { c.eps(j, b) } -> std::convertible_to<int>;
        { c.phi(j, b) } -> std::convertible_to<int>;
        { c.e(j, b) } -> std::same_as<std::optional<typename C::Node>>;
        { c.f(j, b) } -> std::same_as<std::optional<typename C::Node>>;
        { c.serialize(b) } -> std::convertible_to<std::string>;
    };

template <class N1, class N2>
struct TensorNode {
    N1 left;
    N2 right;
    friend bool operator==(const TensorNode&, const TensorNode&) = default;
};

struct TensorStats {
    int eps;
    int phi;
    int wt_j;
};

/// ε_j, φ_j and <h_j, wt> of b1 ⊗ b2.
template <Crystal B1, Crystal B2>
TensorStats tensor_stats(const B1& c1, const B2& c2, Residue j, const typename B1::Node& b1,
                         const typename B2::Node& b2) {
    require_same_ell(c1.ell(), c2.ell());
    require_same_ell(c1.ell(), j.ell());
    const int wt1 = c1.wt(b1)[j];
    const int wt2 = c2.wt(b2)[j];
    const int eps = std::max(c2.eps(j, b2), c1.eps(j, b1) - wt2);
    const int phi = std::max(c2.phi(j, b2) + wt1, c1.phi(j, b1));
    return {eps, phi, wt1 + wt2};
}

/// ẽ_j(b1 ⊗ b2): acts on the left factor iff ε_j(b1) > φ_j(b2).
template <Crystal B1, Crystal B2>
std::optional<TensorNode<typename B1::Node, typename B2::Node>> tensor_e(
    const B1& c1, const B2& c2, Residue j, const TensorNode<typename B1::Node, typename B2::Node>& b) {
    require_same_ell(c1.ell(), c2.ell());
    if (c1.eps(j, b.left) > c2.phi(j, b.right)) {
        auto l = c1.e(j, b.left);
        if (!l) return std::nullopt;
        return TensorNode<typename B1::Node, typename B2::Node>{std::move(*l), b.right};
    }
    auto r = c2.e(j, b.right);
    if (!r) return std::nullopt;
    return TensorNode<typename B1::Node, typename B2::Node>{b.left, std::move(*r)};
}

/// f̃_j(b1 ⊗ b2): acts on the left factor iff ε_j(b1) >= φ_j(b2); ties go left.
template <Crystal B1, Crystal B2>
std::optional<TensorNode<typename B1::Node, typename B2::Node>> tensor_f(
    const B1& c1, const B2& c2, Residue j, const TensorNode<typename B1::Node, typename B2::Node>& b) {
    require_same_ell(c1.ell(), c2.ell());
    if (c1.eps(j, b.left) >= c2.phi(j, b.right)) {
        auto l = c1.f(j, b.left);
        if (!l) return std::nullopt;
        return TensorNode<typename B1::Node, typename B2::Node>{std::move(*l), b.right};
    }
    auto r = c2.f(j, b.right);
    if (!r) return std::nullopt;
    return TensorNode<typename B1::Node, typename B2::Node>{b.left, std::move(*r)};
}

template <Crystal B1, Crystal B2>
class TensorCrystal {
public:
    using Node = TensorNode<typename B1::Node, typename B2::Node>;

    TensorCrystal(B1 left, B2 right) : left_(std::move(left)), right_(std::move(right)) {
        require_same_ell(left_.ell(), right_.ell());
    }

    int ell() const { return left_.ell(); }
    const B1& left() const { return left_; }
    const B2& right() const { return right_; }

    CorootWeight wt(const Node& b) const { return left_.wt(b.left) + right_.wt(b.right); }
    int eps(Residue j, const Node& b) const { return tensor_stats(left_, right_, j, b.left, b.right).eps; }
    int phi(Residue j, const Node& b) const { return tensor_stats(left_, right_, j, b.left, b.right).phi; }
    std::optional<Node> e(Residue j, const Node& b) const { return tensor_e(left_, right_, j, b); }
    std::optional<Node> f(Residue j, const Node& b) const { return tensor_f(left_, right_, j, b); }
    std::string serialize(const Node& b) const {
        return "(" + left_.serialize(b.left) + " ⊗ " + right_.serialize(b.right) + ")";
    }

private:
    B1 left_;
    B2 right_;
};

struct Violation {
    std::string node;
    int color;
    std::string axiom;
    std::string detail;
};

struct AxiomReport {
    std::vector<Violation> violations;
    std::size_t nodes_checked = 0;
    bool ok() const { return violations.empty(); }
};

struct MorphismReport {
    std::vector<Violation> violations;
    std::size_t nodes_checked = 0;
    bool injective = true;
    bool surjective = true;
    bool ok() const { return violations.empty(); }
    bool bijective() const { return injective && surjective; }
};

namespace detail {

template <Crystal B>
int e_string_length(const B& c, Residue j, typename B::Node b, int cap) {
    int n = 0;
    while (n <= cap) {
        auto next = c.e(j, b);
        if (!next) break;
        b = std::move(*next);
        ++n;
    }
    return n;
}

template <Crystal B>
int f_string_length(const B& c, Residue j, typename B::Node b, int cap) {
    int n = 0;
    while (n <= cap) {
        auto next = c.f(j, b);
        if (!next) break;
        b = std::move(*next);
        ++n;
    }
    return n;
}

inline std::string pair_str(int a, int b) { return std::to_string(a) + " vs " + std::to_string(b); }

}  // namespace detail

/// Brute-force ε_j: length of the ẽ_j-string through b.  `cap` bounds the
/// walk so that a broken crystal cannot loop forever.
template <Crystal B>
int string_eps(const B& c, Residue j, const typename B::Node& b, int cap = 1 << 12) {
    return detail::e_string_length(c, j, b, cap);
}

template <Crystal B>
int string_phi(const B& c, Residue j, const typename B::Node& b, int cap = 1 << 12) {
    return detail::f_string_length(c, j, b, cap);
}

/// Closure of `nodes` under all ẽ_j, keyed by serialization.
template <Crystal B>
std::map<std::string, typename B::Node> e_closure(const B& c, const std::vector<typename B::Node>& nodes) {
    std::map<std::string, typename B::Node> seen;
    std::vector<typename B::Node> stack;
    for (const auto& b : nodes)
        if (seen.emplace(c.serialize(b), b).second) stack.push_back(b);
    while (!stack.empty()) {
        auto b = std::move(stack.back());
        stack.pop_back();
        for (int j = 0; j < c.ell(); ++j) {
            auto a = c.e(Residue(c.ell(), j), b);
            if (a && seen.emplace(c.serialize(*a), *a).second) stack.push_back(*a);
        }
    }
    return seen;
}

/// Checks C1-C5 and seminormality on the ẽ-closure of `nodes`.
template <Crystal B>
AxiomReport check_axioms(const B& c, const std::vector<typename B::Node>& nodes) {
    using detail::pair_str;
    AxiomReport report;
    const int ell = c.ell();
    const auto closed = e_closure(c, nodes);
    auto add = [&](const std::string& id, int j, const char* axiom, std::string detail) {
        report.violations.push_back({id, j, axiom, std::move(detail)});
    };

    for (const auto& [id, b] : closed) {
        ++report.nodes_checked;
        const CorootWeight w = c.wt(b);
        for (int jv = 0; jv < ell; ++jv) {
            const Residue j(ell, jv);
            const int eps = c.eps(j, b);
            const int phi = c.phi(j, b);
            if (eps < 0 || phi < 0) add(id, jv, "C5", "negative eps/phi " + pair_str(eps, phi));
            if (phi != eps + w[j]) add(id, jv, "C1", "phi=" + std::to_string(phi) + " eps+wt=" + std::to_string(eps + w[j]));

            if (auto a = c.e(j, b)) {
                const CorootWeight wa = c.wt(*a);
                if (c.eps(j, *a) != eps - 1) add(id, jv, "C2", "eps(e b) " + pair_str(c.eps(j, *a), eps - 1));
                if (c.phi(j, *a) != phi + 1) add(id, jv, "C2", "phi(e b) " + pair_str(c.phi(j, *a), phi + 1));
                for (int i = 0; i < ell; ++i) {
                    const Residue ri(ell, i);
                    if (wa[ri] != w[ri] + cartan_entry(ell, ri, j))
                        add(id, jv, "C2", "wt(e b) at h_" + std::to_string(i));
                }
                auto back = c.f(j, *a);
                if (!back || !(*back == b)) add(id, jv, "C4", "f(e b) != b");
            }
            if (auto d = c.f(j, b)) {
                const CorootWeight wd = c.wt(*d);
                if (c.eps(j, *d) != eps + 1) add(id, jv, "C3", "eps(f b) " + pair_str(c.eps(j, *d), eps + 1));
                if (c.phi(j, *d) != phi - 1) add(id, jv, "C3", "phi(f b) " + pair_str(c.phi(j, *d), phi - 1));
                for (int i = 0; i < ell; ++i) {
                    const Residue ri(ell, i);
                    if (wd[ri] != w[ri] - cartan_entry(ell, ri, j))
                        add(id, jv, "C3", "wt(f b) at h_" + std::to_string(i));
                }
                auto back = c.e(j, *d);
                if (!back || !(*back == b)) add(id, jv, "C4", "e(f b) != b");
            }

            const int cap = std::max(eps, phi) + 2;
            const int se = string_eps(c, j, b, cap);
            const int sf = string_phi(c, j, b, cap);
            if (se != eps) add(id, jv, "seminormal", "eps " + pair_str(eps, se));
            if (sf != phi) add(id, jv, "seminormal", "phi " + pair_str(phi, sf));
        }
    }
    return report;
}

/// Checks M1-M4 (and strictness when requested) for psi : B1 -> B2 on
/// `nodes`; injectivity is checked on the image and surjectivity against
/// `target`.
template <Crystal B1, Crystal B2, class Map>
MorphismReport check_morphism(const Map& psi, const B1& c1, const B2& c2,
                              const std::vector<typename B1::Node>& nodes, bool strict,
                              const std::vector<typename B2::Node>& target) {
    MorphismReport report;
    require_same_ell(c1.ell(), c2.ell());
    const int ell = c1.ell();
    auto add = [&](const std::string& id, int j, const char* axiom, std::string detail) {
        report.violations.push_back({id, j, axiom, std::move(detail)});
    };
    auto same = [&](const std::optional<typename B2::Node>& x, const std::optional<typename B2::Node>& y) {
        if (!x || !y) return !x && !y;
        return *x == *y;
    };
    auto show = [&](const std::optional<typename B2::Node>& x) { return x ? c2.serialize(*x) : std::string("0"); };

    std::map<std::string, std::string> image;  // target id -> source id
    for (const auto& b : nodes) {
        ++report.nodes_checked;
        const std::string id = c1.serialize(b);
        const std::optional<typename B2::Node> p = psi(b);
        if (p) {
            const std::string pid = c2.serialize(*p);
            if (auto [it, fresh] = image.emplace(pid, id); !fresh) {
                report.injective = false;
                add(id, -1, "injective", "collides with " + it->second + " at " + pid);
            }
            if (!(c2.wt(*p) == c1.wt(b))) add(id, -1, "M2", "wt " + to_string(c1.wt(b)) + " -> " + to_string(c2.wt(*p)));
        }
        for (int jv = 0; jv < ell; ++jv) {
            const Residue j(ell, jv);
            if (p) {
                if (c2.eps(j, *p) != c1.eps(j, b)) add(id, jv, "M2", "eps " + detail::pair_str(c1.eps(j, b), c2.eps(j, *p)));
                if (c2.phi(j, *p) != c1.phi(j, b)) add(id, jv, "M2", "phi " + detail::pair_str(c1.phi(j, b), c2.phi(j, *p)));
            }
            const auto eb = c1.e(j, b);
            const auto fb = c1.f(j, b);
            const std::optional<typename B2::Node> psi_e = eb ? psi(*eb) : std::nullopt;
            const std::optional<typename B2::Node> psi_f = fb ? psi(*fb) : std::nullopt;
            const std::optional<typename B2::Node> e_psi = p ? c2.e(j, *p) : std::nullopt;
            const std::optional<typename B2::Node> f_psi = p ? c2.f(j, *p) : std::nullopt;
            if (p && psi_e && !same(psi_e, e_psi)) add(id, jv, "M3", show(psi_e) + " vs " + show(e_psi));
            if (p && psi_f && !same(psi_f, f_psi)) add(id, jv, "M4", show(psi_f) + " vs " + show(f_psi));
            if (strict) {
                if (!same(psi_e, e_psi)) add(id, jv, "strict-e", show(psi_e) + " vs " + show(e_psi));
                if (!same(psi_f, f_psi)) add(id, jv, "strict-f", show(psi_f) + " vs " + show(f_psi));
            }
        }
    }
    std::set<std::string> target_ids;
    for (const auto& t : target) target_ids.insert(c2.serialize(t));
    for (const auto& t : target_ids)
        if (!image.contains(t)) {
            report.surjective = false;
            add(t, -1, "surjective", "target node not in image");
        }
    return report;
}

}  // namespace levelone
