#include "levelone/perfect.hpp"

namespace levelone {

PerfectCrystal::PerfectCrystal(int ell, PerfectFamily family) : ell_(ell), family_(family) { require_ell(ell); }

PerfectCrystal b11(int ell) { return PerfectCrystal(ell, PerfectFamily::b11); }
PerfectCrystal bopp(int ell) { return PerfectCrystal(ell, PerfectFamily::bopp); }

void PerfectCrystal::check(const Node& b) const {
    require_same_ell(ell_, b.label.ell());
    if (b.family != family_) throw InvalidDatum("perfect node from the other family");
}

// wt is forced by C1: <h_j, wt(b_k)> = φ_j - ε_j.
CorootWeight PerfectCrystal::wt(const Node& b) const {
    check(b);
    CorootWeight w(ell_);
    w += CorootWeight::fundamental(step(b.label));
    w -= CorootWeight::fundamental(b.label);
    return w;
}

int PerfectCrystal::eps(Residue j, const Node& b) const {
    check(b);
    return j == b.label ? 1 : 0;
}

int PerfectCrystal::phi(Residue j, const Node& b) const {
    check(b);
    return j == step(b.label) ? 1 : 0;
}

std::optional<PerfectNode> PerfectCrystal::e(Residue j, const Node& b) const {
    check(b);
    if (!(j == b.label)) return std::nullopt;
    // Inverse of f: B11 steps back to k-1, Bopp to k+1.
    const Residue back = family_ == PerfectFamily::b11 ? b.label.pred() : b.label.succ();
    return Node{back, family_};
}

std::optional<PerfectNode> PerfectCrystal::f(Residue j, const Node& b) const {
    check(b);
    const Residue target = step(b.label);
    if (!(j == target)) return std::nullopt;
    return Node{target, family_};
}

std::string PerfectCrystal::serialize(const Node& b) const {
    return std::string(family_ == PerfectFamily::b11 ? "B11:" : "BOP:") + std::to_string(b.label.value());
}

}  // namespace levelone
