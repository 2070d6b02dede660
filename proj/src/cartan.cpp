#include "levelone/cartan.hpp"

#include <numeric>

namespace levelone {

void require_ell(int ell) {
    if (ell < 2) throw InvalidDatum("ell must be >= 2, got " + std::to_string(ell));
}

void require_same_ell(int a, int b) {
    if (a != b)
        throw InvalidDatum("mixed ell: " + std::to_string(a) + " vs " + std::to_string(b));
}

namespace {

int reduce(long long v, int ell) {
    long long r = v % ell;
    return static_cast<int>(r < 0 ? r + ell : r);
}

}  // namespace

Residue::Residue(int ell, long long value) : ell_(ell), value_(0) {
    require_ell(ell);
    value_ = reduce(value, ell);
}

int delta(int ell, long long a, long long b) {
    require_ell(ell);
    return reduce(a, ell) == reduce(b, ell) ? 1 : 0;
}

RootVector::RootVector(int ell) : coeffs_(static_cast<std::size_t>((require_ell(ell), ell)), 0) {}

RootVector::RootVector(int ell, std::vector<int> coeffs) : coeffs_(std::move(coeffs)) {
    require_ell(ell);
    if (static_cast<int>(coeffs_.size()) != ell)
        throw InvalidDatum("root vector length does not match ell");
    for (int c : coeffs_)
        if (c < 0) throw InvalidDatum("root vector coefficients must be nonnegative");
}

RootVector RootVector::simple(Residue i) {
    RootVector nu(i.ell());
    nu.add(i);
    return nu;
}

int RootVector::operator[](Residue i) const {
    require_same_ell(ell(), i.ell());
    return coeffs_[static_cast<std::size_t>(i.value())];
}

int RootVector::height() const noexcept { return std::accumulate(coeffs_.begin(), coeffs_.end(), 0); }

void RootVector::add(Residue i, int count) {
    require_same_ell(ell(), i.ell());
    int& c = coeffs_[static_cast<std::size_t>(i.value())];
    if (c + count < 0) throw InvalidDatum("root vector coefficient would become negative");
    c += count;
}

RootVector& RootVector::operator+=(const RootVector& other) {
    require_same_ell(ell(), other.ell());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

RootVector& RootVector::operator-=(const RootVector& other) {
    require_same_ell(ell(), other.ell());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (coeffs_[k] < other.coeffs_[k]) throw InvalidDatum("root subtraction leaves Q^+");
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
}

CorootWeight::CorootWeight(int ell) : evals_(static_cast<std::size_t>((require_ell(ell), ell)), 0) {}

CorootWeight::CorootWeight(int ell, std::vector<int> evals) : evals_(std::move(evals)) {
    require_ell(ell);
    if (static_cast<int>(evals_.size()) != ell)
        throw InvalidDatum("weight length does not match ell");
}

CorootWeight CorootWeight::fundamental(Residue i) {
    CorootWeight w(i.ell());
    w.evals_[static_cast<std::size_t>(i.value())] = 1;
    return w;
}

CorootWeight CorootWeight::of_root(const RootVector& nu) {
    const int ell = nu.ell();
    CorootWeight w(ell);
    for (int j = 0; j < ell; ++j) w.evals_[static_cast<std::size_t>(j)] = -pair_coroot(ell, Residue(ell, j), nu);
    return w;
}

int CorootWeight::operator[](Residue j) const {
    require_same_ell(ell(), j.ell());
    return evals_[static_cast<std::size_t>(j.value())];
}

bool CorootWeight::dominant() const noexcept {
    for (int e : evals_)
        if (e < 0) return false;
    return true;
}

CorootWeight& CorootWeight::operator+=(const CorootWeight& other) {
    require_same_ell(ell(), other.ell());
    for (std::size_t k = 0; k < evals_.size(); ++k) evals_[k] += other.evals_[k];
    return *this;
}

CorootWeight& CorootWeight::operator-=(const CorootWeight& other) {
    require_same_ell(ell(), other.ell());
    for (std::size_t k = 0; k < evals_.size(); ++k) evals_[k] -= other.evals_[k];
    return *this;
}

int cartan_entry(int ell, Residue i, Residue j) {
    require_ell(ell);
    require_same_ell(ell, i.ell());
    require_same_ell(ell, j.ell());
    if (i == j) return 2;
    if (ell == 2) return -2;
    if (j == i.succ() || j == i.pred()) return -1;
    return 0;
}

int symmetric_form(int ell, Residue i, Residue j) {
    // Simply laced: (α_i, α_i) = 2 makes the form coincide with a_{ij}.
    return cartan_entry(ell, i, j);
}

RootVector gamma(int ell, Residue i, int k, Direction direction) {
    require_same_ell(ell, i.ell());
    if (k < 0) throw InvalidDatum("gamma: k must be nonnegative");
    RootVector nu(ell);
    const int step = direction == Direction::plus ? 1 : -1;
    for (int t = 0; t < k; ++t) nu.add(i + static_cast<long long>(step) * t);
    return nu;
}

int pair_coroot(int ell, Residue j, const RootVector& nu) {
    require_same_ell(ell, nu.ell());
    int sum = 0;
    for (int i = 0; i < ell; ++i) sum += cartan_entry(ell, j, Residue(ell, i)) * nu.coeff(i);
    return sum;
}

namespace {

std::string join(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(v[k]);
    }
    return out + ")";
}

}  // namespace

std::string to_string(const RootVector& nu) { return join(nu.coeffs()); }
std::string to_string(const CorootWeight& w) { return join(w.evals()); }

}  // namespace levelone
