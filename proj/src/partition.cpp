#include "levelone/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace levelone {

bool is_partition(const Parts& parts) {
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (parts[r] <= 0) return false;
        if (r > 0 && parts[r] > parts[r - 1]) return false;
    }
    return true;
}

bool is_restricted(int ell, const Parts& parts) {
    if (!is_partition(parts)) return false;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        const int next = r + 1 < parts.size() ? parts[r + 1] : 0;
        if (parts[r] - next >= ell) return false;
    }
    return true;
}

bool is_regular(int ell, const Parts& parts) {
    if (!is_partition(parts)) return false;
    std::size_t run = 0;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        run = (r > 0 && parts[r] == parts[r - 1]) ? run + 1 : 1;
        if (run >= static_cast<std::size_t>(ell)) return false;
    }
    return true;
}

Parts transpose(const Parts& parts) {
    Parts t;
    if (parts.empty()) return t;
    t.resize(static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts)
        for (int c = 0; c < p; ++c) ++t[static_cast<std::size_t>(c)];
    return t;
}

int size(const Parts& parts) { return std::accumulate(parts.begin(), parts.end(), 0); }

void validate(const RestrictedPartition& p) {
    if (!is_restricted(p.hw.ell(), p.parts))
        throw InvalidDatum("not an " + std::to_string(p.hw.ell()) + "-restricted partition: " + serialize(p));
}

void validate(const RegularPartition& p) {
    if (!is_regular(p.hw.ell(), p.parts))
        throw InvalidDatum("not an " + std::to_string(p.hw.ell()) + "-regular partition: " + serialize(p));
}

RestrictedPartition make_restricted(Residue hw, Parts parts) {
    RestrictedPartition p{std::move(parts), hw};
    validate(p);
    return p;
}

RegularPartition make_regular(Residue hw, Parts parts) {
    RegularPartition p{std::move(parts), hw};
    validate(p);
    return p;
}

namespace {

std::string label(char prefix, Residue hw, const Parts& parts) {
    std::string s(1, prefix);
    s += std::to_string(hw.value());
    s += ':';
    for (std::size_t r = 0; r < parts.size(); ++r) {
        if (r > 0) s += ',';
        s += std::to_string(parts[r]);
    }
    return s;
}

int parse_int(std::string_view s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end || s.empty()) throw InvalidDatum("bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::string serialize(const RestrictedPartition& p) { return label('R', p.hw, p.parts); }
std::string serialize(const RegularPartition& p) { return label('G', p.hw, p.parts); }

std::pair<Parts, int> parse_partition_label(std::string_view text, char prefix) {
    const auto colon = text.find(':');
    if (text.empty() || text.front() != prefix || colon == std::string_view::npos)
        throw InvalidDatum("bad partition label '" + std::string(text) + "'");
    const int hw = parse_int(text.substr(1, colon - 1));
    Parts parts;
    auto rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        parts.push_back(parse_int(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return {parts, hw};
}

Residue residue(int ell, Residue i, int r, int c) {
    require_same_ell(ell, i.ell());
    if (r < 1 || c < 1) throw InvalidDatum("box coordinates are 1-based");
    return i + (c - r);
}

RootVector nu_of(int ell, Residue i, const Parts& parts) {
    RootVector nu(ell);
    for (std::size_t r = 0; r < parts.size(); ++r)
        for (int c = 1; c <= parts[r]; ++c) nu.add(residue(ell, i, static_cast<int>(r) + 1, c));
    return nu;
}

std::pair<PerfectNode, RestrictedPartition> phi_peel(const RestrictedPartition& lambda) {
    validate(lambda);
    const Residue i = lambda.hw;
    const int first = lambda.empty() ? 0 : lambda.parts.front();
    Parts rest(lambda.parts.size() > 1 ? lambda.parts.begin() + 1 : lambda.parts.end(), lambda.parts.end());
    return {PerfectNode{i + (first - 1), PerfectFamily::b11}, RestrictedPartition{std::move(rest), i.pred()}};
}

RestrictedPartition phi_unpeel(Residue i, const PerfectNode& k, const RestrictedPartition& mu) {
    validate(mu);
    require_same_ell(i.ell(), k.label.ell());
    if (!(mu.hw == i.pred())) throw InvalidDatum("lower factor must lie in B(Λ_{i-1})");
    const int ell = i.ell();
    const int floor = mu.empty() ? 0 : mu.parts.front();
    const int want = (k.label + (1 - i.value())).value();
    const int first = floor + ((want - floor) % ell + ell) % ell;
    RestrictedPartition lambda{{}, i};
    if (first > 0) lambda.parts.push_back(first);
    lambda.parts.insert(lambda.parts.end(), mu.parts.begin(), mu.parts.end());
    return lambda;
}

std::pair<PerfectNode, RegularPartition> phiop_peel(const RegularPartition& lambda) {
    validate(lambda);
    const Residue i = lambda.hw;
    const int t = static_cast<int>(lambda.parts.size());
    Parts rest;
    for (int p : lambda.parts)
        if (p > 1) rest.push_back(p - 1);
    return {PerfectNode{i + (1 - t), PerfectFamily::bopp}, RegularPartition{std::move(rest), i.succ()}};
}

RegularPartition phiop_unpeel(Residue i, const PerfectNode& k, const RegularPartition& mu) {
    validate(mu);
    require_same_ell(i.ell(), k.label.ell());
    if (!(mu.hw == i.succ())) throw InvalidDatum("lower factor must lie in B(Λ_{i+1})");
    const int ell = i.ell();
    const int len = static_cast<int>(mu.parts.size());
    const int want = (i + (1 - k.label.value())).value();
    const int t = len + ((want - len) % ell + ell) % ell;
    RegularPartition lambda{{}, i};
    for (int r = 0; r < t; ++r) lambda.parts.push_back(r < len ? mu.parts[static_cast<std::size_t>(r)] + 1 : 1);
    return lambda;
}

std::vector<Parts> partitions_of(int n) {
    if (n < 0) throw InvalidDatum("partition size must be nonnegative");
    std::vector<Parts> out;
    Parts cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Parts> restricted_partitions(int ell, int n) {
    require_ell(ell);
    auto all = partitions_of(n);
    std::erase_if(all, [ell](const Parts& p) { return !is_restricted(ell, p); });
    return all;
}

std::vector<Parts> regular_partitions(int ell, int n) {
    require_ell(ell);
    auto all = partitions_of(n);
    std::erase_if(all, [ell](const Parts& p) { return !is_regular(ell, p); });
    return all;
}

}  // namespace levelone
