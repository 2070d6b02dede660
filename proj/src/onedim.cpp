#include "levelone/onedim.hpp"

#include <algorithm>
#include <set>

namespace levelone {

namespace {

bool adjacent(int ell, int a, int b) { return a != b && cartan_entry(ell, Residue(ell, a), Residue(ell, b)) < 0; }

// ψ_r² 1_i acting on v, with x = 0.
int square_rhs(int ell, int a, int b) {
    if (a == b) return 0;
    if (adjacent(ell, a, b)) return 0;  // x_r^{-a} + x_{r+1}^{-a}
    return 1;
}

// (ψ_r ψ_{r+1} ψ_r - ψ_{r+1} ψ_r ψ_{r+1}) 1_i acting on v, with x = 0.
int braid_rhs(int ell, int a, int b, int c) {
    if (a == c && adjacent(ell, a, b)) return ell > 2 ? 1 : 0;  // ℓ = 2: x_r + x_{r+2}
    return 0;
}

struct Solver {
    int ell;
    const Seq& s;
    std::vector<int> a;

    bool dfs(std::size_t r) {
        const std::size_t m = s.size();
        if (r + 1 >= m) return true;
        for (int v : {-1, 0, 1}) {
            // ψ_r 1_i = 1_{s_r i} ψ_r: only a fixed sequence can keep v in place
            if (v != 0 && s[r] != s[r + 1]) continue;
            if (v * v != square_rhs(ell, s[r], s[r + 1])) continue;
            a[r] = v;
            if (r >= 1) {
                const int lhs = a[r - 1] * a[r] * a[r - 1] - a[r] * a[r - 1] * a[r];
                if (lhs != braid_rhs(ell, s[r - 1], s[r], s[r + 1])) continue;
            }
            if (dfs(r + 1)) return true;
        }
        return false;
    }
};

Seq decode(long long index, int ell, int m) {
    Seq s(static_cast<std::size_t>(m), 0);
    for (int r = m - 1; r >= 0; --r) {
        s[static_cast<std::size_t>(r)] = static_cast<int>(index % ell);
        index /= ell;
    }
    return s;
}

long long power(int ell, int m) {
    long long n = 1;
    for (int r = 0; r < m; ++r) n *= ell;
    return n;
}

void check_args(int ell, int m) {
    require_ell(ell);
    if (m < 1) throw InvalidDatum("sequence length must be >= 1");
    if (m > 12) throw InvalidDatum("sequence length above 12 is not supported by the brute-force search");
}

}  // namespace

std::optional<std::vector<int>> onedim_solve(int ell, const Seq& seq) {
    require_ell(ell);
    Seq s = seq;
    for (int& x : s) x = ((x % ell) + ell) % ell;
    // dot past crossing: (ψ_r x_r - x_{r+1} ψ_r) 1_i = 1_i when i_r = i_{r+1},
    // but the left side is 0 once x = 0.
    for (std::size_t r = 0; r + 1 < s.size(); ++r)
        if (s[r] == s[r + 1]) return std::nullopt;
    Solver solver{ell, s, std::vector<int>(s.empty() ? 0 : s.size() - 1, 0)};
    if (!solver.dfs(0)) return std::nullopt;
    return solver.a;
}

std::vector<Seq> onedim_classify_serial(int ell, int m) {
    check_args(ell, m);
    std::vector<Seq> out;
    const long long total = power(ell, m);
    for (long long k = 0; k < total; ++k) {
        auto s = decode(k, ell, m);
        if (onedim_solve(ell, s)) out.push_back(std::move(s));
    }
    return out;
}

std::vector<Seq> onedim_classify(int ell, int m) {
    check_args(ell, m);
    const long long total = power(ell, m);
    std::vector<char> ok(static_cast<std::size_t>(total), 0);
#pragma omp parallel for schedule(static)
    for (long long k = 0; k < total; ++k) ok[static_cast<std::size_t>(k)] = onedim_solve(ell, decode(k, ell, m)) ? 1 : 0;
    std::vector<Seq> out;
    for (long long k = 0; k < total; ++k)
        if (ok[static_cast<std::size_t>(k)]) out.push_back(decode(k, ell, m));
    return out;
}

std::vector<Seq> onedim_families(int ell, int m) {
    check_args(ell, m);
    std::set<Seq> all;
    for (int i = 0; i < ell; ++i) {
        Seq up, down;
        for (int t = 0; t < m; ++t) {
            up.push_back((i + t) % ell);
            down.push_back(((i - t) % ell + ell) % ell);
        }
        all.insert(up);
        all.insert(down);
    }
    return {all.begin(), all.end()};
}

namespace {

struct Factor {
    std::string name;
    int length;
    Character chr;
};

std::vector<Factor> serre_factors(int ell, int max_len) {
    std::vector<Factor> out;
    std::set<std::string> seen;
    auto push = [&](std::string name, int len, Character c) {
        c = c.at_q1();
        if (seen.insert(to_json(c)).second) out.push_back({std::move(name), len, std::move(c)});
    };
    for (int k = 1; k <= max_len; ++k)
        for (int i = 0; i < ell; ++i) {
            const auto tag = "(" + std::to_string(i) + ";" + std::to_string(k) + ")";
            push("T" + tag, k, char_trivial(ell, i, k));
            push("S" + tag, k, char_sign(ell, i, k));
            push("L" + tag, k, char_Lin(ell, i, k));
        }
    return out;
}

// Multisets of factor indices (nondecreasing) with total length <= max_len.
void multisets(const std::vector<Factor>& f, int max_len, std::size_t from, int used, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
    if (!cur.empty()) out.push_back(cur);
    for (std::size_t k = from; k < f.size(); ++k) {
        if (used + f[k].length > max_len) continue;
        cur.push_back(k);
        multisets(f, max_len, k, used + f[k].length, cur, out);
        cur.pop_back();
    }
}

struct SweepPlan {
    int ell;
    std::vector<Factor> factors;
    std::vector<std::vector<std::size_t>> products;
};

SweepPlan plan(int ell, int max_len) {
    require_ell(ell);
    if (max_len < 0) throw InvalidDatum("max_len must be nonnegative");
    SweepPlan p{ell, serre_factors(ell, max_len), {}};
    std::vector<std::size_t> cur;
    multisets(p.factors, max_len, 0, 0, cur, p.products);
    return p;
}

std::vector<SerreFailure> sweep_one(const SweepPlan& p, const std::vector<std::size_t>& prod, std::size_t& checks) {
    Character c = Character::unit(p.ell);
    std::string name;
    for (std::size_t k : prod) {
        c = qshuffle(c, p.factors[k].chr).at_q1();
        if (!name.empty()) name += " ⧢ ";
        name += p.factors[k].name;
    }
    std::vector<SerreFailure> fails;
    for (int i = 0; i < p.ell; ++i)
        for (int j = 0; j < p.ell; ++j) {
            if (i == j) continue;
            ++checks;
            auto d = serre_defect(c, i, j);
            if (!d.vanishes())
                fails.push_back({name, i, j, d.indivisible ? "indivisible divided power" : to_json(d.defect)});
        }
    return fails;
}

}  // namespace

SerreSweep serre_sweep_serial(int ell, int max_len) {
    const auto p = plan(ell, max_len);
    SerreSweep s;
    s.products = p.products.size();
    for (const auto& prod : p.products) {
        auto f = sweep_one(p, prod, s.checks);
        s.failures.insert(s.failures.end(), f.begin(), f.end());
    }
    return s;
}

SerreSweep serre_sweep(int ell, int max_len) {
    const auto p = plan(ell, max_len);
    const auto n = static_cast<long>(p.products.size());
    std::vector<std::vector<SerreFailure>> fails(p.products.size());
    std::vector<std::size_t> checks(p.products.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        const auto u = static_cast<std::size_t>(k);
        fails[u] = sweep_one(p, p.products[u], checks[u]);
    }
    SerreSweep s;
    s.products = p.products.size();
    for (std::size_t k = 0; k < fails.size(); ++k) {
        s.checks += checks[k];
        s.failures.insert(s.failures.end(), fails[k].begin(), fails[k].end());
    }
    return s;
}

}  // namespace levelone
