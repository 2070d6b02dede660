#include "levelone/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"
#include "levelone/character.hpp"
#include "levelone/crystal.hpp"
#include "levelone/hw_crystal.hpp"
#include "levelone/onedim.hpp"

namespace levelone {

void Report::expect(bool cond, const std::string& check, const std::string& witness) {
    if (cond) {
        ++passed;
        return;
    }
    ++failed;
    failures.push_back({check, witness});
}

IsoDirection parse_direction(std::string_view name) {
    if (name == "row") return IsoDirection::row;
    if (name == "column") return IsoDirection::column;
    if (name == "both") return IsoDirection::both;
    throw UsageError("unknown direction '" + std::string(name) + "' (expected row|column)");
}

namespace {

template <class P>
constexpr bool row_model = std::is_same_v<P, RestrictedPartition>;

// First row (restricted model) or first column height (regular model).
template <class P>
int head(const P& lam) {
    if constexpr (row_model<P>)
        return lam.empty() ? 0 : lam.parts.front();
    else
        return static_cast<int>(lam.parts.size());
}

void require_depth(int depth) {
    if (depth < 0) throw InvalidDatum("depth must be nonnegative");
}

template <Crystal T>
std::vector<typename T::Node> bfs_nodes(const T& c, const typename T::Node& root, int depth) {
    std::vector<typename T::Node> all{root};
    std::set<std::string> seen{c.serialize(root)};
    std::size_t begin = 0;
    for (int d = 0; d < depth; ++d) {
        const std::size_t end = all.size();
        for (std::size_t k = begin; k < end; ++k)
            for (int j = 0; j < c.ell(); ++j) {
                auto t = c.f(Residue(c.ell(), j), all[k]);
                if (t && seen.insert(c.serialize(*t)).second) all.push_back(std::move(*t));
            }
        begin = end;
    }
    return all;
}

template <class P>
void iso_model(Report& rep, const PartitionCrystal<P>& c, int depth) {
    const std::string tag = row_model<P> ? "row: " : "column: ";
    const int ell = c.ell();
    const int i = c.hw().value();
    const auto nodes = nodes_to_depth(c, depth);
    const TensorCrystal T(c.perfect(), c.lower());
    using TN = typename decltype(T)::Node;
    auto psi = [&](const P& lam) {
        auto [b, mu] = c.peel(lam);
        return std::optional<TN>(TN{b, std::move(mu)});
    };
    const auto target = bfs_nodes(T, *psi(c.highest()), depth);
    const auto m = check_morphism(psi, c, T, nodes, true, target);

    std::map<std::string, std::string> bad;
    for (const auto& v : m.violations)
        bad.emplace(v.node, v.axiom + " at color " + std::to_string(v.color) + ": " + v.detail);
    for (const auto& lam : nodes) {
        const auto id = c.serialize(lam);
        auto it = bad.find(id);
        rep.expect(it == bad.end(), tag + "strict morphism", id + (it == bad.end() ? "" : " " + it->second));
    }
    rep.expect(m.injective, tag + "injective", "image collision");
    std::string missing;
    for (const auto& t : target)
        if (bad.contains(T.serialize(t))) missing = T.serialize(t);
    rep.expect(m.surjective && target.size() == nodes.size(), tag + "surjective onto truncated tensor",
               missing.empty() ? std::to_string(target.size()) + " vs " + std::to_string(nodes.size()) : missing);

    for (const auto& lam : nodes) {
        const auto [b, mu] = c.peel(lam);
        const int h = head(lam);
        const Residue want = row_model<P> ? Residue(ell, i + h - 1) : Residue(ell, i + 1 - h);
        rep.expect(b.label == want, tag + "peeled label",
                   c.serialize(lam) + " -> b_" + std::to_string(b.label.value()) + ", expected b_" +
                       std::to_string(want.value()));
        if (h == 0) continue;
        const Character ch = row_model<P> ? char_trivial(ell, i, h) : char_sign(ell, i, h);
        const int last = ch.terms().begin()->first.back();
        rep.expect(last == b.label.value(), tag + (row_model<P> ? "trailing letter of T(i;k)" : "trailing letter of S(i;k)"),
                   c.serialize(lam) + ": letter " + std::to_string(last));
    }
    rep.nodes_checked = nodes.size();
}

template <class P>
void case_split_model(Report& rep, const PartitionCrystal<P>& c, int depth) {
    const std::string tag = row_model<P> ? "row: " : "column: ";
    const int ell = c.ell();
    const int i = c.hw().value();
    const auto low = c.lower();
    const auto Lambda = CorootWeight::fundamental(low.hw());
    const auto nodes = nodes_to_depth(c, depth);
    for (const auto& lam : nodes) {
        const auto [b, mu] = c.peel(lam);
        const int h = head(lam);
        for (int jv = 0; jv < ell; ++jv) {
            const Residue j(ell, jv);
            const std::string w = c.serialize(lam) + " j=" + std::to_string(jv);
            const int eps_b = c.perfect().eps(j, b);
            const int closed = row_model<P> ? delta(ell, jv, i + h - 1) : delta(ell, jv, i + 1 - h);
            rep.expect(eps_b == closed, tag + "eps of the peeled factor", w);
            const int phi_mu = phcyc_stat(low, Lambda, mu, j);

            const auto f = c.f(j, lam);
            if (eps_b >= phi_mu) {
                if (f) {
                    const auto [fb, fmu] = c.peel(*f);
                    rep.expect(fmu == mu && head(*f) == h + 1, tag + "f acts on the first factor", w);
                } else {
                    rep.expect(!c.perfect().f(j, b), tag + "f vanishes only with the first factor", w);
                }
            } else {
                const bool moved = f && c.peel(*f).second != mu && head(*f) == h;
                rep.expect(moved, tag + "f acts on the lower factor", w);
            }

            const auto e = c.e(j, lam);
            if (eps_b > phi_mu) {
                const bool first = e && c.peel(*e).second == mu && head(*e) == h - 1;
                rep.expect(first, tag + "e acts on the first factor", w);
            } else if (e) {
                const auto [eb, emu] = c.peel(*e);
                rep.expect(emu != mu && head(*e) == h, tag + "e acts on the lower factor", w);
            } else {
                rep.expect(low.e(j, mu) == std::nullopt, tag + "e vanishes only with the lower factor", w);
            }
        }
    }
    rep.nodes_checked = nodes.size();
}

int jump_from_char(const Character& ch, int j) {
    const int ell = ch.ell();
    const auto nu = ch.content().value_or(RootVector(ell));
    return -pair_coroot(ell, Residue(ell, j), nu) + eps_from_char(ch, j, Side::right) + eps_from_char(ch, j, Side::left);
}

}  // namespace

Report verify_iso(int ell, int i, int depth, IsoDirection direction) {
    require_ell(ell);
    require_depth(depth);
    Report rep{"iso", {{"ell", ell}, {"hw", Residue(ell, i).value()}, {"depth", depth}}, 0, 0, {}, 0};
    rep.params.emplace_back("direction", std::string(direction == IsoDirection::row      ? "row"
                                                     : direction == IsoDirection::column ? "column"
                                                                                         : "both"));
    if (direction != IsoDirection::column) iso_model(rep, restricted_crystal(ell, i), depth);
    if (direction != IsoDirection::row) iso_model(rep, regular_crystal(ell, i), depth);
    return rep;
}

Report verify_case_split(int ell, int i, int depth) {
    require_ell(ell);
    require_depth(depth);
    Report rep{"casesplit", {{"ell", ell}, {"hw", Residue(ell, i).value()}, {"depth", depth}}, 0, 0, {}, 0};
    case_split_model(rep, restricted_crystal(ell, i), depth);
    case_split_model(rep, regular_crystal(ell, i), depth);
    return rep;
}

Report verify_trivial_family(int ell, int kmax) {
    require_ell(ell);
    if (kmax < 1) throw InvalidDatum("kmax must be >= 1");
    Report rep{"trivial", {{"ell", ell}, {"kmax", kmax}}, 0, 0, {}, 0};
    auto d = [ell](long long a, long long b) { return delta(ell, a, b); };

    for (int i = 0; i < ell; ++i) {
        const auto c = restricted_crystal(ell, i);
        const auto Li = CorootWeight::fundamental(Residue(ell, i));
        for (int k = 1; k <= kmax; ++k) {
            const auto T = char_trivial(ell, i, k);
            const auto nu = T.content().value();
            const std::string wk = "T(" + std::to_string(i) + ";" + std::to_string(k) + ")";

            // closed forms from character statistics
            for (int j = 0; j < ell; ++j) {
                const std::string w = wk + " j=" + std::to_string(j);
                const int wt = -pair_coroot(ell, Residue(ell, j), nu);
                const int er = eps_from_char(T, j, Side::right);
                const int el = eps_from_char(T, j, Side::left);
                rep.expect(wt == d(j, i - 1) - d(j, i) + d(j, i + k) - d(j, i + k - 1), "weight closed form", w);
                rep.expect(wt + er + el == d(j, i - 1) + d(j, i + k), "jump closed form", w);
                rep.expect(Li.eval(j) + er + wt == d(j, i - 1) + d(j, i + k), "phi^Lambda closed form", w);
            }

            // the crystal node of T(i;k): f_{i+k-1} ... f_{i+1} f_i ∅
            std::vector<int> chain;
            for (int t = 0; t < k; ++t) chain.push_back(i + t);
            const auto node = f_chain(c, c.highest(), chain);
            rep.expect(node.has_value(), "f-chain of T(i;k) is nonzero", wk);
            if (node) {
                const int first = node->parts.front();
                rep.expect(first == std::min(ell - 1, k), "first row is min(ell-1, k)",
                           wk + " -> " + c.serialize(*node));
                rep.expect(nu_of(ell, c.hw(), node->parts) == nu, "node content equals T(i;k) content",
                           wk + " -> " + c.serialize(*node));
                for (int j = 0; j < ell; ++j) {
                    const Residue rj(ell, j);
                    const std::string w = wk + " j=" + std::to_string(j);
                    const int phc = phcyc_stat(c, Li, *node, rj);
                    const int closed = d(j, i - 1) + d(j, i + k);
                    rep.expect(phc == closed, "phi^Lambda on the crystal node", w);
                    rep.expect(phc == jump_stat(c, *node, rj), "phi^Lambda equals jump", w);
                    // survival of f̃_j^n under pr is n <= φ^Λ_j
                    rep.expect(string_phi(c, rj, *node, closed + 2) == closed, "f-string length equals phi^Lambda", w);
                    const bool survives = c.f(rj, *node).has_value();
                    rep.expect(survives == (d(j, i - 1) || d(j, i + k)), "f survives exactly at i-1 and i+k", w);
                }
                const bool wrap = d(k, -1);
                const auto twice = [&](int j) { return f_chain(c, *node, {j, j}); };
                if (!wrap) {
                    rep.expect(!twice(i + k), "f_{i+k}^2 vanishes", wk);
                    rep.expect(!twice(i - 1), "f_{i-1}^2 vanishes", wk);
                } else {
                    rep.expect(twice(i - 1).has_value(), "f_{i-1}^2 survives when k = -1", wk);
                    rep.expect(!f_chain(c, *node, {i - 1, i - 1, i - 1}), "f_{i-1}^3 vanishes when k = -1", wk);
                }
            }

            // induced module ind T(i;k) ⊠ L(i-1) has a (k+1)-element basis
            const auto prod = qshuffle(T, char_trivial(ell, i - 1, 1));
            long long mass = 0;
            for (const auto& [s, p] : prod.terms()) mass += p.at_q1();
            rep.expect(mass == k + 1, "mass of T(i;k) shuffle [i-1]", wk + " mass " + std::to_string(mass));
        }

        // jump along R^t(T(i;m)) = T(i+t; m-t), 0 <= t <= r = min(ell-1, m);
        // needs R^r(A) != 1, i.e. m >= ell
        for (int m = ell; m <= kmax; ++m) {
            const int r = std::min(ell - 1, m);
            for (int j = 0; j < ell; ++j) {
                const int J = jump_from_char(char_trivial(ell, i + r, m - r), j);
                const int jj = j - i;  // the table is stated for i = 0
                for (int t = 0; t <= r; ++t) {
                    const int got = jump_from_char(char_trivial(ell, i + t, m - t), j);
                    const bool hit = d(t, jj + 1);
                    int want;
                    if (!d(r, jj + 1))
                        want = hit ? J + 1 : J;
                    else if (J != 0)
                        want = hit ? J : J - 1;
                    else
                        want = (t == 0 || t == r) ? 0 : (hit ? 1 : 0);
                    rep.expect(got == want, "jump table along R^t",
                               "T(" + std::to_string(i) + ";" + std::to_string(m) + ") t=" + std::to_string(t) +
                                   " j=" + std::to_string(j) + " got " + std::to_string(got));
                }
            }
        }
    }
    return rep;
}

Report verify_counts(int ell, int i, int nmax) {
    require_ell(ell);
    if (nmax < 0) throw InvalidDatum("nmax must be nonnegative");
    Report rep{"counts", {{"ell", ell}, {"hw", Residue(ell, i).value()}, {"depth", nmax}}, 0, 0, {}, 0};
    const auto rl = levels(restricted_crystal(ell, i), nmax);
    const auto gl = levels(regular_crystal(ell, i), nmax);
    for (int n = 0; n <= nmax; ++n) {
        const auto un = static_cast<std::size_t>(n);
        std::set<Parts> rs, gs;
        for (const auto& p : rl[un]) rs.insert(p.parts);
        for (const auto& p : gl[un]) gs.insert(p.parts);
        const auto rd = restricted_partitions(ell, n);
        const auto gd = regular_partitions(ell, n);
        const std::string w = "n=" + std::to_string(n) + " crystal " + std::to_string(rl[un].size()) + "/" +
                              std::to_string(gl[un].size()) + " direct " + std::to_string(rd.size()) + "/" +
                              std::to_string(gd.size());
        rep.expect(rs == std::set<Parts>(rd.begin(), rd.end()), "restricted level equals restricted partitions", w);
        rep.expect(gs == std::set<Parts>(gd.begin(), gd.end()), "regular level equals regular partitions", w);
        rep.expect(rl[un].size() == gl[un].size(), "models have equal level sizes", w);
        rep.nodes_checked += rl[un].size() + gl[un].size();
    }
    return rep;
}

Report verify_axioms(int ell, int i, int depth) {
    require_ell(ell);
    require_depth(depth);
    Report rep{"axioms", {{"ell", ell}, {"hw", Residue(ell, i).value()}, {"depth", depth}}, 0, 0, {}, 0};
    auto record = [&](const std::string& name, const AxiomReport& a) {
        std::set<std::string> bad;
        for (const auto& v : a.violations) {
            rep.expect(false, name + ": " + v.axiom, v.node + " j=" + std::to_string(v.color) + " " + v.detail);
            bad.insert(v.node);
        }
        rep.passed += a.nodes_checked - bad.size();
        rep.nodes_checked += a.nodes_checked;
    };
    const auto B = b11(ell);
    const auto O = bopp(ell);
    std::vector<PerfectNode> bn, on;
    for (int k = 0; k < ell; ++k) {
        bn.push_back(B.node(k));
        on.push_back(O.node(k));
    }
    record("B11", check_axioms(B, bn));
    record("Bopp", check_axioms(O, on));
    const auto r = restricted_crystal(ell, i);
    record("restricted", check_axioms(r, nodes_to_depth(r, depth)));
    const auto g = regular_crystal(ell, i);
    record("regular", check_axioms(g, nodes_to_depth(g, depth)));
    const TensorCrystal T(B, r.lower());
    record("B11 x lower", check_axioms(T, bfs_nodes(T, {B.node(i - 1), r.lower().highest()}, depth)));
    return rep;
}

Report verify_serre(int ell, int max_len) {
    require_ell(ell);
    Report rep{"serre", {{"ell", ell}, {"depth", max_len}}, 0, 0, {}, 0};
    const auto s = serre_sweep(ell, max_len);
    for (const auto& f : s.failures)
        rep.expect(false, "serre defect vanishes",
                   f.product + " (i,j)=(" + std::to_string(f.i) + "," + std::to_string(f.j) + ") " + f.detail);
    rep.passed += s.checks - s.failures.size();
    rep.nodes_checked = s.products;
    return rep;
}

std::vector<Report> run_suites(const std::vector<std::string>& suites, int ell, const std::vector<int>& hws,
                               int depth) {
    require_ell(ell);
    static const std::vector<std::string> order{"axioms", "iso", "casesplit", "trivial", "serre", "counts"};
    std::set<std::string> want;
    for (const auto& s : suites) {
        if (s == "all")
            want.insert(order.begin(), order.end());
        else if (std::find(order.begin(), order.end(), s) != order.end())
            want.insert(s);
        else
            throw UsageError("unknown suite '" + s + "'");
    }
    struct Task {
        std::string suite;
        int i;
    };
    std::vector<Task> tasks;
    for (const auto& s : order) {
        if (!want.contains(s)) continue;
        if (s == "trivial" || s == "serre")
            tasks.push_back({s, 0});
        else
            for (int i : hws) tasks.push_back({s, i});
    }
    std::vector<Report> out(tasks.size());
    std::vector<std::string> errors(tasks.size());
    const auto n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) {
        const auto& t = tasks[static_cast<std::size_t>(k)];
        auto& r = out[static_cast<std::size_t>(k)];
        try {
            if (t.suite == "axioms") r = verify_axioms(ell, t.i, depth);
            if (t.suite == "iso") r = verify_iso(ell, t.i, depth);
            if (t.suite == "casesplit") r = verify_case_split(ell, t.i, depth);
            if (t.suite == "trivial") r = verify_trivial_family(ell, std::max(depth, 1));
            if (t.suite == "serre") r = verify_serre(ell, depth);
            if (t.suite == "counts") r = verify_counts(ell, t.i, depth);
        } catch (const std::exception& e) {
            errors[static_cast<std::size_t>(k)] = e.what();
        }
    }
    for (const auto& e : errors)
        if (!e.empty()) throw InvalidDatum(e);
    return out;
}

namespace {

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) {
        if (std::holds_alternative<int>(v))
            j["params"][k] = std::get<int>(v);
        else
            j["params"][k] = std::get<std::string>(v);
    }
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"check", f.check}, {"witness", f.witness}});
    j["nodes_checked"] = r.nodes_checked;
    return j;
}

}  // namespace

std::string to_json(const Report& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<Report>& rs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& r : rs) a.push_back(report_json(r));
    return a.dump(2) + "\n";
}

}  // namespace levelone
