#include "levelone/cli.hpp"

#include <charconv>
#include <fstream>
#include <numeric>

#include "CLI11.hpp"
#include "levelone/character.hpp"
#include "levelone/error.hpp"
#include "levelone/graph.hpp"
#include "levelone/hw_crystal.hpp"
#include "levelone/onedim.hpp"
#include "levelone/verify.hpp"

namespace levelone {

namespace {

Seq parse_residues(const std::string& text, int ell) {
    Seq out;
    if (text.empty()) return out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const std::string_view tok(text.data() + pos, (comma == std::string::npos ? text.size() : comma) - pos);
        long long v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw UsageError("bad residue '" + std::string(tok) + "' in '" + text + "'");
        out.push_back(Residue(ell, v).value());
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Character word(int ell, const Seq& s) {
    Character c(ell);
    c.add(s, LaurentPoly(1));
    return c;
}

struct Options {
    int ell = 0;
    int hw = 0;
    int depth = 0;
    int len = 0;
    std::string model = "restricted";
    std::string format;
    std::string direction = "both";
    std::string left;
    std::string right;
    bool q1 = false;
    std::vector<std::string> suites;
    std::string out;
};

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + o.out + "' for writing");
    f << text;
    if (!f) throw UsageError("write to '" + o.out + "' failed");
}

std::string graph_text(const Options& o) {
    const auto format = parse_graph_format(o.format);
    if (o.depth < 0) throw InvalidDatum("depth must be nonnegative");
    CrystalGraph g;
    if (parse_model(o.model) == Model::restricted) {
        const auto c = restricted_crystal(o.ell, o.hw);
        g = build_graph(c, {c.highest()}, o.depth);
    } else {
        const auto c = regular_crystal(o.ell, o.hw);
        g = build_graph(c, {c.highest()}, o.depth);
    }
    return export_graph(g, format);
}

void require_json(const std::string& format) {
    if (format != "json") throw UsageError("unknown format '" + format + "' (expected json)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Level-one crystals and KLR characters", args.empty() ? "levelone" : args.front()};
    app.require_subcommand(1);
    Options o;

    auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "write output to FILE instead of stdout"); };

    auto* graph = app.add_subcommand("graph", "crystal graph of B(Λ_i) to a given depth");
    graph->add_option("--ell", o.ell, "rank ℓ >= 2")->required();
    graph->add_option("--hw", o.hw, "highest weight index i")->required();
    graph->add_option("--model", o.model, "restricted|regular")->capture_default_str();
    graph->add_option("--depth", o.depth, "number of boxes")->required();
    graph->add_option("--format", o.format, "dot|json")->required();
    add_out(graph);

    auto* iso = app.add_subcommand("iso", "check Φ / Φ' against the tensor product");
    iso->add_option("--ell", o.ell)->required();
    iso->add_option("--hw", o.hw)->required();
    iso->add_option("--depth", o.depth)->required();
    iso->add_option("--direction", o.direction, "row|column|both")->capture_default_str();
    iso->add_option("--format", o.format, "json")->default_val("json");
    add_out(iso);

    auto* shuffle = app.add_subcommand("shuffle", "quantum shuffle of two words");
    shuffle->add_option("--ell", o.ell)->required();
    shuffle->add_option("--left", o.left, "comma-separated residues")->required();
    shuffle->add_option("--right", o.right, "comma-separated residues")->required();
    shuffle->add_flag("--q1", o.q1, "specialize q = 1");
    add_out(shuffle);

    auto* onedim = app.add_subcommand("onedim", "residue sequences carrying a 1-dimensional module");
    onedim->add_option("--ell", o.ell)->required();
    onedim->add_option("--len", o.len)->required();
    add_out(onedim);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", o.suites, "axioms|iso|casesplit|trivial|serre|counts|all")->required();
    verify->add_option("--ell", o.ell)->required();
    auto* hw_opt = verify->add_option("--hw", o.hw, "default: every i");
    verify->add_option("--depth", o.depth)->required();
    verify->add_option("--format", o.format, "json")->default_val("json");
    add_out(verify);

    // CLI11 consumes arguments from the back
    std::vector<std::string> rest;
    if (args.size() > 1) rest.assign(args.rbegin(), args.rend() - 1);
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (graph->parsed()) {
            emit(o, graph_text(o), out);
            return 0;
        }
        if (iso->parsed()) {
            require_json(o.format);
            const auto r = verify_iso(o.ell, o.hw, o.depth, parse_direction(o.direction));
            emit(o, to_json(r), out);
            return r.ok() ? 0 : 1;
        }
        if (shuffle->parsed()) {
            require_ell(o.ell);
            auto c = qshuffle(word(o.ell, parse_residues(o.left, o.ell)), word(o.ell, parse_residues(o.right, o.ell)));
            emit(o, to_json(o.q1 ? c.at_q1() : c), out);
            return 0;
        }
        if (onedim->parsed()) {
            std::string text;
            for (const auto& s : onedim_classify(o.ell, o.len)) {
                for (std::size_t k = 0; k < s.size(); ++k) text += (k ? "," : "") + std::to_string(s[k]);
                text += '\n';
            }
            emit(o, text, out);
            return 0;
        }
        require_json(o.format);
        require_ell(o.ell);
        std::vector<int> hws;
        if (*hw_opt)
            hws.push_back(o.hw);
        else {
            hws.resize(static_cast<std::size_t>(o.ell));
            std::iota(hws.begin(), hws.end(), 0);
        }
        const auto reports = run_suites(o.suites, o.ell, hws, o.depth);
        emit(o, reports.size() == 1 ? to_json(reports.front()) : to_json(reports), out);
        for (const auto& r : reports)
            if (!r.ok()) return 1;
        return 0;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
        return 2;
    } catch (const InvalidDatum& e) {
        err << "error: " << e.what() << "\n\n" << app.get_subcommands().front()->help();
        return 2;
    }
}

}  // namespace levelone
