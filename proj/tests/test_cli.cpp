#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "levelone/cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "levelone");
    std::ostringstream out, err;
    const int code = levelone::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
}

int count(const std::string& s, const std::string& needle) {
    int n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("graph: six nodes through depth 3") {
    const auto r = call({"graph", "--ell", "3", "--hw", "0", "--model", "restricted", "--depth", "3", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(count(r.out, "[shape=box]") == 6);
    CHECK(count(r.out, " -> ") == 5);
    CHECK(r.out.find("\"R0:1\" -> \"R0:1,1\" [label=\"2\"]") != std::string::npos);
}

TEST_CASE("graph: json output parses and model defaults to restricted") {
    const auto r = call({"graph", "--ell", "3", "--hw", "0", "--depth", "2", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["nodes"].size() == 4);
    const auto g = call({"graph", "--ell", "3", "--hw", "0", "--model", "regular", "--depth", "2", "--format", "json"});
    CHECK(g.code == 0);
    CHECK(g.out.find("\"G0:1,1\"") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
    const auto path = std::filesystem::temp_directory_path() / "levelone_cli_out.txt";
    const std::vector<std::vector<std::string>> invocations{
        {"graph", "--ell", "4", "--hw", "2", "--depth", "5", "--format", "dot"},
        {"graph", "--ell", "3", "--hw", "1", "--model", "regular", "--depth", "4", "--format", "json"},
        {"shuffle", "--ell", "3", "--left", "1", "--right", "0,1"},
        {"onedim", "--ell", "4", "--len", "3"},
        {"verify", "--suite", "counts", "--ell", "3", "--hw", "0", "--depth", "5", "--format", "json"},
    };
    for (auto args : invocations) {
        const auto a = call(args);
        args.push_back("--out");
        args.push_back(path.string());
        const auto b = call(args);
        CHECK(b.code == a.code);
        CHECK(b.out.empty());
        CHECK(slurp(path) == a.out);
    }
    std::filesystem::remove(path);
}

TEST_CASE("identical invocations give identical output") {
    const std::vector<std::string> args{"verify", "--suite", "all", "--ell", "3", "--depth", "4"};
    CHECK(call(args).out == call(args).out);
}

TEST_CASE("shuffle: [1] with [0,1] at l=3") {
    const auto q = call({"shuffle", "--ell", "3", "--left", "1", "--right", "0,1"});
    CHECK(q.code == 0);
    const auto doc = nlohmann::json::parse(q.out);
    REQUIRE(doc["terms"].size() == 2);
    CHECK(doc["terms"][0]["seq"] == nlohmann::json::array({0, 1, 1}));
    CHECK(doc["terms"][0]["poly"] == nlohmann::json::parse("[[-1,1],[1,1]]"));
    CHECK(doc["terms"][1]["seq"] == nlohmann::json::array({1, 0, 1}));
    CHECK(doc["terms"][1]["poly"] == nlohmann::json::parse("[[0,1]]"));

    const auto one = nlohmann::json::parse(call({"shuffle", "--ell", "3", "--left", "1", "--right", "0,1", "--q1"}).out);
    CHECK(one["terms"][0]["poly"] == nlohmann::json::parse("[[0,2]]"));
    CHECK(one["terms"][1]["poly"] == nlohmann::json::parse("[[0,1]]"));
}

TEST_CASE("shuffle: residues are reduced mod l") {
    const auto a = call({"shuffle", "--ell", "3", "--left", "4", "--right", "3,-2"});
    const auto b = call({"shuffle", "--ell", "3", "--left", "1", "--right", "0,1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("onedim: one sequence per line") {
    const auto r = call({"onedim", "--ell", "3", "--len", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1\n0,2\n1,0\n1,2\n2,0\n2,1\n");
    CHECK(call({"onedim", "--ell", "2", "--len", "4"}).out == "0,1,0,1\n1,0,1,0\n");
}

TEST_CASE("iso and verify exit 0 on passing suites") {
    const auto iso = call({"iso", "--ell", "3", "--hw", "0", "--depth", "4", "--direction", "row", "--format", "json"});
    CHECK(iso.code == 0);
    const auto doc = nlohmann::json::parse(iso.out);
    CHECK(doc["suite"] == "iso");
    CHECK(doc["failed"] == 0);
    CHECK(doc["params"]["direction"] == "row");

    const auto all = call({"verify", "--suite", "all", "--ell", "2", "--depth", "6", "--format", "json"});
    CHECK(all.code == 0);
    const auto arr = nlohmann::json::parse(all.out);
    CHECK(arr.is_array());
    for (const auto& r : arr) CHECK(r["failed"] == 0);

    const auto one = call({"verify", "--suite", "trivial", "--ell", "3", "--depth", "6"});
    CHECK(one.code == 0);
    CHECK(nlohmann::json::parse(one.out).is_object());
}

TEST_CASE("usage errors exit 2 with usage text on stderr") {
    const std::vector<std::vector<std::string>> bad{
        {},
        {"frobnicate"},
        {"graph", "--ell", "3", "--hw", "0", "--depth", "3"},
        {"graph", "--ell", "x", "--hw", "0", "--depth", "3", "--format", "dot"},
        {"graph", "--ell", "3", "--hw", "0", "--depth", "3", "--format", "svg"},
        {"graph", "--ell", "3", "--hw", "0", "--depth", "3", "--format", "dot", "--model", "young"},
        {"graph", "--ell", "1", "--hw", "0", "--depth", "3", "--format", "dot"},
        {"graph", "--ell", "3", "--hw", "0", "--depth", "-1", "--format", "dot"},
        {"iso", "--ell", "3", "--hw", "0", "--depth", "3", "--direction", "diagonal"},
        {"iso", "--ell", "3", "--hw", "0", "--depth", "3", "--format", "dot"},
        {"shuffle", "--ell", "3", "--left", "1,,2", "--right", "0"},
        {"shuffle", "--ell", "3", "--left", "a", "--right", "0"},
        {"onedim", "--ell", "3", "--len", "0"},
        {"verify", "--suite", "everything", "--ell", "3", "--depth", "3"},
        {"verify", "--suite", "all", "--ell", "3", "--depth", "3", "--format", "yaml"},
        {"graph", "--ell", "3", "--hw", "0", "--depth", "3", "--format", "dot", "--out", "/nonexistent/dir/x"},
    };
    for (const auto& args : bad) {
        const auto r = call(args);
        const std::string label = args.empty() ? std::string("(none)") : args.front();
        INFO(label);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.find("Usage:") != std::string::npos);
    }
}

TEST_CASE("help goes to stdout") {
    const auto r = call({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("graph") != std::string::npos);
}
