#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "berge_forge/catalog.hpp"
#include "berge_forge/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(BERGE_FORGE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) r.out += buf.data();
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path fresh_dir(const std::string& name) {
    auto dir = fs::temp_directory_path() / ("berge_forge_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("compute prints the value, writes a witness and reuses the catalog") {
    const auto dir = fresh_dir("compute");
    const auto catalog = dir / "catalog.jsonl";
    setenv("BERGE_FORGE_CATALOG", catalog.c_str(), 1);
    const auto witness = dir / "w.graph";
    auto r = run("compute --universe graph --n 5 --forbid cycle=4 --objective edges --out " + witness.string());
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "6");
    const auto g = std::get<berge::Graph>(berge::io::read_witness_file(witness));
    CHECK(g.edge_count() == 6);

    r = run("compute --universe graph --n 5 --forbid cycle=4 --json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"cached\": true") != std::string::npos);
    CHECK(berge::Catalog(catalog).entries().size() == 1);

    r = run("compute --universe graph --n 5 --forbid cycle=4 --force");
    CHECK(first_line(r.out) == "6");
    CHECK(berge::Catalog(catalog).entries().size() == 1);

    r = run("compute --universe triples --n 5 --forbid berge=5 --linear");
    CHECK(first_line(r.out) == "2");
    CHECK(berge::Catalog(catalog).entries().size() == 2);
    unsetenv("BERGE_FORGE_CATALOG");
}

TEST_CASE("compute reports an exhausted budget") {
    const auto dir = fresh_dir("budget");
    setenv("BERGE_FORGE_CATALOG", (dir / "c.jsonl").c_str(), 1);
    const auto r = run("compute --n 9 --forbid cycle=4 --max-nodes 50");
    CHECK(r.code == 3);
    unsetenv("BERGE_FORGE_CATALOG");
}

TEST_CASE("bounds") {
    auto r = run("bounds --formula pikhurko-1 --k 2 --n 16");
    CHECK(r.code == 0);
    std::istringstream is(r.out);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(header.rfind("formula,parameter,n,value", 0) == 0);
    CHECK(row.rfind("pikhurko-1,2,16,320,", 0) == 0);

    r = run("bounds --formula theta-15 --l 6 --n 10 --json");
    CHECK(r.out.find("\"exact\": \"40\"") != std::string::npos);
    r = run("bounds --formula erdos-pentagon,kst-3 --n 9..10");
    CHECK(r.out.find("erdos-pentagon,0,10,32,") != std::string::npos);
    CHECK(r.out.find("kst-3,0,9,45,") != std::string::npos);
    CHECK(run("bounds --formula nope --n 3").code == 1);
}

TEST_CASE("construct round-trips and detect") {
    const auto dir = fresh_dir("construct");
    const auto bowtie_free = dir / "c6.bip";
    CHECK(run("construct bipartite-cycle --n 3 --out " + bowtie_free.string()).code == 0);
    const auto doubled = dir / "doubled.json";
    CHECK(run("construct double-one-side --in " + bowtie_free.string() + " --out " + doubled.string()).code == 0);
    CHECK(std::get<berge::TripleSystem>(berge::io::read_witness_file(doubled)).size() == 6);
    CHECK(first_line(run("detect --berge 4 --in " + doubled.string()).out) == "FREE");
    CHECK(run("detect --berge 6 --in " + doubled.string()).out.rfind("berge=6 core", 0) == 0);

    const auto single = dir / "single-edge.json";
    std::ofstream(single) << "{\"n\": 3, \"edges\": [[0, 1, 2]]}\n";
    auto r = run("detect --berge 3 --in " + single.string());
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "FREE");

    const auto blow = dir / "b.graph";
    CHECK(run("construct blowup-c5 --n 10 --out " + blow.string()).code == 0);
    CHECK(first_line(run("detect --cycle 3 --in " + blow.string()).out) == "FREE");
    CHECK(run("detect --cycle 5 --in " + blow.string()).out.rfind("cycle=5 cycle [", 0) == 0);
    const auto tri = dir / "t.json";
    CHECK(run("construct triangle-hypergraph --in " + blow.string() + " --out " + tri.string()).code == 0);
    CHECK(std::get<berge::TripleSystem>(berge::io::read_witness_file(tri)).empty());

    const auto stdout_graph = run("construct complete --n 4").out;
    CHECK(berge::io::parse_graph(stdout_graph).edge_count() == 6);
    CHECK(run("construct blowup-c5 --n 7").code == 1);
}

TEST_CASE("malformed input is a usage error") {
    const auto dir = fresh_dir("bad");
    const auto bad = dir / "bad.graph";
    std::ofstream(bad) << "n 3\n0 5\n";
    CHECK(run("detect --cycle 3 --in " + bad.string()).code == 1);
    CHECK(run("detect --cycle 3 --in " + (dir / "missing").string()).code == 1);
    CHECK(run("frobnicate").code == 1);
    CHECK(run("compute --n 5").code == 1);
}

TEST_CASE("decompose") {
    const auto dir = fresh_dir("decompose");
    const auto h = dir / "h.json";
    std::ofstream(h) << "{\"n\": 4, \"edges\": [[0,1,2],[0,1,3]]}\n";
    auto r = run("decompose --in " + h.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("h1 2\n") != std::string::npos);
    CHECK(r.out.find("h2 0\n") != std::string::npos);
    const auto g = dir / "k6.graph";
    CHECK(run("construct complete --n 6 --out " + g.string()).code == 0);
    r = run("decompose --in " + g.string() + " --json");
    CHECK(r.out.find("\"triangles\": 20") != std::string::npos);
}

TEST_CASE("verify runs selected criteria") {
    auto r = run("verify --criterion 8 --criterion 10 --seed 5");
    CHECK(r.code == 0);
    CHECK(r.out.find("seed 5") != std::string::npos);
    CHECK(r.out.find("[PASS] 8 ") != std::string::npos);
    CHECK(r.out.find("[PASS] 10 ") != std::string::npos);
    CHECK(run("verify --criterion 11").code == 1);
}
