// berge-forge: command-line front end for the extremal search, bounds,
// constructions, detectors and the acceptance suites.

#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "berge_forge/bounds.hpp"
#include "berge_forge/catalog.hpp"
#include "berge_forge/constructions.hpp"
#include "berge_forge/decompose.hpp"
#include "berge_forge/detect.hpp"
#include "berge_forge/errors.hpp"
#include "berge_forge/io.hpp"
#include "berge_forge/verify.hpp"

using namespace berge;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kViolation = 2, kBudget = 3 };

std::string format_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string value_text(const BoundValue& b) {
    return b.exact ? b.exact->to_string() : format_double(b.value);
}

json edge_list(const std::vector<Vertex>& vs) { return json(vs); }

json indices_json(const TripleSystem& h, const EdgeIndices& idx) {
    json out = json::array();
    for (auto i : idx) out.push_back(h[i]);
    return out;
}

// Accepts "5", "3,5,9" and "4..8" (inclusive), or mixtures thereof.
std::vector<int> parse_int_list(const std::vector<std::string>& items) {
    std::vector<int> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        for (std::string tok; std::getline(ss, tok, ',');) {
            if (tok.empty()) continue;
            if (auto dots = tok.find(".."); dots != std::string::npos) {
                const int lo = std::stoi(tok.substr(0, dots));
                const int hi = std::stoi(tok.substr(dots + 2));
                if (hi < lo) throw std::invalid_argument("empty range " + tok);
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            } else {
                out.push_back(std::stoi(tok));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- compute

struct ComputeArgs {
    std::string universe = "graph";
    int n = 0;
    int m = 0;
    std::vector<std::string> forbid;
    std::string objective = "edges";
    bool linear = false;
    std::uint64_t max_nodes = 0;
    double max_seconds = 0.0;
    int threads = 1;
    bool force = false;
    bool no_catalog = false;
    std::string out;
    bool as_json = false;
};

std::string witness_extension(Universe u) {
    switch (u) {
        case Universe::Graph: return ".graph";
        case Universe::Bipartite: return ".bipartite";
        case Universe::Triples: return ".json";
    }
    return ".txt";
}

int run_compute(const ComputeArgs& a) {
    SearchProblem p;
    p.universe = parse_universe(a.universe);
    p.n = a.n;
    p.m = a.m;
    for (const auto& f : a.forbid) p.forbidden.push_back(ForbiddenSpec::parse(f));
    p.objective = parse_objective(a.objective);
    p.linear = a.linear;
    p.budget = {a.max_nodes, a.max_seconds};
    p.threads = a.threads;
    p.validate();

    const auto fp = fingerprint(p);
    Catalog catalog(Catalog::default_path());
    std::optional<CatalogEntry> entry;
    bool cached = false;
    if (!a.no_catalog && !a.force) {
        entry = catalog.find(fp);
        cached = entry && entry->optimal;
        if (!cached) entry.reset();
    }

    if (!entry) {
        const auto r = solve(p);
        std::filesystem::path witness_path = a.out;
        if (witness_path.empty()) {
            witness_path = catalog.path().parent_path() / "witnesses" / (fp + witness_extension(p.universe));
        }
        io::write_file(witness_path, io::write_witness(r.witness));
        CatalogEntry e;
        e.fingerprint = fp;
        e.problem = problem_to_json(p);
        e.value = r.value;
        e.optimal = r.optimal;
        e.witness = witness_path.string();
        e.timestamp = utc_timestamp();
        e.nodes = r.nodes_explored;
        e.seconds = r.wall_time.count();
        if (!a.no_catalog) catalog.record(e);
        entry = e;
    } else if (!a.out.empty() && entry->witness != a.out) {
        io::write_file(a.out, io::read_file(entry->witness));
    }

    if (a.as_json) {
        auto j = entry->to_json();
        j["cached"] = cached;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << entry->value << "\n";
        std::cerr << p.describe() << ": " << (entry->optimal ? "optimal" : "lower bound (budget exhausted)")
                  << (cached ? " [catalog]" : "") << ", witness " << entry->witness << "\n";
    }
    return entry->optimal ? kOk : kBudget;
}

// ----------------------------------------------------------------- bounds

struct BoundsArgs {
    std::vector<std::string> formulas;
    std::vector<std::string> params;
    std::vector<std::string> ns;
    std::string base = "formula";
    bool as_json = false;
};

int run_bounds(const BoundsArgs& a) {
    std::vector<FormulaId> ids;
    for (const auto& item : a.formulas) {
        std::stringstream ss(item);
        for (std::string tok; std::getline(ss, tok, ',');) {
            if (tok == "all") {
                ids.insert(ids.end(), all_formulas().begin(), all_formulas().end());
            } else if (!tok.empty()) {
                ids.push_back(parse_formula(tok));
            }
        }
    }
    if (ids.empty()) ids = all_formulas();
    auto params = parse_int_list(a.params);
    if (params.empty()) params = {2};
    const auto ns = parse_int_list(a.ns);
    if (ns.empty()) throw std::invalid_argument("bounds: --n is required");

    BaseEstimate base = BaseEstimate::formula();
    if (a.base == "exact") base = BaseEstimate::exact();
    else if (a.base != "formula") throw std::invalid_argument("unknown base '" + a.base + "' (formula|exact)");

    const auto table = bound_table(ids, params, ns, base);
    if (a.as_json) {
        json rows = json::array();
        for (const auto& b : table.rows) {
            rows.push_back({{"formula", std::string(formula_name(b.formula.id))},
                            {"parameter", b.formula.parameter},
                            {"n", b.n},
                            {"value", b.value},
                            {"exact", b.exact ? json(b.exact->to_string()) : json(nullptr)},
                            {"floor", b.floor_value()},
                            {"bounds", b.bounded.to_string()},
                            {"direction", b.direction == BoundDirection::Upper ? "upper" : "lower"},
                            {"asymptotic", b.asymptotic},
                            {"exact_bases", b.uses_exact_bases},
                            {"note", b.note}});
        }
        std::cout << json{{"rows", rows}, {"skipped", table.skipped}}.dump(2) << "\n";
    } else {
        std::cout << "formula,parameter,n,value,floor,bounds,direction,asymptotic,exact_bases,note\n";
        for (const auto& b : table.rows) {
            std::string note = b.note;
            std::replace(note.begin(), note.end(), ',', ';');
            std::cout << formula_name(b.formula.id) << "," << b.formula.parameter << "," << b.n << ","
                      << value_text(b) << "," << format_double(b.floor_value()) << ",\"" << b.bounded.to_string()
                      << "\"," << (b.direction == BoundDirection::Upper ? "upper" : "lower") << ","
                      << (b.asymptotic ? "asymptotic" : "") << "," << (b.uses_exact_bases ? "yes" : "no") << ","
                      << note << "\n";
        }
        for (const auto& s : table.skipped) std::cerr << "skipped: " << s << "\n";
    }
    return kOk;
}

// -------------------------------------------------------------- construct

struct ConstructArgs {
    std::string kind;
    int n = 0;
    std::string in;
    std::string out;
};

int run_construct(const ConstructArgs& a) {
    Witness w;
    if (a.kind == "triangle-hypergraph") {
        if (a.in.empty()) throw std::invalid_argument("triangle-hypergraph needs --in <graph file>");
        w = triangle_hypergraph(io::parse_graph(io::read_file(a.in), a.in));
    } else if (a.kind == "double-one-side") {
        if (a.in.empty()) throw std::invalid_argument("double-one-side needs --in <bipartite file>");
        w = double_one_side(io::parse_bipartite(io::read_file(a.in), a.in));
    } else if (a.kind == "blowup-c5") {
        w = blowup_c5(a.n);
    } else if (a.kind == "cycle") {
        w = cycle_graph(a.n);
    } else if (a.kind == "path") {
        w = path_graph(a.n);
    } else if (a.kind == "complete") {
        w = complete_graph(a.n);
    } else if (a.kind == "bipartite-cycle") {
        w = bipartite_cycle(a.n);
    } else {
        throw std::invalid_argument("unknown construction '" + a.kind + "'");
    }
    const auto text = io::write_witness(w);
    if (a.out.empty()) std::cout << text;
    else io::write_file(a.out, text);
    return kOk;
}

// ----------------------------------------------------------------- detect

struct DetectArgs {
    std::string in;
    std::vector<std::string> forbid;
    int berge = 0;
    int cycle = 0;
    int path = 0;
    int theta = 0;
    int girth = 0;
    bool as_json = false;
};

int run_detect(const DetectArgs& a) {
    std::vector<ForbiddenSpec> specs;
    for (const auto& f : a.forbid) specs.push_back(ForbiddenSpec::parse(f));
    if (a.berge) specs.push_back({ForbiddenKind::BergeCycle, a.berge});
    if (a.cycle) specs.push_back({ForbiddenKind::ExactCycle, a.cycle});
    if (a.path) specs.push_back({ForbiddenKind::Path, a.path});
    if (a.theta) specs.push_back({ForbiddenKind::ThetaAtLeast, a.theta});
    if (a.girth) specs.push_back({ForbiddenKind::CyclesUpTo, a.girth});
    if (specs.empty()) throw std::invalid_argument("detect: give at least one pattern");
    for (const auto& s : specs) s.validate();

    const auto w = io::read_witness_file(a.in);
    json found = json::array();
    std::vector<std::string> lines;

    auto graph_hit = [&](const Graph& g, const ForbiddenSpec& s) {
        switch (s.kind) {
            case ForbiddenKind::ExactCycle:
                if (auto c = find_cycle(g, s.parameter)) {
                    found.push_back({{"pattern", s.to_string()}, {"cycle", edge_list(*c)}});
                    return true;
                }
                return false;
            case ForbiddenKind::CyclesUpTo:
                for (int l = 3; l <= s.parameter; ++l) {
                    if (auto c = find_cycle(g, l)) {
                        found.push_back({{"pattern", s.to_string()}, {"cycle", edge_list(*c)}});
                        return true;
                    }
                }
                return false;
            case ForbiddenKind::Path:
                if (auto p = find_path(g, s.parameter)) {
                    found.push_back({{"pattern", s.to_string()}, {"path", edge_list(*p)}});
                    return true;
                }
                return false;
            case ForbiddenKind::ThetaAtLeast:
                if (auto t = find_theta_at_least(g, s.parameter)) {
                    found.push_back({{"pattern", s.to_string()},
                                     {"cycle", edge_list(t->cycle)},
                                     {"chord", {t->chord.first, t->chord.second}}});
                    return true;
                }
                return false;
            default: throw std::invalid_argument(s.to_string() + " applies to triple systems, not graphs");
        }
    };

    for (const auto& s : specs) {
        if (const auto* h = std::get_if<TripleSystem>(&w)) {
            if (!s.for_triples()) throw std::invalid_argument(s.to_string() + " applies to graphs, not triple systems");
            const int lo = s.kind == ForbiddenKind::BergeCycle ? s.parameter : 3;
            for (int l = lo; l <= s.parameter; ++l) {
                if (auto b = find_berge_cycle(*h, l)) {
                    json edges = json::array();
                    for (auto i : b->hyperedges) edges.push_back((*h)[i]);
                    found.push_back({{"pattern", s.to_string()}, {"core", edge_list(b->core)}, {"hyperedges", edges}});
                    break;
                }
            }
        } else if (const auto* g = std::get_if<Graph>(&w)) {
            graph_hit(*g, s);
        } else {
            const auto& b = std::get<BipartiteGraph>(w);
            if (s.for_triples()) throw std::invalid_argument(s.to_string() + " applies to triple systems");
            if (!is_free(b, s)) graph_hit(b.to_graph(), s);
        }
    }

    if (a.as_json) {
        std::cout << json{{"free", found.empty()}, {"witnesses", found}}.dump(2) << "\n";
    } else if (found.empty()) {
        std::cout << "FREE\n";
    } else {
        for (const auto& f : found) {
            std::cout << f["pattern"].get<std::string>();
            if (f.contains("core")) {
                std::cout << " core " << f["core"].dump() << " hyperedges " << f["hyperedges"].dump();
            } else if (f.contains("path")) {
                std::cout << " path " << f["path"].dump();
            } else {
                std::cout << " cycle " << f["cycle"].dump();
                if (f.contains("chord")) std::cout << " chord " << f["chord"].dump();
            }
            std::cout << "\n";
        }
    }
    return kOk;
}

// -------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string in;
    int lemma = 0;
    bool as_json = false;
};

int run_decompose(const DecomposeArgs& a) {
    const auto w = io::read_witness_file(a.in);
    json report;
    if (const auto* h = std::get_if<TripleSystem>(&w)) {
        const auto d = decompose(*h);
        json pp = json::array();
        for (const auto& [i, e] : d.private_pair) pp.push_back({{"edge", (*h)[i]}, {"pair", {e.first, e.second}}});
        report = {{"edges", h->size()},
                  {"g2", d.g2.edges()},
                  {"h1", indices_json(*h, d.h1)},
                  {"h2", indices_json(*h, d.h2)},
                  {"private_pairs", pp},
                  {"coloring", d.coloring},
                  {"h3", indices_json(*h, d.h3)},
                  {"h4", indices_json(*h, d.h4)},
                  {"h5", indices_json(*h, d.h5)},
                  {"h6", indices_json(*h, d.h6)},
                  {"g4", d.g4.edges()}};
        if (!a.as_json) {
            std::cout << "edges " << h->size() << "\n"
                      << "g2 " << d.g2.edge_count() << "\n"
                      << "h1 " << d.h1.size() << "\n"
                      << "h2 " << d.h2.size() << "\n"
                      << "h3 " << d.h3.size() << "\n"
                      << "h4 " << d.h4.size() << "\n"
                      << "h5 " << d.h5.size() << "\n"
                      << "h6 " << d.h6.size() << "\n"
                      << "g4 " << d.g4.edge_count() << "\n";
        }
    } else {
        const auto g = std::holds_alternative<Graph>(w) ? std::get<Graph>(w) : std::get<BipartiteGraph>(w).to_graph();
        const auto t = rainbow_tripartition(g);
        report = {{"classes", t.classes}, {"triangles", t.triangles}, {"rainbow", t.rainbow_count}};
        if (a.lemma) report["triangle_lemma"] = check_triangle_lemma(g, a.lemma);
        if (!a.as_json) {
            std::cout << "triangles " << t.triangles << "\nrainbow " << t.rainbow_count << "\nclasses";
            for (int c : t.classes) std::cout << " " << c;
            std::cout << "\n";
            if (a.lemma) std::cout << "triangle_lemma " << (report["triangle_lemma"].get<bool>() ? "holds" : "FAILS") << "\n";
        }
    }
    if (a.as_json) std::cout << report.dump(2) << "\n";
    if (report.contains("triangle_lemma") && !report["triangle_lemma"].get<bool>()) return kViolation;
    return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::uint64_t seed = 0;
    int threads = 1;
    std::vector<int> criteria;
    bool as_json = false;
};

int run_verify(const VerifyArgs& a) {
    std::cout << "seed " << a.seed << "\n" << std::flush;
    const auto report = run_acceptance({a.seed, a.threads}, a.criteria, [&](const CriterionReport& r) {
        if (!a.as_json) std::cout << format_report_line(r) << "\n" << std::flush;
    });
    if (a.as_json) {
        json rows = json::array();
        for (const auto& r : report.criteria) {
            rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        }
        std::cout << json{{"seed", report.seed}, {"passed", report.passed()}, {"criteria", rows}}.dump(2) << "\n";
    }
    return report.passed() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact small extremal numbers for cycles, paths and Berge cycles"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    ComputeArgs ca;
    auto* compute = app.add_subcommand("compute", "exact extremal number by branch and bound");
    compute->add_option("--universe", ca.universe, "graph | bipartite | triples")->capture_default_str();
    compute->add_option("--n", ca.n, "vertex count (right part for bipartite)")->required();
    compute->add_option("--m", ca.m, "left part size (bipartite)");
    compute->add_option("--forbid", ca.forbid, "cycle=L, girth=L, path=K, theta=L, berge=L, berge-upto=L")->required();
    compute->add_option("--objective", ca.objective, "edges | triangles")->capture_default_str();
    compute->add_flag("--linear", ca.linear, "only linear triple systems");
    compute->add_option("--max-nodes", ca.max_nodes, "node budget (0 = unlimited)");
    compute->add_option("--max-seconds", ca.max_seconds, "time budget (0 = unlimited)");
    compute->add_option("--threads", ca.threads)->check(CLI::PositiveNumber);
    compute->add_flag("--force", ca.force, "recompute even if the catalog has the answer");
    compute->add_flag("--no-catalog", ca.no_catalog, "neither read nor write the catalog");
    compute->add_option("--out", ca.out, "witness file");
    compute->add_flag("--json", ca.as_json);

    BoundsArgs ba;
    auto* bounds = app.add_subcommand("bounds", "evaluate closed-form bounds (CSV)");
    bounds->add_option("--formula", ba.formulas, "formula ids, comma separated, or 'all'");
    auto* k_opt = bounds->add_option("--k", ba.params, "parameter values, e.g. 2,3 or 2..5");
    bounds->add_option("--l", ba.params, "cycle length or path vertices")->excludes(k_opt);
    bounds->add_option("--n", ba.ns, "vertex counts, e.g. 9,16 or 5..10")->required();
    bounds->add_option("--base", ba.base, "inner terms from 'formula' or 'exact' search")->capture_default_str();
    bounds->add_flag("--json", ba.as_json);

    ConstructArgs co;
    auto* construct = app.add_subcommand("construct", "write a graph or triple system file");
    construct
        ->add_option("kind", co.kind,
                     "triangle-hypergraph | double-one-side | blowup-c5 | cycle | path | complete | bipartite-cycle")
        ->required();
    construct->add_option("--n", co.n, "size parameter");
    construct->add_option("--in", co.in, "input file");
    construct->add_option("--out", co.out, "output file (default stdout)");

    DetectArgs da;
    auto* detect = app.add_subcommand("detect", "find a forbidden substructure or report FREE");
    detect->add_option("--in", da.in, "graph, bipartite or triple system file")->required();
    detect->add_option("--forbid", da.forbid, "pattern spec");
    detect->add_option("--berge", da.berge, "Berge cycle length");
    detect->add_option("--cycle", da.cycle, "cycle length");
    detect->add_option("--path", da.path, "path vertices");
    detect->add_option("--theta", da.theta, "theta: cycle of length >= L with a chord");
    detect->add_option("--girth", da.girth, "any cycle of length <= L");
    detect->add_flag("--json", da.as_json);

    DecomposeArgs de;
    auto* decomp = app.add_subcommand("decompose", "decomposition report for a triple system; tripartition for a graph");
    decomp->add_option("--in", de.in)->required();
    decomp->add_option("--lemma", de.lemma, "also check the triangle lemma for C_L-free graphs");
    decomp->add_flag("--json", de.as_json);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run the acceptance suites");
    verify->add_option("--seed", va.seed, "fuzz seed")->capture_default_str();
    verify->add_option("--threads", va.threads)->check(CLI::PositiveNumber);
    verify->add_option("--criterion", va.criteria, "run only these criteria (1-10)")
        ->check(CLI::Range(1, kCriterionCount));
    verify->add_flag("--json", va.as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*compute) return run_compute(ca);
        if (*bounds) return run_bounds(ba);
        if (*construct) return run_construct(co);
        if (*detect) return run_detect(da);
        if (*decomp) return run_decompose(de);
        if (*verify) return run_verify(va);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GuaranteeViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
