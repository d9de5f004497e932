#include "berge_forge/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "berge_forge/errors.hpp"

namespace berge::io {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::istringstream is{std::string(text.substr(pos, end - pos))};
        Line line{number, {}};
        for (std::string tok; is >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty() && line.tokens.front().front() != '#') out.push_back(std::move(line));
        pos = end + 1;
    }
    return out;
}

int to_int(const std::string& tok, const std::string& source, std::size_t line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(source, line, "expected an integer, got '" + tok + "'");
    }
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

}  // namespace

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.n() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
    return os.str();
}

Graph parse_graph(std::string_view text, const std::string& source) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(source, 0, "empty graph file");
    const auto& head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "n") {
        throw ParseError(source, head.number, "expected header 'n <count>'");
    }
    const int n = to_int(head.tokens[1], source, head.number);
    if (n < 0) throw ParseError(source, head.number, "negative vertex count");
    Graph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        if (ln.tokens.size() != 2) throw ParseError(source, ln.number, "expected 'u v'");
        const int u = to_int(ln.tokens[0], source, ln.number);
        const int v = to_int(ln.tokens[1], source, ln.number);
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, ln.number, e.what());
        }
    }
    return g;
}

std::string write_bipartite(const BipartiteGraph& b) {
    std::ostringstream os;
    os << "bipartite " << b.left_size() << " " << b.right_size() << "\n";
    for (auto [a, c] : b.edges()) os << a << " " << c << "\n";
    return os.str();
}

BipartiteGraph parse_bipartite(std::string_view text, const std::string& source) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(source, 0, "empty bipartite file");
    const auto& head = lines.front();
    if (head.tokens.size() != 3 || head.tokens[0] != "bipartite") {
        throw ParseError(source, head.number, "expected header 'bipartite <m> <n>'");
    }
    const int m = to_int(head.tokens[1], source, head.number);
    const int n = to_int(head.tokens[2], source, head.number);
    if (m < 0 || n < 0) throw ParseError(source, head.number, "negative part size");
    BipartiteGraph b(m, n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& ln = lines[i];
        if (ln.tokens.size() != 2) throw ParseError(source, ln.number, "expected 'left right'");
        try {
            b.add_edge(to_int(ln.tokens[0], source, ln.number), to_int(ln.tokens[1], source, ln.number));
        } catch (const std::invalid_argument& e) {
            throw ParseError(source, ln.number, e.what());
        }
    }
    return b;
}

std::string write_triples(const TripleSystem& h) {
    // One triple per line keeps the files diff-able.
    std::ostringstream os;
    os << "{\"n\": " << h.n() << ", \"edges\": [";
    for (std::size_t i = 0; i < h.size(); ++i) {
        const auto& t = h[i];
        os << (i ? ",\n  " : "\n  ") << "[" << t[0] << ", " << t[1] << ", " << t[2] << "]";
    }
    os << (h.empty() ? "]}\n" : "\n]}\n");
    return os.str();
}

TripleSystem parse_triples(std::string_view text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source, line_of_offset(text, e.byte), e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
        throw ParseError(source, 1, "expected an object with \"n\" and \"edges\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0) {
        throw ParseError(source, 1, "\"n\" must be a non-negative integer");
    }
    const int n = doc["n"].get<int>();
    if (!doc["edges"].is_array()) throw ParseError(source, 1, "\"edges\" must be an array");
    std::vector<Triple> triples;
    std::size_t index = 0;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 3 || !std::all_of(e.begin(), e.end(), [](const auto& x) {
                return x.is_number_integer();
            })) {
            throw ParseError(source, 0, "edge #" + std::to_string(index) + " is not a triple of integers");
        }
        Triple t{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
        auto sorted = make_triple(t[0], t[1], t[2]);
        if (sorted[0] < 0 || sorted[2] >= n || sorted[0] == sorted[1] || sorted[1] == sorted[2]) {
            throw ParseError(source, 0, "edge #" + std::to_string(index) + " is not 3 distinct vertices below n");
        }
        triples.push_back(t);
        ++index;
    }
    return TripleSystem(n, triples);
}

std::string write_witness(const Witness& w) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Graph>) return write_graph(x);
            else if constexpr (std::is_same_v<T, BipartiteGraph>) return write_bipartite(x);
            else return write_triples(x);
        },
        w);
}

Witness parse_witness(std::string_view text, const std::string& source) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw ParseError(source, 0, "empty input");
    if (text[first] == '{') return parse_triples(text, source);
    auto lines = significant_lines(text);
    if (!lines.empty() && lines.front().tokens.front() == "bipartite") return parse_bipartite(text, source);
    return parse_graph(text, source);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

Witness read_witness_file(const std::filesystem::path& path) {
    return parse_witness(read_file(path), path.string());
}

}  // namespace berge::io
