#include "berge_forge/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "berge_forge/errors.hpp"
#include "berge_forge/io.hpp"

namespace berge {

nlohmann::json problem_to_json(const SearchProblem& p) {
    auto specs = p.forbidden;
    std::sort(specs.begin(), specs.end());
    specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
    nlohmann::json forbid = nlohmann::json::array();
    for (const auto& s : specs) forbid.push_back(s.to_string());
    nlohmann::json j;
    j["universe"] = universe_name(p.universe);
    j["n"] = p.n;
    j["m"] = p.m;
    j["forbid"] = forbid;
    j["objective"] = objective_name(p.objective);
    j["linear"] = p.linear;
    return j;
}

std::string fingerprint(const SearchProblem& p) {
    const auto text = problem_to_json(p).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json CatalogEntry::to_json() const {
    return {{"fingerprint", fingerprint}, {"problem", problem}, {"value", value},     {"optimal", optimal},
            {"witness", witness},         {"version", version}, {"timestamp", timestamp}, {"nodes", nodes},
            {"seconds", seconds}};
}

CatalogEntry CatalogEntry::from_json(const nlohmann::json& j) {
    CatalogEntry e;
    e.fingerprint = j.at("fingerprint").get<std::string>();
    e.problem = j.at("problem");
    e.value = j.at("value").get<long long>();
    e.optimal = j.at("optimal").get<bool>();
    e.witness = j.value("witness", "");
    e.version = j.value("version", "");
    e.timestamp = j.value("timestamp", "");
    e.nodes = j.value("nodes", std::uint64_t{0});
    e.seconds = j.value("seconds", 0.0);
    return e;
}

Catalog::Catalog(std::filesystem::path path) : path_(std::move(path)) {}

std::filesystem::path Catalog::default_path() {
    if (const char* env = std::getenv("BERGE_FORGE_CATALOG"); env != nullptr && *env != '\0') return env;
    return "berge_catalog.jsonl";
}

std::vector<CatalogEntry> Catalog::entries() const {
    std::vector<CatalogEntry> out;
    std::ifstream in(path_);
    if (!in) return out;
    std::size_t number = 0;
    for (std::string line; std::getline(in, line);) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(CatalogEntry::from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(path_.string(), number, e.what());
        }
    }
    return out;
}

std::optional<CatalogEntry> Catalog::find(const std::string& fp) const {
    for (auto& e : entries()) {
        if (e.fingerprint == fp) return e;
    }
    return std::nullopt;
}

void Catalog::record(const CatalogEntry& entry) {
    auto all = entries();
    auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.fingerprint == entry.fingerprint; });
    if (it == all.end()) {
        if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cannot append to " + path_.string());
        out << entry.to_json().dump() << "\n";
        return;
    }
    *it = entry;
    std::ostringstream os;
    for (const auto& e : all) os << e.to_json().dump() << "\n";
    io::write_file(path_, os.str());
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace berge
