#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "berge_forge/search.hpp"

namespace berge {

inline constexpr const char* kVersion = "0.1.0";

/// Canonical JSON form of a problem (budget and threading excluded).
nlohmann::json problem_to_json(const SearchProblem& p);
/// 16 hex digits of FNV-1a over the canonical JSON dump.
std::string fingerprint(const SearchProblem& p);

struct CatalogEntry {
    std::string fingerprint;
    nlohmann::json problem;
    long long value = 0;
    bool optimal = false;
    std::string witness;  // path of the witness file
    std::string version = kVersion;
    std::string timestamp;
    std::uint64_t nodes = 0;
    double seconds = 0.0;

    nlohmann::json to_json() const;
    static CatalogEntry from_json(const nlohmann::json& j);
};

/**
 * JSON-lines results file with one entry per fingerprint. New fingerprints
 * are appended; recording an existing fingerprint rewrites its line.
 */
class Catalog {
public:
    explicit Catalog(std::filesystem::path path);

    /// $BERGE_FORGE_CATALOG, else ./berge_catalog.jsonl.
    static std::filesystem::path default_path();

    const std::filesystem::path& path() const { return path_; }
    std::vector<CatalogEntry> entries() const;
    std::optional<CatalogEntry> find(const std::string& fingerprint) const;
    void record(const CatalogEntry& entry);

private:
    std::filesystem::path path_;
};

std::string utc_timestamp();

}  // namespace berge
