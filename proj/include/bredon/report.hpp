#pragma once

#include <bredon/closed_form.hpp>
#include <bredon/coxeter.hpp>
#include <bredon/homology.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace bredon {

enum class MethodChoice { Auto, Chain, Closed };

struct RunOptions {
    MethodChoice method = MethodChoice::Auto;
    /// Highest degree reported; defaults to the rank.
    std::optional<std::size_t> max_degree;
    Integer order_cap = kDefaultOrderCap;
    bool dump_tables = false;
    bool cells = false;
};

/// Outcome codes shared by the C API and the command line.
enum class RunStatus { Ok = 0, Discrepancy = 2, ResourceCap = 3, InputError = 4 };

struct RunReport {
    nlohmann::json json;
    RunStatus status = RunStatus::Ok;
    /// Wall time of the computation; reported in text mode only so that JSON
    /// output stays byte-deterministic.
    double elapsed_ms = 0.0;
    /// Profile of the first method that ran (chain when available).
    std::optional<HomologyProfile> primary;
    KHomology k;
};

/// {"rank": N, "m": [[...]]} with 0 for infinity.
CoxeterMatrix matrix_from_json(const nlohmann::json& j);
CoxeterMatrix matrix_from_file(const std::string& path);
nlohmann::json matrix_to_json(const CoxeterMatrix& w);

/// {"free_rank": n, "torsion": [d1, ...]}
nlohmann::json fgab_to_json(const FgAbGroup& g);
FgAbGroup fgab_from_json(const nlohmann::json& j);
/// Degrees 0..max_degree as string keys.
nlohmann::json profile_to_json(const HomologyProfile& p, std::size_t max_degree);

nlohmann::json classify_report(const CoxeterMatrix& w);
std::string classify_text(const nlohmann::json& report);

RunReport homology_report(const CoxeterMatrix& w, const RunOptions& options);
std::string homology_text(const RunReport& report);

nlohmann::json cells_report(const CoxeterMatrix& w, const RunOptions& options);
std::string cells_text(const nlohmann::json& report);

nlohmann::json tables_report(const CoxeterMatrix& w, const RunOptions& options);
std::string tables_text(const nlohmann::json& report);

/// Runs every *.json entry of a corpus directory against its "expected"
/// profile. Throws InputError for a missing or empty directory.
RunReport validate_corpus(const std::string& directory, const RunOptions& options);
std::string validate_text(const RunReport& report);

/// Serialization used for JSON output: two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

inline constexpr const char* kBaumConnesNote =
    "via Baum-Connes (Coxeter groups satisfy the conjecture, Haagerup)";

}  // namespace bredon
