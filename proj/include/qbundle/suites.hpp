#pragma once

#include "qbundle/connection.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qb {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Run parameters. Read from a flat "key = value" file; every key may be
/// overridden. Unknown keys are errors.
struct RunConfig {
    std::string algebra = "sl2";
    std::vector<int> theta;          // subset of the simple roots
    std::vector<int> weights{1};     // the U_l-module V of the bundle
    int level = 4;                   // window N_max on Peter-Weyl levels
    int calculus = 1;                // the calculus is built from irrep(calculus)
    std::vector<mpq_class> samples{mpq_class(1, 2), mpq_class(2, 3), mpq_class(9, 10)};
    std::uint64_t seed = 1;
    std::string suite = "all";
    int action_samples = 100;
    int haar_samples = 20;
    int calculus_samples = 50;
    int connection_samples = 50;
    int perturbations = 10;
    bool timing = false;

    /// Throws ConfigError on a malformed value.
    void set(const std::string& key, const std::string& value);
    /// Throws ConfigError if the combination is unusable.
    void validate() const;
    ThetaChoice theta_choice() const { return ThetaChoice{1, theta}; }
    nlohmann::ordered_json to_json() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

enum class Status { Pass, Fail, Skip };

struct Check {
    std::string suite;
    std::string name;
    std::string anchor;
    Status status = Status::Pass;
    std::string witness;  // first counterexample, or the reason for a skip
    nlohmann::ordered_json detail;
    double seconds = 0;
};

struct Report {
    RunConfig config;
    std::vector<Check> checks;
    std::size_t count(Status s) const;
    /// 0 if everything passed, 1 otherwise.
    int exit_code() const;
    nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();
/// Runs one suite by name, or all of them for "all". Throws ConfigError for an unknown name.
Report verify(const RunConfig& config);

/// Tables behind the other subcommands. Each carries a "pass" flag.
nlohmann::ordered_json dims_table(const RunConfig& config);
nlohmann::ordered_json idempotent_dump(const RunConfig& config);
nlohmann::ordered_json connection_dump(const RunConfig& config);
nlohmann::ordered_json haar_table(const RunConfig& config);

nlohmann::ordered_json form_to_json(const Calculus& c, const FormElement& w);
nlohmann::ordered_json coeff_to_json(const CoeffElement& f);

}  // namespace qb
