#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace pairs {

struct Grid {
    long gmax = 3;
    long dmax = 12;
    long mmax = 8;
    long nmax = 8;
};

/// Outcome of one or more route-agreement suites. Failures are data, not exceptions.
struct CrosscheckReport {
    std::string suite;
    nlohmann::json grid;
    long cases = 0;
    std::vector<nlohmann::json> failures;
    std::vector<std::string> notes;
    std::map<std::string, long> statistics;
    /// Populated for suite "all", one entry per constituent suite.
    std::vector<CrosscheckReport> parts;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] nlohmann::json to_json() const;
};

/// Suite names accepted by crosscheck_suite.
const std::vector<std::string>& suite_names();

/// Runs "ni", "dimv", "poincare", "verlinde", "identities" or "all" over the
/// grid with `jobs` worker threads. Output does not depend on `jobs`.
/// Throws InputError for an unknown suite or nonpositive bounds.
CrosscheckReport crosscheck_suite(std::string_view name, const Grid& grid, unsigned jobs, long precision_digits = 40);

}  // namespace pairs
