#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hilbcoh/surface.hpp"

namespace hilbcoh::verify {

struct CheckResult {
    std::string check;
    std::string citation;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::size_t passed_count() const;
    void add(std::string check, std::string citation, std::string expected, std::string computed);
    void add(std::string check, std::string citation, std::string expected, std::string computed,
             bool pass);
    void merge(const Report& other);
};

struct RunOptions {
    int b2 = 22;
    std::uint64_t seed = 1;
    surface::SurfaceConfig surface = surface::default_surface_config();
    int gram_trials = 5;
    int twist_trials = 20;
};

Report verify_table(const RunOptions& opts);
Report verify_stable(const RunOptions& opts);
Report verify_ideal(const RunOptions& opts);
Report verify_chern(const RunOptions& opts);
Report verify_diagonal(const RunOptions& opts);
Report verify_example3(const RunOptions& opts);

/// The closed-form side of the relation-ideal comparison, injectable so a
/// deliberately broken formula can be shown to fail.
using IdealFormula = std::function<Integer(int b2, int n, int k)>;
Report verify_ideal_with_formula(const RunOptions& opts, const IdealFormula& formula);

const std::vector<std::string>& suite_names(); // includes "all"
Report run_suite(const std::string& name, const RunOptions& opts);

std::string render_text(const Report& report);
std::string render_json(const Report& report);

/// The printed Betti table: appendix_entry(k/2, n-1); -1 marks a blank
/// cell (k > 4n). Shared source of expected values for suite and tests.
const std::array<std::array<long long, 9>, 10>& appendix_entries();

} // namespace hilbcoh::verify
