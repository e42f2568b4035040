#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sflab/dimensions.hpp"
#include "sflab/numeric.hpp"
#include "sflab/packing.hpp"
#include "sflab/set_family.hpp"
#include "sflab/sunflower.hpp"

namespace sflab {

enum class CheckStatus
{
    pass,
    fail,
    skipped,
};

std::string to_string(CheckStatus status);

struct CheckResult
{
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    std::string detail;
};

struct InequalityReport
{
    std::vector<CheckResult> checks;

    bool any_failed() const;
    const CheckResult* find(const std::string& name) const;
};

struct AnalysisOptions
{
    std::size_t r = 3;
    std::size_t lambda_cap = 8;
    std::uint64_t node_limit = std::uint64_t{1} << 28; ///< per exact computation
    std::optional<std::chrono::milliseconds> time_limit;
    std::optional<std::uint64_t> f_value; ///< known least size forcing an r-sunflower (f), for the alpha upper bound
    std::optional<std::uint64_t> g_value; ///< known multifamily analogue (g), for the alpha lower bound
};

/// Every exact quantity the checker needs, computed once.
struct FamilyAnalysis
{
    std::size_t r = 3;
    std::size_t members = 0;
    std::size_t distinct_members = 0;
    std::size_t active_elements = 0;
    std::size_t max_member_size = 0;
    bool has_empty_member = false;
    bool antichain = false;

    VcDimension vc;
    LsDimension ls;
    LambdaNumber lambda;
    std::optional<std::size_t> dual_vc; ///< absent for multifamilies
    PackingNumber nu;
    std::optional<TransversalNumber> tau; ///< absent when a member is empty
    std::optional<Sunflower> sunflower;   ///< r-sunflower
    std::optional<Sunflower> sunflower_next; ///< (r+1)-sunflower
    std::optional<PopularElement> popular;   ///< absent for empty families or empty members
    std::optional<BigInt> tuples;         ///< ordered sunflower r-tuples
    std::optional<Rational> alpha;

    InequalityReport checks;
};

/// Runs every analysis and then `check_inequalities`. Throws BudgetExceeded
/// if any exact computation exceeds `node_limit`.
FamilyAnalysis analyze_family(const SetFamily& family, const AnalysisOptions& options = {});

/// Evaluates every inequality instantiable from the analysis: vc <= ls,
/// ls <= floor(log2 m), Sauer-Shelah, nu <= tau, the Ding-Seymour-Winkler
/// transversal bound, lambda >= VC of the dual, the popular-element bound,
/// the alpha floor m^(1-r) and, given f or g, the alpha upper and lower
/// bounds. Checks whose inputs are inexact or inapplicable are skipped.
InequalityReport check_inequalities(const FamilyAnalysis& analysis, const AnalysisOptions& options);

} // namespace sflab
