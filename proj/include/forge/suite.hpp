#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "forge/io.hpp"

namespace forge {

enum class CheckStatus { Passed, Failed, Skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Failed;
    json details;
    double seconds = 0.0;
};

struct RunReport {
    std::string command;
    json params;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    /// No check failed and at least one ran.
    bool passed() const;
};

json to_json(const RunReport& r, bool timings = true);

/// Runs `body`, timing it. PrimeUnsuitable, DegenerateParams and ScaleGuard
/// mark the check skipped with the message; other errors mark it failed.
CheckResult run_check(const std::string& name, const std::function<CheckStatus(json&)>& body);

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::Passed : CheckStatus::Failed; }

/// Parameters over Q with the pair-level validation applied.
FamilyParams<Rational> rational_params(int g, long v, const std::vector<long>& a);

/// Smallest prime >= start at which the reduced parameters are pair-valid
/// and every a_i is a nonzero square.
std::uint64_t find_square_prime(const FamilyParams<Rational>& params, std::uint64_t start);

struct LEqualityCase {
    FamilyParams<Rational> params;
    std::vector<std::uint64_t> primes;
};

struct SuiteConfig {
    std::uint64_t seed = 20240601;
    int trials = 20;
    std::uint64_t identity_prime = 10007;
    int identity_trials = 40;
    std::vector<LEqualityCase> lequality;
    std::uint64_t isogeny_prime = 101;
    FamilyParams<Rational> isogeny_g2;
    FamilyParams<Rational> isogeny_g3;
    int g3_trials = 10;
    std::uint64_t kernel_search_start = 41;
    std::vector<FamilyParams<Rational>> kernel_params;
    long sqrt2_v = 3;
    long sqrt2_a = 2;
    std::uint64_t sqrt2_prime = 101;
    std::vector<std::int64_t> split_a{2, 3};
    std::uint64_t split_prime = 13;
    std::uint64_t moduli_prime = 10007;
    std::uint64_t normalize_prime = 101;
    int normalize_sets = 50;
    std::string fixtures_dir;
    int fixture_classes = 20;
};

SuiteConfig default_suite_config();

// Building blocks shared by the CLI subcommands and the suite.
CheckResult identities_check();
CheckResult m_congruence_check(int g, std::uint64_t p, int trials, std::uint64_t seed);
CheckResult gamma_consistency_check(int g, std::uint64_t p, int trials, std::uint64_t seed);
CheckResult lequality_check(const LEqualityCase& c);
CheckResult mult_by_two_check(const std::string& name, const PairContext& ctx, int trials, std::uint64_t seed);
CheckResult kernel_check(const std::string& name, const PairContext& ctx, std::uint64_t seed);
CheckResult proposition_check(const std::string& name, const PairContext& ctx, int points, std::uint64_t seed);
CheckResult charpoly_check();
CheckResult sqrt2_check(long v, long a1, std::uint64_t p, int trials, std::uint64_t seed);
CheckResult split_check(const std::vector<std::int64_t>& a, std::uint64_t p);
CheckResult criterion_check(std::uint64_t p, std::uint64_t seed);
CheckResult normalization_check(std::uint64_t p, int sets, std::uint64_t seed);
/// Recomputes L for both curves of the fixture, compares with the stored
/// values, and checks L(1) D = 0 for random classes D on C.
CheckResult fixture_check(const ZetaFixture& fx, int classes, std::uint64_t seed);

/// In order: identities, M-congruence, gamma consistency, L-equality,
/// mult-by-two, kernel, pointwise proposition, charpoly, sqrt 2 family,
/// split at i, moduli. Failures are recorded, never thrown.
/// With a fixture directory, one fixture_check per file is appended.
RunReport run_suite(const SuiteConfig& config);

}  // namespace forge
