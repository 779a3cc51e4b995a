#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "snakes/classification.hpp"
#include "snakes/orbit_tables.hpp"
#include "snakes/sum_vectors.hpp"

namespace snakes {

struct SumChecks {
    bool odd = false;
    bool divides = false;
    bool fourLambda = false;
    friend bool operator==(const SumChecks&, const SumChecks&) = default;
};

struct SumReport {
    int n = 0;
    std::vector<std::int64_t> sumVector;
    int lambda = 0;
    int colScale = 0;
    SumChecks checks;
    friend bool operator==(const SumReport&, const SumReport&) = default;
};

struct TableReport {
    int n = 0;
    int omega = 0;
    std::int64_t r = 0;
    std::int64_t eta = 0;
    std::int64_t barAlpha = 0;
    std::int64_t barBeta = 0;
    std::int64_t predictedBarAlpha = 0;
    std::int64_t predictedBarBeta = 0;
    std::int64_t degP = 0;
    std::int64_t codegP = 0;
    std::vector<std::vector<int>> swallowCycles;
    std::vector<std::vector<int>> coSwallowCycles;
    int swallowShift = 0;
    int coSwallowShift = 0;
    std::vector<std::int64_t> invariantFactors;
    std::vector<std::int64_t> simulatedInvariantFactors;
    std::string tableSlither;
    std::string tableCoSlither;
    bool colorPreserving = false;
    friend bool operator==(const TableReport&, const TableReport&) = default;
};

struct OrbitReport {
    int n = 0;
    std::string seed;
    std::vector<std::string> rows;
    std::int64_t orbitLength = 0;
    std::int64_t analysisStart = 0;
    std::string analysisRow;

    std::string slither;
    std::string coSlither;
    std::string simulatedSlither;
    std::string simulatedCoSlither;
    int betaD = 0;
    int betaE = 0;
    int alphaS = 0;
    int alphaL = 0;
    int alpha = 0;
    int beta = 0;

    std::int64_t deg = 0;
    std::int64_t codeg = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t sigma = 0;
    std::int64_t tapePeriod = 0;
    std::int64_t scrollPeriod = 0;
    std::int64_t simulatedSigma = 0;
    std::int64_t simulatedTapePeriod = 0;
    std::int64_t degP1 = 0;
    std::int64_t codegP1 = 0;

    TableReport table;
    SumReport sums;
    std::map<std::string, bool> agreement;
    bool consistent = false;
    friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

OrbitReport build_orbit_report(const IndependentSet& seed, int omega);
TableReport build_table_report(const Scroll& s, int omega);
SumReport build_sum_report(const Scroll& s);

nlohmann::json scroll_window_json(const Scroll& s, std::int64_t rows);
nlohmann::json classification_json(const Classification& c);

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SumChecks, odd, divides, fourLambda)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SumReport, n, sumVector, lambda, colScale, checks)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(TableReport, n, omega, r, eta, barAlpha, barBeta, predictedBarAlpha,
                                   predictedBarBeta, degP, codegP, swallowCycles, coSwallowCycles, swallowShift,
                                   coSwallowShift, invariantFactors, simulatedInvariantFactors, tableSlither,
                                   tableCoSlither, colorPreserving)

void to_json(nlohmann::json& j, const OrbitReport& v);
void from_json(const nlohmann::json& j, OrbitReport& v);

} // namespace snakes
