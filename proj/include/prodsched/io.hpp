#pragma once

#include <string>

#include <json.hpp>

#include "prodsched/core.hpp"
#include "prodsched/euclid.hpp"
#include "prodsched/harmonic.hpp"
#include "prodsched/timing.hpp"
#include "prodsched/verifier.hpp"

namespace prodsched {

// ProblemSpec JSON:
//   {"classes":[{"time":"3","count":1},...],"objects":null}
// Times are strings in "num/den", integer or decimal form; objects may be
// null or absent, defaulting to n.
nlohmann::json spec_to_json(const ProblemSpec& spec);
ProblemSpec spec_from_json(const nlohmann::json& j);

// Assignment matrix CSV: an au_hours record, a header row of interval
// indices, then one row of agent ids per object.
//   au_hours,4/21
//   object,1,2,...,n
//   1,5,6,...
std::string matrix_to_csv(const AssignmentMatrix& matrix);
AssignmentMatrix matrix_from_csv(const std::string& text);

// 0/1 projection CSV of a two-class matrix (same shape, no au record).
std::string binary_matrix_to_csv(const std::vector<std::vector<int>>& bits);

// Scheme JSON:
//   {"objects":[{"object":1,"segments":[{"agent":1,"start":"0","end":"2/3"}]},...]}
nlohmann::json scheme_to_json(const Scheme& scheme);
Scheme scheme_from_json(const nlohmann::json& j);

nlohmann::json validation_to_json(const ValidationReport& report);
nlohmann::json timing_to_json(const TimingReport& report, const std::string& strategy,
                              long long r1, long long r2, const Rational& T);
nlohmann::json partition_to_json(const std::vector<Rational>& input,
                                 const std::vector<HarmonicPartition>& splits,
                                 const HarmonicPartition& irreducible);
nlohmann::json euclid_plan_to_json(const EuclideanScheme& scheme, AgentOrder order);
nlohmann::json fibonacci_to_json(const FibonacciReport& report);
nlohmann::json halt_statistics_to_json(const HaltStatistics& stats);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

} // namespace prodsched
