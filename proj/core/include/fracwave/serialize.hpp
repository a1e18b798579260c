#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "fracwave/solutions.hpp"
#include "fracwave/subspace.hpp"
#include "fracwave/verify.hpp"

namespace fracwave {

// All records carry "schema": 1.

nlohmann::json to_json(const KOperator& op);
KOperator koperator_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SimilaritySolution& s);
SimilaritySolution similarity_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QuinticSolution& q);
QuinticSolution quintic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OdibatSolution& o);
OdibatSolution odibat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ResidualReport& r);

nlohmann::json to_json(const ClosureReport& r);

/// One-line human rendering of a residual report.
std::string summary_line(const ResidualReport& r);

}  // namespace fracwave
