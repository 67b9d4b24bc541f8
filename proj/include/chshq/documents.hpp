#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chshq/audit.hpp"
#include "chshq/construction.hpp"
#include "chshq/game.hpp"
#include "chshq/geometry.hpp"
#include "chshq/oracle.hpp"

namespace chshq {

/// Raised by any reader on a document that does not match its schema.
class DocumentError : public std::runtime_error {
public:
    explicit DocumentError(const std::string& what) : std::runtime_error(what) {}
};

// Strategy document: {"q": int, "alice": [q ints], "bob": [q ints]},
// residues canonical.
nlohmann::json strategy_to_json(const DeterministicStrategy& s);
DeterministicStrategy strategy_from_json(const nlohmann::json& doc);
DeterministicStrategy load_strategy(const std::string& path);
void save_strategy(const DeterministicStrategy& s, const std::string& path);

// Geometry document: {"p": int, "points": [[x, h], ...], "lines":
// [[slope, intercept], ...]}.
nlohmann::json geometry_to_json(const PointSet& P, const LineSet& L);
std::pair<PointSet, LineSet> geometry_from_json(const nlohmann::json& doc);

nlohmann::json rational_to_json(Rational r);
nlohmann::json evaluation_to_json(const EvaluationReport& report);
nlohmann::json construction_to_json(const ConstructionReport& report);
nlohmann::json audit_to_json(const AuditReport& report);
nlohmann::json oracle_to_json(const OracleResult& result);
nlohmann::json guarantee_to_json(const GuaranteeBound& bound);

}  // namespace chshq
