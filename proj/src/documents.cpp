#include "chshq/documents.hpp"

#include <fstream>

namespace chshq {

namespace {

using nlohmann::json;

std::uint64_t require_uint(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_unsigned())
        throw DocumentError(std::string("missing or non-integer field: ") + key);
    return doc[key].get<std::uint64_t>();
}

std::vector<FieldElement> require_table(const json& doc, const char* key, std::uint64_t q) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw DocumentError(std::string("missing or non-array field: ") + key);
    const json& arr = doc[key];
    if (arr.size() != q) throw DocumentError(std::string(key) + " table length must equal q");
    std::vector<FieldElement> table;
    table.reserve(q);
    for (const json& v : arr) {
        if (!v.is_number_unsigned())
            throw DocumentError(std::string(key) + " entries must be nonnegative integers");
        std::uint64_t e = v.get<std::uint64_t>();
        if (e >= q) throw DocumentError(std::string(key) + " entries must be canonical (< q)");
        table.push_back(e);
    }
    return table;
}

PrimeModulus require_prime(std::uint64_t value, const char* what) {
    try {
        return PrimeModulus(value);
    } catch (const std::invalid_argument& e) {
        throw DocumentError(std::string(what) + ": " + e.what());
    }
}

}  // namespace

json strategy_to_json(const DeterministicStrategy& s) {
    return json{{"q", s.q.value()}, {"alice", s.alice}, {"bob", s.bob}};
}

DeterministicStrategy strategy_from_json(const json& doc) {
    if (!doc.is_object()) throw DocumentError("strategy document must be an object");
    std::uint64_t qv = require_uint(doc, "q");
    PrimeModulus q = require_prime(qv, "q");
    return DeterministicStrategy{q, require_table(doc, "alice", qv),
                                 require_table(doc, "bob", qv)};
}

DeterministicStrategy load_strategy(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open strategy file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    return strategy_from_json(doc);
}

void save_strategy(const DeterministicStrategy& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write strategy file: " + path);
    out << strategy_to_json(s).dump(2) << "\n";
}

json geometry_to_json(const PointSet& P, const LineSet& L) {
    if (P.p != L.p) throw std::invalid_argument("mismatched moduli");
    json points = json::array(), lines = json::array();
    for (const AffinePoint& pt : P.points) points.push_back({pt.x, pt.h});
    for (const AffineLine& ln : L.lines) lines.push_back({ln.slope, ln.intercept});
    return json{{"p", P.p.value()}, {"points", points}, {"lines", lines}};
}

std::pair<PointSet, LineSet> geometry_from_json(const json& doc) {
    if (!doc.is_object()) throw DocumentError("geometry document must be an object");
    PrimeModulus p = require_prime(require_uint(doc, "p"), "p");
    auto read_pairs = [&](const char* key) {
        if (!doc.contains(key) || !doc[key].is_array())
            throw DocumentError(std::string("missing or non-array field: ") + key);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (const json& entry : doc[key]) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_unsigned() ||
                !entry[1].is_number_unsigned())
                throw DocumentError(std::string(key) + " entries must be pairs of integers");
            std::uint64_t a = entry[0].get<std::uint64_t>();
            std::uint64_t b = entry[1].get<std::uint64_t>();
            if (a >= p.value() || b >= p.value())
                throw DocumentError(std::string(key) + " entries must be canonical (< p)");
            out.emplace_back(a, b);
        }
        return out;
    };
    PointSet P{p, {}};
    for (auto [x, h] : read_pairs("points")) P.points.push_back({x, h});
    LineSet L{p, {}};
    for (auto [s, t] : read_pairs("lines")) L.lines.push_back({s, t});
    return {std::move(P), std::move(L)};
}

json rational_to_json(Rational r) {
    return json{{"numerator", r.num}, {"denominator", r.den}, {"decimal", to_double(r)}};
}

json evaluation_to_json(const EvaluationReport& report) {
    return json{{"q", report.q},
                {"total_cases", report.q * report.q},
                {"win_count", report.win_count},
                {"win_probability", rational_to_json(report.win_probability)}};
}

json construction_to_json(const ConstructionReport& report) {
    return json{{"p", report.params.p.value()},
                {"p1", report.params.p1},
                {"p2", report.params.p2},
                {"bound_p1sq_lt_p2", report.params.bound_p1sq_lt_p2},
                {"bound_sandwich", report.params.bound_sandwich},
                {"p1_gt_30", report.params.p1_gt_30},
                {"pre_incidences", report.pre_incidences},
                {"lines_total", report.lines_total},
                {"lines_kept", report.lines_kept},
                {"lines_removed", report.lines_removed},
                {"post_incidence_count", report.post_incidence_count},
                {"win_count", report.win_count},
                {"guarantee_floor", report.guarantee_floor},
                {"guarantee_applies", report.guarantee_applies}};
}

json audit_to_json(const AuditReport& report) {
    return json{{"p", report.p},
                {"p1", report.p1},
                {"p2", report.p2},
                {"lines_total", report.lines_total},
                {"lines_kept", report.lines_kept},
                {"slope_zero_family", report.slope_zero_family},
                {"slope_zero_duplicates", report.slope_zero_duplicates},
                {"r_emp", report.r_emp},
                {"middle_band_violations", report.middle_band_violations},
                {"census_match", report.census_match},
                {"r_small_bound", rational_to_json(report.r_small_bound)},
                {"r_large_bound", rational_to_json(report.r_large_bound)},
                {"r_total_bound", rational_to_json(report.r_total_bound)},
                {"r_final_bound", rational_to_json(report.r_final_bound)},
                {"r_final_valid", report.r_final_valid},
                {"kept_floor", rational_to_json(report.kept_floor)}};
}

json oracle_to_json(const OracleResult& result) {
    return json{{"q", result.q},
                {"max_wins", result.max_wins},
                {"total_cases", result.q * result.q},
                {"optimal_value", rational_to_json(result.optimal_value)},
                {"strategies_scanned", result.strategies_scanned},
                {"witness", strategy_to_json(result.witness)}};
}

json guarantee_to_json(const GuaranteeBound& bound) {
    return json{{"win_floor", bound.win_floor},
                {"probability", bound.probability},
                {"p1_above_30", bound.p1_above_30},
                {"floor_is_exact", bound.floor_is_exact}};
}

}  // namespace chshq
