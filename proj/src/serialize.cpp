#include "subtrop/serialize.hpp"

namespace subtrop {

Json to_json(const BigInt& value) {
    if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
    return Json(value.get_str());
}

Json to_json(const BigRational& value) { return Json(value.to_string()); }

Json to_json(const ExponentSolution& n) {
    Json out = Json::array();
    for (const auto& x : n.n) out.push_back(to_json(x));
    return out;
}

Json to_json(const LinearCondition& cond) {
    Json clauses = Json::array();
    for (const auto& clause : cond.clauses) {
        Json literals = Json::array();
        for (const auto& lit : clause.literals) {
            Json item;
            item["pos"] = lit.pos + 1;
            item["coeffs"] = lit.coeffs;
            literals.push_back(std::move(item));
        }
        Json item;
        item["row"] = clause.row + 1;
        item["neg"] = clause.neg + 1;
        item["literals"] = std::move(literals);
        clauses.push_back(std::move(item));
    }
    Json out;
    out["dim"] = cond.dim;
    out["clauses"] = std::move(clauses);
    return out;
}

Json to_json(const SymbolicWitness& w) {
    Json terms = Json::array();
    for (const auto& term : w.terms) terms.push_back(Json::array({term.numerator, term.denominator}));
    Json t;
    t["one"] = 1;
    t["terms"] = std::move(terms);
    Json out;
    out["t"] = std::move(t);
    out["n"] = to_json(w.n);
    return out;
}

Json to_json(const Decision& decision) {
    Json out;
    if (decision.status == Status::Sat) {
        out["status"] = "sat";
        out["n"] = to_json(*decision.n);
        return out;
    }
    out["status"] = "unsat";
    if (decision.zero_row) {
        out["reason"] = "zero-row";
        out["row"] = *decision.zero_row + 1;
    }
    return out;
}

Json to_json(const VerificationReport& report) {
    Json out;
    out["t"] = to_json(report.t_value);
    out["r"] = to_json(report.r_value);
    Json point = Json::array();
    for (const auto& x : report.point) point.push_back(to_json(x));
    Json values = Json::array();
    for (const auto& x : report.values) values.push_back(to_json(x));
    out["point"] = std::move(point);
    out["values"] = std::move(values);
    out["ok"] = report.ok;
    return out;
}

} // namespace subtrop
