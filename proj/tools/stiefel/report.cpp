#include "stiefel/report.hpp"

#include <bit>
#include <limits>

#include "stiefel/relations.hpp"

namespace stiefel::cli {

std::string_view to_string(Status s) noexcept {
    switch (s) {
        case Status::ok:
            return "ok";
        case Status::violation:
            return "violation";
        case Status::hypothesis_unmet:
            return "hypothesis_unmet";
        case Status::budget_exceeded:
            return "budget_exceeded";
    }
    return "unknown";
}

Status status_from_string(std::string_view s) {
    for (Status st : {Status::ok, Status::violation, Status::hypothesis_unmet,
                      Status::budget_exceeded}) {
        if (to_string(st) == s) return st;
    }
    throw ParseError("unknown status '" + std::string(s) + "'");
}

int exit_code(Status s) noexcept {
    switch (s) {
        case Status::ok:
            return 0;
        case Status::violation:
            return 1;
        default:
            return 2;
    }
}

Json to_json(const Report& report) {
    Json j;
    j["command"] = report.command;
    j["parameters"] = report.parameters;
    j["results"] = report.results;
    j["status"] = to_string(report.status);
    return j;
}

Report report_from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.parameters = j.at("parameters");
    r.results = j.at("results");
    r.status = status_from_string(j.at("status").get<std::string>());
    return r;
}

Json class_to_json(const StiefelRing& ring, const CohomologyClass& x) {
    Json terms = Json::array();
    for (Monomial m : x.terms()) terms.push_back(format(ring, m));
    return terms;
}

Json bigint_to_json(const BigInt& value) {
    if (value >= 0 && value <= std::numeric_limits<std::uint64_t>::max()) {
        return static_cast<std::uint64_t>(value);
    }
    return value.str();
}

std::optional<bool> theorem2_status(const CharClassSystem& system) {
    const StiefelRing& ring = system.ring();
    if (!product_theorem_applies(ring.n(), ring.k())) return std::nullopt;
    const auto first = first_nonzero_degree(system);
    if (!first || !std::has_single_bit(static_cast<std::uint64_t>(*first))) return std::nullopt;
    if (!is_wu_consistent(system).consistent || !satisfies_cor22(system)) return std::nullopt;
    const int q = std::countr_zero(static_cast<std::uint64_t>(*first));
    return check_theorem2(system, q).ok;
}

Json system_to_json(const CharClassSystem& system) {
    const StiefelRing& ring = system.ring();
    Json classes = Json::object();
    for (std::int64_t d = 1; d <= ring.top_degree(); ++d) {
        if (!system.w(d).is_zero()) classes[std::to_string(d)] = class_to_json(ring, system.w(d));
    }
    Json j;
    j["classes"] = std::move(classes);
    j["wu_consistent"] = is_wu_consistent(system).consistent;
    const auto first = first_nonzero_degree(system);
    j["first_nonzero"] = first ? Json(*first) : Json(nullptr);
    const auto thm = theorem2_status(system);
    j["theorem2_ok"] = thm ? Json(*thm) : Json(nullptr);
    return j;
}

}  // namespace stiefel::cli
