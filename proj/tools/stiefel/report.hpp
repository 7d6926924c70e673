#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "stiefel/cohomology.hpp"
#include "stiefel/stunted.hpp"
#include "stiefel/wu_systems.hpp"

namespace stiefel::cli {

using Json = nlohmann::ordered_json;

enum class Status { ok, violation, hypothesis_unmet, budget_exceeded };

std::string_view to_string(Status s) noexcept;
Status status_from_string(std::string_view s);

// 0 ok, 1 violation, 2 hypothesis or budget failures.
int exit_code(Status s) noexcept;

struct Report {
    std::string command;
    Json parameters = Json::object();
    Json results = Json::object();
    Status status = Status::ok;

    friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& report);
Report report_from_json(const Json& j);

// Monomial-text list, one entry per term; zero is the empty list.
Json class_to_json(const StiefelRing& ring, const CohomologyClass& x);

// Numbers that fit in 64 bits stay numbers, anything larger becomes a decimal string.
Json bigint_to_json(const BigInt& value);

/// One enumeration line: classes (nonzero degrees only), wu_consistent,
/// first_nonzero and theorem2_ok (null when the product theorem does not
/// apply to the system).
Json system_to_json(const CharClassSystem& system);

// Theorem-2 status of a system: nullopt when its hypotheses are unmet.
std::optional<bool> theorem2_status(const CharClassSystem& system);

}  // namespace stiefel::cli
