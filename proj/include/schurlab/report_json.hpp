#pragma once

// JSON forms of the verification reports. Every object carries
// "schema": 1; exact quantities are canonical strings ("p/q"), so equal
// inputs give byte-identical output.

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "schurlab/admissible.hpp"
#include "schurlab/detident.hpp"
#include "schurlab/preserver.hpp"

namespace schurlab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// Seed header for randomized runs.
struct RunSeed {
    std::uint64_t seed = 0;
};

Json to_json(const ExpansionReport& r, std::optional<RunSeed> seed = std::nullopt);

Json to_json(const ConclusionReport& r);
Json to_json(const MaclaurinVerdict& v);

/// `theorem_labeled` is false for relaxed families, whose u lies outside
/// (0, 1).
Json to_json(const PreserverReport& r);

Json to_json(const AdmissibleClass& c);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace schurlab
