#pragma once

#include <json.hpp>

#include <string>

#include "painleve/dpmaps.hpp"
#include "painleve/ivs.hpp"
#include "painleve/pode.hpp"
#include "painleve/scalar.hpp"

namespace painleve {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// {"kind": ..., "num"/"den" or "re"/"im" decimal strings, "bits"}
Json scalar_to_json(const Scalar& s);

/// Scalars cross text boundaries as "num/den" (exact) or decimal (inexact).
std::string scalar_to_text(const Scalar& s);

std::string trajectory_to_csv(const Trajectory& t);
Json trajectory_to_json(const Trajectory& t);

std::string grid_to_csv(const ContourGrid& g);
Json grid_to_json(const ContourGrid& g);

std::string ode_trajectory_to_csv(const ODETrajectory& t);
Json ode_trajectory_to_json(const ODETrajectory& t);

Json resolution_to_json(const ResolutionRecord& rec);

}  // namespace painleve
