#pragma once

#include <string>

#include "fromage/certificate.hpp"
#include "fromage/cheese.hpp"

namespace fromage {

inline constexpr const char* kSchemaVersion = "1";

/// Schema version "1": {version, outer:{cx,cy,r},
/// levels:[{n, eta, log_eps, log_sigma, budget, coverage}],
/// units:[{a:{re,im}, eps, eta, sigma, kappa, level, rings:[{n, N,
/// circle_radius, rho}]}], extra_discs:[{cx,cy,r}]}. Theorem-regime levels
/// carry log-domain fields only; unit rings are validated against the
/// rebuilt family on load.
std::string cheese_to_json(const Cheese& c, int indent = 2);
Cheese cheese_from_json(const std::string& text);

void save_cheese(const Cheese& c, const std::string& path, int indent = 2);
Cheese load_cheese(const std::string& path);

std::string certificate_to_json(const Certificate& cert, int indent = 2);

}  // namespace fromage
