#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fromage/geometry.hpp"

namespace fromage {

/// How an entry's observed value was obtained.
enum class CheckKind {
  kAnalytic,  // closed-form inequality evaluated exactly
  kExact,     // bit-exact equality
  kSampled,   // sup/min over a seeded point set; understates the true sup
  kPlumbing,  // bookkeeping with no mathematical content
};

std::string to_string(CheckKind kind);

struct SampleMeta {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  double margin = 0.0;
};

/// One checked condition: the bound the construction demands, the bound
/// observed, and enough metadata to reproduce the observation.
struct CertEntry {
  std::string id;
  std::string statement;   // the inequality or identity, in words/formulas
  CheckKind kind = CheckKind::kAnalytic;
  double demanded = 0.0;   // bound the observed value must not exceed
  double observed = 0.0;
  bool pass = false;
  std::optional<SampleMeta> samples;
  std::optional<Complex> worst_point;  // argmax/argmin location for sampled sups
  std::string note;
};

struct Certificate {
  std::vector<CertEntry> entries;

  bool overall() const;
  const CertEntry* find(const std::string& id) const;

  /// observed <= demanded entries.
  CertEntry& require_at_most(const std::string& id, const std::string& statement, CheckKind kind,
                             double demanded, double observed);
  /// observed >= demanded entries (stored with the same pass convention).
  CertEntry& require_at_least(const std::string& id, const std::string& statement, CheckKind kind,
                              double demanded, double observed);
  CertEntry& require_exact(const std::string& id, const std::string& statement, bool pass);

  void append(const Certificate& other);
};

}  // namespace fromage
