#include "fromage/certificate.hpp"

#include <algorithm>

namespace fromage {

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::kAnalytic: return "analytic";
    case CheckKind::kExact: return "exact";
    case CheckKind::kSampled: return "sampled";
    case CheckKind::kPlumbing: return "plumbing";
  }
  return "unknown";
}

bool Certificate::overall() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const CertEntry& e) { return e.pass; });
}

const CertEntry* Certificate::find(const std::string& id) const {
  for (const auto& e : entries) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

CertEntry& Certificate::require_at_most(const std::string& id, const std::string& statement,
                                        CheckKind kind, double demanded, double observed) {
  CertEntry e;
  e.id = id;
  e.statement = statement;
  e.kind = kind;
  e.demanded = demanded;
  e.observed = observed;
  e.pass = observed <= demanded;
  entries.push_back(std::move(e));
  return entries.back();
}

CertEntry& Certificate::require_at_least(const std::string& id, const std::string& statement,
                                         CheckKind kind, double demanded, double observed) {
  CertEntry e;
  e.id = id;
  e.statement = statement;
  e.kind = kind;
  e.demanded = demanded;
  e.observed = observed;
  e.pass = observed >= demanded;
  e.note = "pass iff observed >= demanded";
  entries.push_back(std::move(e));
  return entries.back();
}

CertEntry& Certificate::require_exact(const std::string& id, const std::string& statement,
                                      bool pass) {
  CertEntry e;
  e.id = id;
  e.statement = statement;
  e.kind = CheckKind::kExact;
  e.demanded = 0.0;
  e.observed = pass ? 0.0 : 1.0;
  e.pass = pass;
  entries.push_back(std::move(e));
  return entries.back();
}

void Certificate::append(const Certificate& other) {
  entries.insert(entries.end(), other.entries.begin(), other.entries.end());
}

}  // namespace fromage
