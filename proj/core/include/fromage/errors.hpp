#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fromage {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition (maps to CLI exit 2).
struct InvalidInput : Error {
  using Error::Error;
};

/// Disc inversion requested with the origin inside the closed disc.
struct OriginInsideDisc : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// Evaluation requested within machine precision of a pole.
struct PoleError : Error {
  using Error::Error;
};

/// Evaluation requested inside a deleted disc.
struct InsideDeletedDisc : Error {
  using Error::Error;
};

/// A radius budget check failed (maps to CLI exit 3).
struct BudgetExceeded : Error {
  using Error::Error;
};

/// Merge of cheeses with different outer discs.
struct OuterDiscMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};

/// A full covering would materialize more discs than allowed (CLI exit 4).
struct CapExceeded : Error {
  std::uint64_t requested;
  std::uint64_t cap;
  CapExceeded(std::uint64_t requested_, std::uint64_t cap_, const std::string& what_)
      : Error(what_), requested(requested_), cap(cap_) {}
};

/// A level's parameters are too extreme to materialize in doubles.
struct NotMaterializable : Error {
  using Error::Error;
};

/// Rejection sampling acceptance rate fell below the floor.
struct RejectionRateError : Error {
  using Error::Error;
};

/// Malformed or wrong-version serialized input (maps to CLI exit 2).
struct SchemaError : InvalidInput {
  using InvalidInput::InvalidInput;
};

}  // namespace fromage
