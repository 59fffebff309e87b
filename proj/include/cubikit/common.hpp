#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubikit {

// Face kind s/t and connection sign -/+ share one type: s pairs with Γ^-,
// t with Γ^+ in the face/connection identities.
enum class Sign : std::uint8_t { Minus = 0, Plus = 1 };

inline Sign flip(Sign s) { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }
inline int sign_index(Sign s) { return s == Sign::Minus ? 0 : 1; }
inline char sign_char(Sign s) { return s == Sign::Minus ? '-' : '+'; }

enum class Variant : std::uint8_t { Plain = 0, Semireflexive = 1, Reflexive = 2 };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& name);

inline bool has_degeneracies(Variant v) { return v != Variant::Plain; }
inline bool has_connections(Variant v) { return v == Variant::Reflexive; }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input problems that the CLI maps to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : InputError(msg + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

class FixtureError : public InputError {
 public:
  FixtureError(const std::string& pointer, const std::string& msg)
      : InputError(pointer + ": " + msg), pointer(pointer) {}
  std::string pointer;
};

class CapabilityError : public InputError {
 public:
  using InputError::InputError;
};

class CompositionError : public InputError {
 public:
  using InputError::InputError;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& msg, std::string partial)
      : Error(msg), partial(std::move(partial)) {}
  std::string partial;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

class OutOfUniverse : public Error {
 public:
  using Error::Error;
};

class AdmissibilityError : public InputError {
 public:
  using InputError::InputError;
};

class ClosureError : public Error {
 public:
  ClosureError(const std::string& msg, std::vector<std::string> missing)
      : Error(msg), missing(std::move(missing)) {}
  std::vector<std::string> missing;
};

// One failed law instance. `rule` names the relation, `detail` the cells.
struct Violation {
  std::string rule;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

using Report = std::vector<Violation>;

}  // namespace cubikit
