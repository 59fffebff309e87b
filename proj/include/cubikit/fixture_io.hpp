#pragma once

#include <optional>
#include <string>

#include "cubikit/reversors.hpp"
#include "cubikit/transformations.hpp"

namespace cubikit {

// A parsed fixture file: one instance (cells plus optional compositions,
// reversors and structure declaration) and, when the file lists functors,
// the family over it and its nested `instances`.
struct Fixture {
  StrictInstance instance;
  bool has_compositions = false;
  std::optional<StructureDeclaration> structure;
  // family.instances[0] is `instance` whenever the family is non-empty.
  TransformationFamily family;
};

// Throws ParseError (line/column) for malformed JSON, FixtureError with a
// JSON pointer for schema problems, CapabilityError when the declared
// variant lacks its tables.
Fixture parse_fixture(const std::string& text);
Fixture load_fixture(const std::string& path);

// Canonical JSON: cells in index order, maps keyed by label.
std::string emit_fixture(const Fixture& f);
std::string emit_fixture(const StrictInstance& c);

}  // namespace cubikit
