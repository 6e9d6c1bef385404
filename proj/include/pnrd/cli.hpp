#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pnrd/wedderburn.hpp"

namespace pnrd::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitComputation = 3;
inline constexpr int kExitUsage = 64;

struct NamedClass {
  std::string name;
  SymmetricClass cls;
};

struct Document {
  VarietyContext ctx;
  std::vector<NamedClass> classes;

  const NamedClass* find(const std::string& name) const;
};

/// The variety part of an input document. Validation errors carry the JSON
/// path of the offending value.
ContextDescription parse_variety(const Json& doc);

/// Parses one class value: an array of blocks in factor order, or an object
/// keyed by factor name.
SymmetricClass parse_class(const VarietyContext& ctx, const Json& value, const std::string& path);

Document load_document(const Json& doc);
Json read_json_file(const std::string& path);

/// Runs one command line (without the program name). Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnrd::cli
