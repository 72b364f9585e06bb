#pragma once

#include "curvelink/curve.hpp"
#include "curvelink/error.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace curvelink::fixture {

enum class ErrorCode {
  Syntax,            // malformed line, bad integer, empty document
  UnknownKey,        // unknown section or key
  Duplicate,         // repeated identifier, section or key
  DanglingReference, // name that does not resolve
  StrandCount,       // braid labels inconsistent with the braid's strands
  Invalid,           // well-formed but rejected by validation
};

/// "E1 syntax", "E2 unknown-key", ...
std::string code_name(ErrorCode code);

class FixtureError : public InvalidArgument {
public:
  FixtureError(ErrorCode code, int line, int column, const std::string& message, const std::string& file = {});
  ErrorCode code() const { return code_; }
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }
  /// Path of the fixture, empty when parsing a string.
  const std::string& file() const { return file_; }

private:
  ErrorCode code_;
  int line_;
  int column_;
  std::string message_;
  std::string file_;
};

/// Everything read from one fixture file.
///
/// Realizations are shared by all cycles; each CycleSpec carries a copy of the
/// full realization map.
struct FixtureDocument {
  /// Comment lines, without the leading '#', in file order.
  std::vector<std::string> metadata;
  curve::CurveCombinatorics curve;
  std::vector<curve::CycleSpec> cycles;
  std::map<std::string, curve::Realization> realizations;

  const curve::CycleSpec& cycle(const std::string& name) const;
  std::vector<std::string> cycle_names() const;
};

FixtureDocument parse_fixture(std::string_view text);
FixtureDocument load_fixture(const std::filesystem::path& path);

/// Normal form: sections in fixed order, one entry per line, comments first.
std::string serialize_fixture(const FixtureDocument& doc);

} // namespace curvelink::fixture
