// JSON input documents and the batch commands run on them.
//
// {
//   "group": "A2", "torus_rank": 0, "I": ["a1"],
//   "M": [[0,1]],                          (optional, columns of M)
//   "fan": [{"generators": [[1,0]], "colours": ["a2"]}],
//   "faces": "generate" | "explicit",       (optional)
//   "divisors": {"D": {"[1,0]": 1, "a2": 2}} (optional)
// }
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "horofan/divisors.hpp"
#include "horofan/errors.hpp"
#include "horofan/horo.hpp"

namespace horofan::cli {

class ParseError : public Error {
 public:
  using Error::Error;
};

struct ConeSpec {
  std::vector<IntVector> generators;
  std::vector<std::string> colours;
};

struct InputDocument {
  std::string group;
  std::size_t torus_rank = 0;
  std::vector<std::string> I;
  std::optional<std::vector<IntVector>> M;
  std::vector<ConeSpec> fan;
  std::string faces = "generate";
  /// name -> (ray "[a,b]" or colour label) -> coefficient
  std::map<std::string, std::map<std::string, Int>> divisors;
};

/// Throws ParseError with the offending field.
InputDocument parse_input(const std::string& text);
std::string serialize(const InputDocument& doc);

struct Model {
  HorosphericalDatum datum;
  ColouredFan fan;
  std::vector<std::string> names;  // simple-root labels, indexed by root
};

/// Throws ParseError for bad labels or shapes, InvalidDatum for a bad (I, M).
Model build_model(const InputDocument& doc);
BInvariantDivisor divisor_from_document(const InputDocument& doc, const Model& model, const std::string& name);

struct Options {
  std::string divisor;
  std::optional<std::size_t> cone;
  std::optional<InputDocument> target;
};

inline constexpr const char* kJsonSentinel = "---- json ----";

struct Report {
  int exit_code = 0;
  std::string human;
  std::string json;
  /// human table, sentinel line, JSON block
  std::string text() const;
};

const std::vector<std::string>& command_names();

/// Runs one command. Exit codes: 0 success, 1 validation or domain failure,
/// 2 parse error.
Report execute(const std::string& command, const InputDocument& doc, const Options& options);

/// Parses and runs; parse errors become exit code 2 reports.
Report run(const std::string& command, const std::string& text, const Options& options);

}  // namespace horofan::cli
