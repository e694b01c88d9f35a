#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cyint/diffop.hpp"
#include "cyint/family.hpp"

namespace cyint::app {

using cyint::to_string;

/// Raised for anything the user must fix before a run can start (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { kFrobeniusBasis, kMirror, kInstantons, kCheck, kHasseWitt, kFrobeniusStructure, kDerivePf, kVerify };
enum class Format { kTsv, kJson };

const std::vector<std::string>& command_names();
const char* to_string(Command c);
Command parse_command(const std::string& name);

/// One run of the tool. Unset optionals fall back to per-command defaults.
struct RunConfig {
  std::optional<Command> command;
  std::optional<std::string> op;      // operator selector
  std::optional<std::string> family;  // simplicial, hyperoctahedral, a custom-family file, or "simplicial:n"
  std::optional<std::size_t> n;
  std::optional<std::vector<std::int64_t>> primes;
  std::optional<std::size_t> N, M, R, k;
  std::optional<int> s;
  std::optional<std::string> kappa;
  std::optional<std::string> suite;
  std::optional<Format> format;
  std::optional<std::string> output;
  std::optional<bool> extended;

  /// Fields set in `over` replace those here.
  void overlay(const RunConfig& over);
  /// Range checks on the fields that are present.
  void validate() const;
  nlohmann::ordered_json to_json() const;
};

/// Parses the structured config text; errors name the line or the field.
RunConfig parse_config_text(const std::string& text, const std::string& origin = "config");
RunConfig load_config_file(const std::string& path);

/// "7,11,13" -> {7, 11, 13}.
std::vector<std::int64_t> parse_prime_list(const std::string& text);
Format parse_format(const std::string& text);

/// quintic, simplicial:n, hyperoctahedral:n, diagonal4 or a JSON operator file.
ThetaOperator resolve_operator(const std::string& selector);
ThetaOperator parse_operator_json(const nlohmann::json& j, const std::string& origin);

/// Builtin family name and dimension, or a custom-family file.
FamilySpec resolve_family(const std::string& selector, std::optional<std::size_t> n);
FamilySpec parse_family_json(const nlohmann::json& j, const std::string& origin);

}  // namespace cyint::app
