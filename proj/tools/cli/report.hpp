#pragma once

#include <deque>
#include <string>
#include <vector>

#include <json.hpp>

namespace cyint::app {

enum class Status { kPass = 0, kFail = 1, kInconclusive = 3 };

const char* to_string(Status s);
/// Fail dominates inconclusive, which dominates pass.
Status combine(Status a, Status b);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

/// Everything a command produces. Rendering happens only after the run completes.
struct Report {
  std::string command;
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  Status status = Status::kPass;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  /// A deque so references returned by table() stay valid.
  std::deque<Table> tables;
  std::vector<std::string> notes;

  void fold(Status s) { status = combine(status, s); }
  Table& table(std::string name, std::vector<std::string> columns);
};

std::string render_json(const Report& r);
std::string render_tsv(const Report& r);

}  // namespace cyint::app
