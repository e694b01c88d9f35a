#include "cli/report.hpp"

#include <sstream>

namespace cyint::app {

const char* to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kInconclusive: return "inconclusive";
  }
  return "?";
}

Status combine(Status a, Status b) {
  if (a == Status::kFail || b == Status::kFail) return Status::kFail;
  if (a == Status::kInconclusive || b == Status::kInconclusive) return Status::kInconclusive;
  return Status::kPass;
}

Table& Report::table(std::string name, std::vector<std::string> columns) {
  tables.push_back(Table{std::move(name), std::move(columns), {}});
  return tables.back();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["tool"] = "cyint";
  j["command"] = r.command;
  j["status"] = to_string(r.status);
  j["exit_code"] = static_cast<int>(r.status);
  j["config"] = r.config;
  j["result"] = r.result;
  j["notes"] = r.notes;
  return j.dump(2) + "\n";
}

std::string render_tsv(const Report& r) {
  std::ostringstream os;
  os << "# cyint " << r.command << "\n";
  os << "# status\t" << to_string(r.status) << "\n";
  for (const std::string& n : r.notes) os << "# note\t" << n << "\n";
  for (const Table& t : r.tables) {
    os << "\n## " << t.name << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "\t" : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace cyint::app
