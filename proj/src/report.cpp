#include "qcv/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qcv {

namespace {

using nlohmann::json;

// CSV fields are simple identifiers and numbers; quote defensively anyway.
std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

int Report::pass_count() const {
  int k = 0;
  for (const auto& c : checks)
    if (c.status == "pass") ++k;
  return k;
}

int Report::fail_count() const { return static_cast<int>(checks.size()) - pass_count(); }

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "text") return ReportFormat::Text;
  throw std::invalid_argument("unknown report format: " + name);
}

std::string current_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string emit_report(const Report& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json j;
      j["checks"] = json::array();
      for (const auto& c : r.checks) {
        j["checks"].push_back({{"id", c.id},
                               {"description", c.description},
                               {"status", c.status},
                               {"residual_kind", c.residual_kind},
                               {"residual", c.residual},
                               {"runtime_s", c.runtime_s}});
      }
      j["summary"] = {{"pass", r.pass_count()}, {"fail", r.fail_count()}};
      j["config"] = r.config_echo;
      j["seed"] = r.seed;
      if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;
      return j.dump(2) + "\n";
    }
    case ReportFormat::Csv: {
      std::ostringstream os;
      os << "id,description,status,residual_kind,residual,runtime_s\n";
      for (const auto& c : r.checks)
        os << csv_quote(c.id) << ',' << csv_quote(c.description) << ',' << c.status << ','
           << c.residual_kind << ',' << format_double(c.residual) << ','
           << format_double(c.runtime_s) << '\n';
      return os.str();
    }
    case ReportFormat::Text: {
      std::ostringstream os;
      if (!r.timestamp.empty()) os << "run: " << r.timestamp << '\n';
      os << "seed: " << r.seed << '\n';
      for (const auto& [k, v] : r.config_echo) os << "config " << k << " = " << v << '\n';
      for (const auto& c : r.checks) {
        os << (c.status == "pass" ? "[PASS] " : "[FAIL] ") << c.id;
        if (c.residual_kind == "exact-zero")
          os << "  residual: exact-zero";
        else if (c.residual_kind == "float")
          os << "  residual: " << format_double(c.residual);
        os << "  (" << format_double(c.runtime_s) << " s)  " << c.description << '\n';
      }
      os << r.pass_count() << " passed, " << r.fail_count() << " failed\n";
      return os.str();
    }
  }
  throw std::logic_error("emit_report: unreachable");
}

Report report_from_json(const std::string& text) {
  const json j = json::parse(text);
  Report r;
  for (const auto& c : j.at("checks")) {
    CheckRecord rec;
    rec.id = c.at("id").get<std::string>();
    rec.description = c.at("description").get<std::string>();
    rec.status = c.at("status").get<std::string>();
    rec.residual_kind = c.at("residual_kind").get<std::string>();
    rec.residual = c.at("residual").get<double>();
    rec.runtime_s = c.at("runtime_s").get<double>();
    r.checks.push_back(std::move(rec));
  }
  r.config_echo = j.at("config").get<std::map<std::string, std::string>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

}  // namespace qcv
