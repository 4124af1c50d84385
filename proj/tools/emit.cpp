#include "emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace jacspec::cli {

bool RunReport::all_pass() const {
  for (const auto& v : verdicts) {
    if (!v.pass) return false;
  }
  return true;
}

std::string format_cell(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) {
    return std::to_string(std::get<std::int64_t>(c));
  }
  if (std::holds_alternative<double>(c)) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(c));
    return buf;
  }
  return std::get<std::string>(c);
}

std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    os << (i ? "," : "") << t.header[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << format_cell(row[i]);
    }
    os << '\n';
  }
  return os.str();
}

namespace {

nlohmann::json cell_json(const Cell& c) {
  if (std::holds_alternative<std::int64_t>(c)) return std::get<std::int64_t>(c);
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  return std::get<std::string>(c);
}

nlohmann::json config_json(const RunConfig& c) {
  return nlohmann::json{
      {"c1", c.c1},         {"c2", c.c2},           {"alpha", c.alpha},
      {"lo", c.lo},         {"hi", c.hi},           {"grid", c.grid},
      {"a_plus", c.a_plus}, {"a_minus", c.a_minus}, {"b_minus", c.b_minus},
      {"b_plus", c.b_plus}, {"n_start", c.n_start}, {"s_cap", c.s_cap},
      {"K", c.K},           {"n_max", c.n_max},     {"lambda", c.lambda},
      {"kind", c.kind},     {"f1", c.f1},           {"f2", c.f2},
      {"m", c.m},           {"format", c.format},   {"out", c.out}};
}

}  // namespace

std::string to_json(const RunReport& report, const RunConfig& config) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.table.rows) {
    nlohmann::json r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      r[report.table.header[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : report.verdicts) {
    verdicts.push_back({{"name", v.name}, {"pass", v.pass}, {"value", v.value}});
  }
  nlohmann::json doc{{"config", config_json(config)},
                     {"rows", std::move(rows)},
                     {"verdicts", std::move(verdicts)}};
  return doc.dump(2) + "\n";
}

int write_report(const RunReport& report, const RunConfig& config) {
  const bool json = config.format == "json";
  const std::string payload =
      json ? to_json(report, config) : to_csv(report.table);

  const bool to_file = !config.out.empty();
  if (to_file) {
    std::ofstream f(config.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << config.out << "\n";
      return 1;
    }
    f << payload;
  } else {
    std::cout << payload;
  }

  std::ostream& info = to_file ? std::cout : std::cerr;
  for (const auto& n : report.notes) info << "# " << n << "\n";
  for (const auto& v : report.verdicts) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v.value);
    info << (v.pass ? "[pass] " : "[FAIL] ") << v.name << " = " << buf << "\n";
  }
  return report.all_pass() ? 0 : 2;
}

}  // namespace jacspec::cli
