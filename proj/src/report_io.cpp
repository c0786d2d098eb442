// orlicz - paired Orlicz regrets and divergence risk bounds
// Copyright 2026 orlicz contributors
// Licensed under Apache 2.0

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"
#include "orlicz/error.hpp"
#include "orlicz/sweep.hpp"

namespace orlicz {

namespace {

using nlohmann::json;

std::string sci(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::string sci(const Cell& c) { return c.ok() && c.value ? sci(*c.value) : std::string(); }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json number_or_null(const std::optional<double>& v) { return v ? number_or_null(*v) : json(nullptr); }

const char* kind_name(DivergenceKind k) { return k == DivergenceKind::Alpha ? "alpha" : "kl"; }

struct Column {
  const char* name;
  Cell SweepRow::*cell;
};

constexpr Column kColumns[] = {
    {"W", &SweepRow::lower_regret},   {"R_lower", &SweepRow::lower_risk},
    {"R_upper", &SweepRow::upper_risk}, {"V", &SweepRow::upper_regret},
    {"P_lower", &SweepRow::lower_safety}, {"P_upper", &SweepRow::upper_safety},
};

CellStatus parse_status(const std::string& s) {
  for (CellStatus c : {CellStatus::Ok, CellStatus::Infeasible, CellStatus::NonConvergence,
                       CellStatus::Failed, CellStatus::Absent}) {
    if (s == to_string(c)) return c;
  }
  throw Error(ErrorCode::Parse, "unknown cell status '" + s + "'");
}

std::optional<double> opt_number(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string emit_csv(const SweepReport& report) {
  std::string out = "epsilon,W,R_lower,mean,R_upper,V,P_lower,P_upper\n";
  for (const SweepRow& r : report.rows) {
    out += sci(r.epsilon) + ',' + sci(r.lower_regret) + ',' + sci(r.lower_risk) + ',' + sci(r.mean) +
           ',' + sci(r.upper_risk) + ',' + sci(r.upper_regret) + ',' + sci(r.lower_safety) + ',' +
           sci(r.upper_safety) + '\n';
  }
  return out;
}

std::string emit_json(const SweepReport& report) {
  const SweepMetadata& m = report.metadata;
  json meta = {{"shape", m.shape},
               {"scale", m.scale},
               {"divergence", kind_name(m.kind)},
               {"alpha", m.alpha},
               {"dof", m.dof},
               {"threshold", number_or_null(m.threshold)},
               {"units", m.units},
               {"timestamp", m.timestamp ? json(*m.timestamp) : json(nullptr)}};
  json rows = json::array();
  for (const SweepRow& r : report.rows) {
    json row = {{"epsilon", r.epsilon}, {"mean", r.mean}};
    json status = json::object();
    json iterations = json::object();
    json mu = json::object();
    json t = json::object();
    for (const Column& c : kColumns) {
      const Cell& cell = r.*c.cell;
      row[c.name] = cell.ok() ? number_or_null(cell.value) : json(nullptr);
      status[c.name] = to_string(cell.status);
      iterations[c.name] = cell.iterations;
      mu[c.name] = number_or_null(cell.mu);
      t[c.name] = number_or_null(cell.t);
    }
    row["status"] = std::move(status);
    row["iterations"] = std::move(iterations);
    row["mu"] = std::move(mu);
    row["t"] = std::move(t);
    rows.push_back(std::move(row));
  }
  return json{{"metadata", std::move(meta)}, {"rows", std::move(rows)}}.dump(2) + '\n';
}

}  // namespace

std::string emit(const SweepReport& report, OutputFormat format) {
  return format == OutputFormat::Csv ? emit_csv(report) : emit_json(report);
}

SweepReport parse_report_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const json& meta = doc.at("metadata");
    SweepReport out;
    SweepMetadata& m = out.metadata;
    m.shape = meta.at("shape").get<double>();
    m.scale = meta.at("scale").get<double>();
    m.kind = meta.at("divergence").get<std::string>() == "alpha" ? DivergenceKind::Alpha
                                                                 : DivergenceKind::KullbackLeibler;
    m.alpha = meta.at("alpha").get<double>();
    m.dof = meta.at("dof").get<int>();
    m.threshold = opt_number(meta.at("threshold"));
    m.units = meta.at("units").get<std::string>();
    if (!meta.at("timestamp").is_null()) m.timestamp = meta.at("timestamp").get<std::string>();

    for (const json& row : doc.at("rows")) {
      SweepRow r;
      r.epsilon = row.at("epsilon").get<double>();
      r.mean = row.at("mean").get<double>();
      for (const Column& c : kColumns) {
        Cell& cell = r.*c.cell;
        cell.value = opt_number(row.at(c.name));
        cell.status = parse_status(row.at("status").at(c.name).get<std::string>());
        cell.iterations = row.at("iterations").at(c.name).get<std::size_t>();
        cell.mu = opt_number(row.at("mu").at(c.name));
        cell.t = opt_number(row.at("t").at(c.name));
      }
      out.rows.push_back(std::move(r));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("report JSON: ") + e.what());
  }
}

std::string emit_fit(const FitSummary& fit, OutputFormat format) {
  const MomentSummary& e = fit.empirical;
  const MomentSummary& f = fit.fitted;
  if (format == OutputFormat::Json) {
    auto moments = [](const MomentSummary& s) {
      return json{{"mean", s.mean}, {"variance", s.variance}, {"skewness", s.skewness},
                  {"kurtosis", s.kurtosis}};
    };
    const json doc = {{"count", fit.count},
                      {"units", fit.units},
                      {"params", {{"a", fit.params.shape}, {"b", fit.params.scale}}},
                      {"empirical", moments(e)},
                      {"fitted", moments(f)}};
    return doc.dump(2) + '\n';
  }
  std::string out = "parameter,value\n";
  out += "a," + sci(fit.params.shape) + '\n';
  out += "b (" + fit.units + ")," + sci(fit.params.scale) + '\n';
  out += "count," + std::to_string(fit.count) + '\n';
  out += "\nstatistic,Emp,Fit\n";
  out += "Average," + sci(e.mean) + ',' + sci(f.mean) + '\n';
  out += "Variance," + sci(e.variance) + ',' + sci(f.variance) + '\n';
  out += "Skewness," + sci(e.skewness) + ',' + sci(f.skewness) + '\n';
  out += "Kurtosis," + sci(e.kurtosis) + ',' + sci(f.kurtosis) + '\n';
  return out;
}

std::string emit_distortion(const DistortedDensity& table, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < table.grid.size(); ++i) {
      rows.push_back({{"grid", table.grid[i]},
                      {"p", number_or_null(table.base_density[i])},
                      {"Z", number_or_null(table.rn_values[i])},
                      {"pZ", number_or_null(table.product[i])}});
    }
    return rows.dump(2) + '\n';
  }
  std::string out = "grid,p,Z,pZ\n";
  for (std::size_t i = 0; i < table.grid.size(); ++i) {
    out += sci(table.grid[i]) + ',' + sci(table.base_density[i]) + ',' + sci(table.rn_values[i]) +
           ',' + sci(table.product[i]) + '\n';
  }
  return out;
}

}  // namespace orlicz
