#pragma once

// Stable external formats:
//   operator record  {"format":"fockarith.operator","version":1,"dim":D,
//                     "kind":"diagonal|up_shift|down_shift|sparse","entries":[...]}
//     diagonal entries: [[re, im], ...] (one per basis index)
//     sparse entries:   [[row, col, re, im], ...]
//     shift entries:    []
//   identity report  [{"identity":id,"n":n|[..],"max_deviation":x,"pass":b,"skipped":b,"note":s}, ...]
//   radial CSV       radius,direction_phase,value_re,value_im,error_bound

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "fockarith/fock_operator.hpp"
#include "fockarith/hardy.hpp"
#include "fockarith/report.hpp"

namespace fockarith {

using json = nlohmann::json;

inline json to_json(const FockOperator& op) {
  json j;
  j["format"] = "fockarith.operator";
  j["version"] = 1;
  j["dim"] = op.dim();
  j["kind"] = to_string(op.kind());
  json entries = json::array();
  switch (op.kind()) {
    case ReprKind::diagonal:
      for (const cplx& v : op.diagonal_values()) entries.push_back({v.real(), v.imag()});
      break;
    case ReprKind::sparse:
      for (const auto& e : op.triplets()) entries.push_back({e.row, e.col, e.value.real(), e.value.imag()});
      break;
    case ReprKind::up_shift:
    case ReprKind::down_shift:
      break;
  }
  j["entries"] = std::move(entries);
  return j;
}

inline FockOperator operator_from_json(const json& j) {
  if (j.value("format", "") != "fockarith.operator") throw std::invalid_argument("operator record: bad format tag");
  const auto dim = j.at("dim").get<std::size_t>();
  const auto kind = j.at("kind").get<std::string>();
  const auto& entries = j.at("entries");
  if (kind == "diagonal") {
    if (entries.size() != dim) throw std::invalid_argument("operator record: diagonal length != dim");
    std::vector<cplx> v;
    v.reserve(dim);
    for (const auto& e : entries) v.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return FockOperator::diagonal(std::move(v));
  }
  if (kind == "up_shift") return FockOperator::up_shift(dim);
  if (kind == "down_shift") return FockOperator::down_shift(dim);
  if (kind == "sparse") {
    std::vector<SparseEntry> t;
    for (const auto& e : entries)
      t.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                   cplx(e.at(2).get<double>(), e.at(3).get<double>())});
    return FockOperator::sparse(dim, std::move(t));
  }
  throw std::invalid_argument("operator record: unknown kind '" + kind + "'");
}

inline json to_json(const Report& rep) {
  json out = json::array();
  for (const auto& r : rep.records) {
    json e;
    e["identity"] = r.identity;
    if (r.args.size() == 1) {
      e["n"] = r.args.front();
    } else if (r.args.empty()) {
      e["n"] = nullptr;
    } else {
      e["n"] = r.args;
    }
    e["max_deviation"] = r.max_deviation;
    e["pass"] = r.pass;
    e["skipped"] = r.skipped;
    if (!r.note.empty()) e["note"] = r.note;
    out.push_back(std::move(e));
  }
  return out;
}

inline std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_csv_header(std::ostream& os) { os << "radius,direction_phase,value_re,value_im,error_bound\n"; }

inline void write_csv_row(std::ostream& os, const RadialSample& s) {
  os << format_double(s.radius) << ',' << format_double(s.phase) << ',' << format_double(s.value.real()) << ','
     << format_double(s.value.imag()) << ',' << format_double(s.error) << '\n';
}

inline void write_csv(std::ostream& os, const RadialTrace& t) {
  write_csv_header(os);
  for (const auto& s : t.samples) write_csv_row(os, s);
}

}  // namespace fockarith
