#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "fockarith/arith.hpp"

namespace fockarith {

/// One identity evaluated at one argument (an n, a pair, or a tuple).
struct CheckRecord {
  std::string identity;
  std::vector<u64> args;
  double max_deviation = 0.0;
  bool pass = true;
  bool skipped = false;
  std::string note;
};

struct Report {
  std::vector<CheckRecord> records;

  void add(std::string identity, std::vector<u64> args, double deviation, double tol, std::string note = {}) {
    records.push_back({std::move(identity), std::move(args), deviation, deviation <= tol, false, std::move(note)});
  }
  void skip(std::string identity, std::vector<u64> args, std::string why) {
    records.push_back({std::move(identity), std::move(args), 0.0, true, true, std::move(why)});
  }
  void append(const Report& other) { records.insert(records.end(), other.records.begin(), other.records.end()); }

  std::size_t failures() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.pass; }));
  }
  std::size_t skips() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.skipped; }));
  }
  bool passed() const { return failures() == 0; }
  double worst_deviation() const {
    double m = 0.0;
    for (const auto& r : records)
      if (!r.skipped) m = std::max(m, r.max_deviation);
    return m;
  }
};

}  // namespace fockarith
