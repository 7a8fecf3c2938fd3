#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bicolor/series.hpp"

namespace bicolor {

// Exact coefficients of one series, degree <= reliable, zero terms dropped.
struct SeriesRecord {
  std::string name;
  int num_vars = 2;
  int reliable = 0;
  std::vector<Term> terms;

  friend bool operator==(const SeriesRecord& a, const SeriesRecord& b);
};

SeriesRecord make_record(std::string name, const MSeries& s);
// Series of order reliable carrying the recorded terms.
MSeries record_series(const SeriesRecord& r);

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Document {
  std::string command;
  std::string family;
  std::vector<Rat> g;
  int order = 0;
  int i_max = 0;
  std::uint64_t seed = 0;
  std::vector<SeriesRecord> records;
  std::vector<CheckResult> checks;
};

std::string to_json(const Document& doc);
// Series rows first (name, e0.., numerator, denominator), then check rows.
std::string to_csv(const Document& doc);
Document parse_json(std::string_view text);

}  // namespace bicolor
