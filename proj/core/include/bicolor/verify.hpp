#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bicolor/rational.hpp"
#include "bicolor/records.hpp"

namespace bicolor {

struct VerifyOptions {
  int order = 6;
  std::uint64_t seed = 1;
};

// qseries, paths, slices, hankel, closedform, dimers, extensions.
const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all". Throws
// std::invalid_argument for an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& options);

// Sample points of the form (small integer) / (small prime).
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : gen_(seed) {}
  Rat next();
  // Avoids zero and the given values.
  Rat next_avoiding(const std::vector<Rat>& excluded);

 private:
  std::mt19937_64 gen_;
};

}  // namespace bicolor
