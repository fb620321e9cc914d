#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "mpcodes/codes.hpp"

namespace mpcodes::cli {

struct CodeSpec {
  std::string name;         // gold | simplex | hamming | repetition
  unsigned m = 0;           // parameter; the length for repetition
  std::string matrix_file;  // alternative to a builtin name
};

struct ExperimentConfig {
  CodeSpec code;
  std::optional<unsigned> p;
  std::optional<double> y;
  unsigned trials = 1;
  unsigned l_max = 4;
  std::uint64_t seed = 0;
  std::string out_dir = "out";
  std::string format = "csv,json";
  unsigned workers = 1;
  bool exact = false;
};

LinearCode build_code(const CodeSpec& spec);

int run_code_info(const CodeSpec& spec);
int run_spectra(const ExperimentConfig& cfg);
int run_moments(const ExperimentConfig& cfg);
int run_paths_verify(const ExperimentConfig& cfg);
int run_paths_count(const ExperimentConfig& cfg);

}  // namespace mpcodes::cli
