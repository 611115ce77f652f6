#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <numbers>
#include <random>
#include <string>

#include "ratslice/complex.hpp"

namespace testing {

using ratslice::Complex;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  Complex box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  // Log-uniform modulus in [rmin, rmax], uniform argument.
  Complex polar(double rmin, double rmax) {
    const double r = std::exp(uniform(std::log(rmin), std::log(rmax)));
    return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }
  // Uniform in the closed unit disk, with a quarter of the draws on the circle.
  Complex unit_disk() {
    if (integer(0, 3) == 0) return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
    return std::polar(std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }

 private:
  std::mt19937_64 gen_;
};

inline std::filesystem::path scratch_dir(const std::string& name) {
  const char* env = std::getenv("RATSLICE_TMP");
  std::filesystem::path root = env ? env : std::filesystem::temp_directory_path() / "ratslice-tests";
  std::filesystem::path dir = root / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testing
