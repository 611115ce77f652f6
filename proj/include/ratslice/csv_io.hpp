#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ratslice/classifier.hpp"
#include "ratslice/raster.hpp"

namespace ratslice {

inline constexpr const char* kCsvHeader = "i,j,re,im,label1,label2,in_locus,period1,period2";

/// One exported pixel.
struct CsvRow {
  int i = 0;
  int j = 0;
  Complex point;
  OrbitLabel label1 = OrbitLabel::BoundedUndecided;
  OrbitLabel label2 = OrbitLabel::BoundedUndecided;
  bool in_locus = false;
  std::optional<int> period1;
  std::optional<int> period2;

  bool operator==(const CsvRow&) const = default;
};

/// Header line, then one row per pixel in row-major order. Coordinates use 17
/// significant digits; periods are empty when absent.
void write_csv(const GridResult& g, std::ostream& out);
void export_csv(const GridResult& g, const std::filesystem::path& path);

/// Inverse of write_csv. Throws InvalidArgument on malformed input.
std::vector<CsvRow> read_csv(std::istream& in);
std::vector<CsvRow> read_csv(const std::filesystem::path& path);

/// Rows as write_csv would emit them.
std::vector<CsvRow> csv_rows(const GridResult& g);

}  // namespace ratslice
