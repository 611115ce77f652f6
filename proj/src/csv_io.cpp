#include "ratslice/csv_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "ratslice/error.hpp"

namespace ratslice {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    fields.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorKind::InvalidArgument, "csv line " + std::to_string(line_no) + ": " + why);
}

template <class T>
T parse_number(const std::string& s, std::size_t line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) malformed(line_no, "bad number '" + s + "'");
  return v;
}

}  // namespace

std::vector<CsvRow> csv_rows(const GridResult& g) {
  std::vector<CsvRow> rows;
  rows.reserve(g.cells.size());
  for (int j = 0; j < g.viewport.pixels_y; ++j) {
    for (int i = 0; i < g.viewport.pixels_x; ++i) {
      const PixelClass& px = g.at(i, j);
      rows.push_back({i, j, g.viewport.point(i, j), px.orbit1.label, px.orbit2.label, px.in_connectedness_locus,
                      px.orbit1.period, px.orbit2.period});
    }
  }
  return rows;
}

void write_csv(const GridResult& g, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const CsvRow& r : csv_rows(g)) {
    out << r.i << ',' << r.j << ',' << format_double(r.point.real()) << ',' << format_double(r.point.imag()) << ','
        << token(r.label1) << ',' << token(r.label2) << ',' << (r.in_locus ? 1 : 0) << ',';
    if (r.period1) out << *r.period1;
    out << ',';
    if (r.period2) out << *r.period2;
    out << '\n';
  }
}

void export_csv(const GridResult& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  write_csv(g, out);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "failed writing " + path.string());
}

std::vector<CsvRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) malformed(1, "missing header");
  std::vector<CsvRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 9) malformed(line_no, "expected 9 fields");
    CsvRow r;
    r.i = parse_number<int>(f[0], line_no);
    r.j = parse_number<int>(f[1], line_no);
    r.point = {parse_number<double>(f[2], line_no), parse_number<double>(f[3], line_no)};
    auto l1 = parse_token(f[4]);
    auto l2 = parse_token(f[5]);
    if (!l1 || !l2) malformed(line_no, "unknown label token");
    r.label1 = *l1;
    r.label2 = *l2;
    if (f[6] != "0" && f[6] != "1") malformed(line_no, "in_locus must be 0 or 1");
    r.in_locus = f[6] == "1";
    if (!f[7].empty()) r.period1 = parse_number<int>(f[7], line_no);
    if (!f[8].empty()) r.period2 = parse_number<int>(f[8], line_no);
    rows.push_back(r);
  }
  return rows;
}

std::vector<CsvRow> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return read_csv(in);
}

}  // namespace ratslice
