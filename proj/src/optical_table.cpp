#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/materials.hpp"

namespace casimir::materials {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_number(std::string_view field, int line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty())
    throw FormatError("cannot parse number '" + std::string(field) + "'", line_no);
  return value;
}

}  // namespace

TabulatedEps2 load_optical_table(std::istream& source, TableFormat format) {
  const std::string_view expected_header =
      format == TableFormat::Eps2 ? "energy_eV,eps2" : "energy_eV,n,k";
  const std::size_t columns = format == TableFormat::Eps2 ? 2 : 3;

  std::vector<TabulatedEps2::Point> points;
  std::string provenance;
  bool seen_header = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line_no == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line = trim(line.substr(3));
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto note = trim(line.substr(1));
      if (!note.empty()) {
        if (!provenance.empty()) provenance += '\n';
        provenance += note;
      }
      continue;
    }
    if (!seen_header) {
      std::string compact;
      for (char c : line)
        if (c != ' ' && c != '\t') compact += c;
      if (compact != expected_header)
        throw FormatError("expected header '" + std::string(expected_header) + "', got '" + std::string(line) + "'",
                          line_no);
      seen_header = true;
      continue;
    }

    const auto fields = split_fields(line);
    if (fields.size() != columns)
      throw FormatError("expected " + std::to_string(columns) + " columns, got " + std::to_string(fields.size()),
                        line_no);
    const double energy = parse_number(fields[0], line_no);
    if (!(energy > 0.0)) throw FormatError("energy must be positive", line_no);
    if (!points.empty() && !(energy > points.back().energy_ev))
      throw FormatError("energies must be strictly increasing (unsorted or duplicate energy)", line_no);

    double eps2 = 0.0;
    if (format == TableFormat::Eps2) {
      eps2 = parse_number(fields[1], line_no);
      if (eps2 < 0.0) throw PassivityError("line " + std::to_string(line_no) + ": negative eps2");
    } else {
      const double n = parse_number(fields[1], line_no);
      const double k = parse_number(fields[2], line_no);
      if (n < 0.0 || k < 0.0) throw PassivityError("line " + std::to_string(line_no) + ": negative n or k");
      eps2 = 2.0 * n * k;
    }
    points.push_back({energy, eps2});
  }
  if (!seen_header) throw FormatError("missing header '" + std::string(expected_header) + "'", 0);
  if (points.empty()) throw InputError("optical table has no data rows");
  return TabulatedEps2::from_points(std::move(points), std::move(provenance));
}

}  // namespace casimir::materials
