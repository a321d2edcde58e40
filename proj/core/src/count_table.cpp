#include "cubeperm/count_table.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace cubeperm {

namespace {

constexpr std::string_view kHeader = "n,count,predicted,ratio";

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::runtime_error("count table line " + std::to_string(line_no) + ": bad number '" +
                             std::string(field) + "'");
  }
  return value;
}

std::optional<double> parse_optional(std::string_view field, std::size_t line_no) {
  if (field.empty()) return std::nullopt;
  return parse_number<double>(field, line_no);
}

}  // namespace

std::string format_real(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

bool CountTable::well_formed() const {
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (checkpoints[i].n <= checkpoints[i - 1].n) return false;
    if (checkpoints[i].count < checkpoints[i - 1].count) return false;
  }
  return true;
}

void CountTable::write_csv(std::ostream& out) const {
  out << kHeader << '\n';
  for (const auto& c : checkpoints) {
    out << c.n << ',' << c.count << ',';
    if (c.predicted) out << format_real(*c.predicted);
    out << ',';
    if (c.ratio) out << format_real(*c.ratio);
    out << '\n';
  }
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  write_csv(out);
  return out.str();
}

CountTable CountTable::read_csv(std::istream& in, const CongruenceSelector& selector) {
  CountTable table{selector, {}};
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kHeader) throw std::runtime_error("count table: expected header '" + std::string(kHeader) + "'");
      saw_header = true;
      continue;
    }
    const auto fields = split_fields(line);
    if (fields.size() != 4) {
      throw std::runtime_error("count table line " + std::to_string(line_no) + ": expected 4 fields");
    }
    Checkpoint c;
    c.n = parse_number<std::uint64_t>(fields[0], line_no);
    c.count = parse_number<std::uint64_t>(fields[1], line_no);
    c.predicted = parse_optional(fields[2], line_no);
    c.ratio = parse_optional(fields[3], line_no);
    table.checkpoints.push_back(c);
  }
  if (!saw_header) throw std::runtime_error("count table: empty input");
  if (!table.well_formed()) throw std::runtime_error("count table: checkpoints not increasing");
  return table;
}

}  // namespace cubeperm
