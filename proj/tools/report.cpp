#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cctype>
#include <numeric>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

namespace ulamlab::report {

namespace {

std::uint64_t parse_u64(std::string_view token) {
  std::uint64_t value = 0;
  const auto *end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty())
    throw ParseError("not an unsigned integer: '" + std::string(token) + "'");
  return value;
}

std::int64_t parse_i64(std::string_view token) {
  std::int64_t value = 0;
  const auto *end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end || token.empty())
    throw ParseError("not an integer: '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos)
      break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string_view> data_lines(std::string_view text, std::string_view header) {
  auto lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty())
    lines.pop_back();
  if (lines.empty() || lines.front() != header)
    throw ParseError("expected CSV header '" + std::string(header) + "'");
  lines.erase(lines.begin());
  return lines;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Fraction reduce(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw ParseError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  return g == 0 ? Fraction{0, 1} : Fraction{num / g, den / g};
}

Fraction add(Fraction a, Fraction b) {
  const auto g = std::gcd(a.den, b.den);
  return reduce(a.num * (b.den / g) + b.num * (a.den / g), a.den / g * b.den);
}

double as_double(Fraction f) { return static_cast<double>(f.num) / static_cast<double>(f.den); }

void check_decimal(std::string_view field, double value, int digits, const char *column) {
  if (field != format_decimal(value, digits))
    throw ParseError(fmt::format("column {} holds '{}' but the integer columns give {}", column, field,
                                 format_decimal(value, digits)));
}

constexpr int kRatioDigits = 9;
constexpr int kBoundDigits = 12;
constexpr std::string_view kDensityHeader = "k,count,ratio";
constexpr std::string_view kMajorantHeader = "n,u_n,delta,c_num,c_den,l,bound,actual";

std::string fraction_string(std::int64_t num, std::int64_t den) {
  return den == 1 ? fmt::format("{}", num) : fmt::format("{}/{}", num, den);
}

} // namespace

std::vector<std::uint64_t> parse_integer_list(std::string_view text) {
  std::vector<std::uint64_t> values;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n')
        ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '#')
        ++j;
      values.push_back(parse_u64(text.substr(i, j - i)));
      i = j;
    }
  }
  return values;
}

std::vector<std::uint64_t> parse_csv_integers(std::string_view text) {
  std::vector<std::uint64_t> values;
  for (auto part : split(text, ','))
    values.push_back(parse_u64(part));
  return values;
}

std::string format_decimal(double value, int digits) { return fmt::format("{:.{}f}", value, digits); }

std::string join(std::span<const std::uint64_t> values, std::string_view sep) {
  return fmt::format("{}", fmt::join(values.begin(), values.end(), sep));
}

std::string density_csv(std::span<const ulam_density_record> records) {
  std::string out = std::string(kDensityHeader) + "\n";
  for (const auto &r : records)
    out += fmt::format("{},{},{}\n", r.k, r.count, format_decimal(r.ratio, kRatioDigits));
  return out;
}

std::vector<ulam_density_record> parse_density_csv(std::string_view text) {
  std::vector<ulam_density_record> out;
  for (auto line : data_lines(text, kDensityHeader)) {
    const auto fields = split(line, ',');
    if (fields.size() != 3)
      throw ParseError("density row needs 3 fields: '" + std::string(line) + "'");
    ulam_density_record r{};
    r.k = parse_u64(fields[0]);
    r.count = parse_u64(fields[1]);
    if (r.k == 0)
      throw ParseError("k must be positive");
    const auto ratio = reduce(static_cast<std::int64_t>(r.count), static_cast<std::int64_t>(r.k));
    r.ratio_num = ratio.num;
    r.ratio_den = ratio.den;
    r.ratio = as_double(ratio);
    check_decimal(fields[2], r.ratio, kRatioDigits, "ratio");
    out.push_back(r);
  }
  return out;
}

std::string density_json(std::span<const ulam_density_record> records) {
  auto arr = nlohmann::json::array();
  for (const auto &r : records)
    arr.push_back({{"k", r.k}, {"count", r.count}, {"ratio", r.ratio}});
  return arr.dump(2) + "\n";
}

std::string density_table(std::span<const ulam_density_record> records, const ulam_trend_summary *trend) {
  std::string out = fmt::format("{:>12} {:>10} {:>12}\n", "k", "count", "ratio");
  for (const auto &r : records)
    out += fmt::format("{:>12} {:>10} {:>12}\n", r.k, r.count, format_decimal(r.ratio, kRatioDigits));
  if (trend) {
    out += fmt::format("# trend (final half of checkpoints): window_mean={} slope={:.3e} max_oscillation={} "
                       "verdict={}\n",
                       format_decimal(trend->last_window_mean, kRatioDigits), trend->slope,
                       format_decimal(trend->max_oscillation, kRatioDigits),
                       ulam_trend_verdict_string(trend->verdict));
  }
  return out;
}

std::string majorant_csv(std::span<const ulam_majorant_record> records) {
  std::string out = std::string(kMajorantHeader) + "\n";
  for (const auto &r : records) {
    out += fmt::format("{},{},{},{},{},{},{},{}\n", r.n, r.u_n, r.delta, r.c_num, r.c_den, r.l,
                       format_decimal(r.bound, kBoundDigits), format_decimal(r.actual, kBoundDigits));
  }
  return out;
}

std::vector<ulam_majorant_record> parse_majorant_csv(std::string_view text) {
  std::vector<ulam_majorant_record> out;
  for (auto line : data_lines(text, kMajorantHeader)) {
    const auto fields = split(line, ',');
    if (fields.size() != 8)
      throw ParseError("majorant row needs 8 fields: '" + std::string(line) + "'");
    ulam_majorant_record r{};
    r.n = parse_u64(fields[0]);
    r.u_n = parse_u64(fields[1]);
    r.delta = parse_u64(fields[2]);
    r.c_num = parse_i64(fields[3]);
    r.c_den = parse_i64(fields[4]);
    r.l = parse_u64(fields[5]);
    if (r.c_num <= 0 || r.c_den <= 0 || r.l == 0)
      throw ParseError("c and l must be positive");
    const auto c = reduce(r.c_num, r.c_den);
    if (c.num != r.c_num || c.den != r.c_den)
      throw ParseError("c is not in lowest terms");
    const auto l = static_cast<std::int64_t>(r.l);
    const auto bound = add({c.den, c.num}, {1, l});
    const auto actual = reduce(static_cast<std::int64_t>(r.n), l);
    r.bound_num = bound.num;
    r.bound_den = bound.den;
    r.actual_num = actual.num;
    r.actual_den = actual.den;
    r.one_over_c = as_double({c.den, c.num});
    r.bound = as_double(bound);
    r.actual = as_double(actual);
    check_decimal(fields[6], r.bound, kBoundDigits, "bound");
    check_decimal(fields[7], r.actual, kBoundDigits, "actual");
    r.count_check = r.n <= r.delta + 1 ? 1 : 0;
    // actual <= bound, compared exactly: a/b <= c/d  <=>  a*d <= c*b.
    r.majorant_check = static_cast<__int128>(actual.num) * bound.den <= static_cast<__int128>(bound.num) * actual.den;
    if (r.u_n >= 3) {
      r.has_floor = 1;
      if (ulam_constant_floor(r.u_n, &r.floor) != ULAM_OK)
        throw ParseError(ulam_last_error());
      r.meets_floor = as_double(c) >= r.floor ? 1 : 0;
    }
    out.push_back(r);
  }
  return out;
}

std::string majorant_json(std::span<const ulam_majorant_record> records) {
  auto arr = nlohmann::json::array();
  for (const auto &r : records) {
    arr.push_back({{"n", r.n},
                   {"u_n", r.u_n},
                   {"delta", r.delta},
                   {"c_num", r.c_num},
                   {"c_den", r.c_den},
                   {"l", r.l},
                   {"bound", r.bound},
                   {"actual", r.actual}});
  }
  return arr.dump(2) + "\n";
}

std::string majorant_table(std::span<const ulam_majorant_record> records) {
  std::string out = fmt::format("{:>6} {:>8} {:>8} {:>14} {:>12} {:>8} {:>14} {:>14} {:>6} {:>12} {:>6}\n", "n",
                                "u_n", "delta", "c", "1/c", "l", "bound", "actual", "check", "floor*",
                                "meets");
  for (const auto &r : records) {
    const bool ok = r.count_check && r.majorant_check;
    out += fmt::format("{:>6} {:>8} {:>8} {:>14} {:>12} {:>8} {:>14} {:>14} {:>6} {:>12} {:>6}\n", r.n, r.u_n,
                       r.delta, fraction_string(r.c_num, r.c_den), format_decimal(r.one_over_c, 9), r.l,
                       format_decimal(r.bound, kBoundDigits), format_decimal(r.actual, kBoundDigits),
                       ok ? "ok" : "FAIL", r.has_floor ? format_decimal(r.floor, 6) : std::string("-"),
                       r.has_floor ? (r.meets_floor ? "yes" : "no") : "-");
  }
  out += "# floor* is indicative: the o(1) term of the upper bound is taken as 0\n";
  return out;
}

bool same_record(const ulam_density_record &a, const ulam_density_record &b) {
  return a.k == b.k && a.count == b.count && a.ratio_num == b.ratio_num && a.ratio_den == b.ratio_den &&
         a.ratio == b.ratio;
}

bool same_record(const ulam_majorant_record &a, const ulam_majorant_record &b) {
  return a.n == b.n && a.u_n == b.u_n && a.delta == b.delta && a.c_num == b.c_num && a.c_den == b.c_den &&
         a.l == b.l && a.bound_num == b.bound_num && a.bound_den == b.bound_den && a.actual_num == b.actual_num &&
         a.actual_den == b.actual_den && a.one_over_c == b.one_over_c && a.bound == b.bound &&
         a.actual == b.actual && a.count_check == b.count_check && a.majorant_check == b.majorant_check &&
         a.has_floor == b.has_floor && a.floor == b.floor && a.meets_floor == b.meets_floor;
}

std::string svg_line_plot(const PlotSeries &series) {
  constexpr double width = 640, height = 400;
  constexpr double left = 70, right = 20, top = 40, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double x_min = 0, x_max = 1, y_min = 0, y_max = 1;
  if (!series.points.empty()) {
    const auto [xlo, xhi] = std::minmax_element(series.points.begin(), series.points.end(),
                                                [](auto &a, auto &b) { return a.first < b.first; });
    const auto [ylo, yhi] = std::minmax_element(series.points.begin(), series.points.end(),
                                                [](auto &a, auto &b) { return a.second < b.second; });
    x_min = xlo->first;
    x_max = xhi->first;
    y_min = ylo->second;
    y_max = yhi->second;
  }
  if (x_max == x_min)
    x_max = x_min + 1;
  if (y_max == y_min)
    y_max = y_min + 1;
  const auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto py = [&](double y) { return top + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  std::string out;
  out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
                     "viewBox=\"0 0 {} {}\">\n",
                     width, height, width, height);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
  out += fmt::format("<text x=\"{:.1f}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                     "font-size=\"16\">{}</text>\n",
                     width / 2, series.title);
  out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\" stroke=\"black\"/>\n", left,
                     top, top + plot_h);
  out += fmt::format("<line x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{2:.1f}\" y2=\"{1:.1f}\" stroke=\"black\"/>\n", left,
                     top + plot_h, left + plot_w);
  const auto label = [&](double x, double y, const char *anchor, const std::string &text) {
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"{}\" font-family=\"sans-serif\" "
                       "font-size=\"11\">{}</text>\n",
                       x, y, anchor, text);
  };
  label(left, top + plot_h + 16, "middle", fmt::format("{:.6g}", x_min));
  label(left + plot_w, top + plot_h + 16, "middle", fmt::format("{:.6g}", x_max));
  label(left - 6, top + plot_h, "end", fmt::format("{:.6g}", y_min));
  label(left - 6, top + 4, "end", fmt::format("{:.6g}", y_max));
  label(left + plot_w / 2, height - 12, "middle", series.x_label);
  out += fmt::format("<text x=\"16\" y=\"{0:.1f}\" transform=\"rotate(-90 16 {0:.1f})\" text-anchor=\"middle\" "
                     "font-family=\"sans-serif\" font-size=\"11\">{1}</text>\n",
                     top + plot_h / 2, series.y_label);
  out += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    if (i > 0)
      out += ' ';
    out += fmt::format("{:.2f},{:.2f}", px(series.points[i].first), py(series.points[i].second));
  }
  out += "\"/>\n</svg>\n";
  return out;
}

} // namespace ulamlab::report
