#pragma once

// Text, CSV, JSON and SVG rendering for the CLI. Works on the plain record
// structs of the C interface.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ulamlab/ulam_lab.h"

namespace ulamlab::report {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Whitespace-separated unsigned integers; '#' starts a comment that runs to
/// the end of the line.
std::vector<std::uint64_t> parse_integer_list(std::string_view text);

/// Comma-separated unsigned integers ("10,100,1000").
std::vector<std::uint64_t> parse_csv_integers(std::string_view text);

std::string format_decimal(double value, int digits);

// Density: k,count,ratio
std::string density_csv(std::span<const ulam_density_record> records);
std::vector<ulam_density_record> parse_density_csv(std::string_view text);
std::string density_json(std::span<const ulam_density_record> records);
std::string density_table(std::span<const ulam_density_record> records, const ulam_trend_summary *trend);

// Majorant: n,u_n,delta,c_num,c_den,l,bound,actual
std::string majorant_csv(std::span<const ulam_majorant_record> records);
std::vector<ulam_majorant_record> parse_majorant_csv(std::string_view text);
std::string majorant_json(std::span<const ulam_majorant_record> records);
std::string majorant_table(std::span<const ulam_majorant_record> records);

bool same_record(const ulam_density_record &a, const ulam_density_record &b);
bool same_record(const ulam_majorant_record &a, const ulam_majorant_record &b);

struct PlotSeries {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
};

/// Static line chart: frame, axis labels, min/max tick labels and one
/// polyline. Output depends only on the input.
std::string svg_line_plot(const PlotSeries &series);

std::string join(std::span<const std::uint64_t> values, std::string_view sep);

} // namespace ulamlab::report
