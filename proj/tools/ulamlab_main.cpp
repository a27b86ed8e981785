// ulamlab: command-line front end over the C interface of libulamlab.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "report.hpp"
#include "ulamlab/ulam_lab.h"

namespace {

enum class Format { Table, Csv, Json, Svg };

struct RunConfig {
  std::uint64_t limit = 0;
  std::size_t count = 0;
  std::uint64_t n = 0;
  std::uint64_t up_to = 0;
  std::uint64_t budget = 0;
  std::string algo = "fast";
  std::string mode = "general";
  std::string format = "table";
  std::string output;
  std::string terms_path;
  std::string checkpoints;
  std::string counts;
  std::string plot;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  LibraryError(ulam_status s, const std::string &what) : std::runtime_error(what), status(s) {}
  ulam_status status;
};

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void check(ulam_status status) {
  if (status != ULAM_OK)
    throw LibraryError(status, fmt::format("{}: {}", ulam_status_string(status), ulam_last_error()));
}

using SequencePtr = std::unique_ptr<ulam_sequence, decltype(&ulam_sequence_free)>;
using ChainPtr = std::unique_ptr<ulam_chain, decltype(&ulam_chain_free)>;
using ViolationsPtr = std::unique_ptr<ulam_violations, decltype(&ulam_violations_free)>;

SequencePtr adopt(ulam_sequence *s) { return {s, &ulam_sequence_free}; }
ChainPtr adopt(ulam_chain *c) { return {c, &ulam_chain_free}; }

std::span<const std::uint64_t> terms_of(const ulam_sequence *s) {
  return {ulam_sequence_terms(s), ulam_sequence_size(s)};
}
std::span<const std::uint64_t> terms_of(const ulam_chain *c) { return {ulam_chain_terms(c), ulam_chain_size(c)}; }

Format parse_format(const std::string &name) {
  if (name == "table")
    return Format::Table;
  if (name == "csv")
    return Format::Csv;
  if (name == "json")
    return Format::Json;
  if (name == "svg")
    return Format::Svg;
  throw UsageError("unknown format '" + name + "'");
}

void require_format(Format f, std::initializer_list<Format> allowed, const char *command) {
  for (auto a : allowed)
    if (a == f)
      return;
  throw UsageError(fmt::format("format not supported by '{}'", command));
}

void write_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw UsageError("cannot open '" + path + "' for writing");
  out << text;
}

void emit(const RunConfig &cfg, Format f, const std::string &text) {
  if (f == Format::Svg && cfg.output.empty())
    throw UsageError("svg output requires --output PATH");
  if (cfg.output.empty())
    std::cout << text;
  else
    write_file(cfg.output, text);
}

std::vector<std::uint64_t> read_terms_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return ulamlab::report::parse_integer_list(buf.str());
  } catch (const ulamlab::report::ParseError &e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<std::uint64_t> parse_list_option(const std::string &text, const char *flag) {
  try {
    return ulamlab::report::parse_csv_integers(text);
  } catch (const ulamlab::report::ParseError &e) {
    throw UsageError(fmt::format("{}: {}", flag, e.what()));
  }
}

ChainPtr load_chain(const RunConfig &cfg) {
  const auto terms = read_terms_file(cfg.terms_path);
  ulam_chain *raw = nullptr;
  check(ulam_chain_create(terms.data(), terms.size(), &raw));
  return adopt(raw);
}

// ---- ulam ------------------------------------------------------------------

int run_gen(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  ulam_sequence *raw = nullptr;
  check(ulam_sequence_generate(cfg.limit, cfg.algo == "naive" ? ULAM_ALGO_NAIVE : ULAM_ALGO_FAST, &raw));
  const auto seq = adopt(raw);
  const auto terms = terms_of(seq.get());

  std::string out;
  switch (f) {
  case Format::Table:
    out = ulamlab::report::join(terms, " ") + "\n";
    break;
  case Format::Csv:
    out = "index,term\n";
    for (std::size_t i = 0; i < terms.size(); ++i)
      out += fmt::format("{},{}\n", i + 1, terms[i]);
    break;
  case Format::Json:
    out = nlohmann::json{{"limit", cfg.limit}, {"algorithm", cfg.algo}, {"count", terms.size()}, {"terms", terms}}
              .dump(2) +
          "\n";
    break;
  case Format::Svg: {
    ulamlab::report::PlotSeries s{"Ulam numbers up to " + std::to_string(cfg.limit), "index m", "U_m", {}};
    for (std::size_t i = 0; i < terms.size(); ++i)
      s.points.emplace_back(static_cast<double>(i + 1), static_cast<double>(terms[i]));
    out = ulamlab::report::svg_line_plot(s);
    break;
  }
  }
  emit(cfg, f, out);
  return kExitOk;
}

int run_verify(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  require_format(f, {Format::Table, Format::Json}, "ulam verify");
  ulam_sequence *raw = nullptr;
  std::string source;
  if (!cfg.terms_path.empty()) {
    const auto terms = read_terms_file(cfg.terms_path);
    const std::uint64_t limit = cfg.limit != 0 ? cfg.limit : (terms.empty() ? 0 : terms.back());
    check(ulam_sequence_from_terms(terms.data(), terms.size(), limit, &raw));
    source = cfg.terms_path;
  } else {
    if (cfg.limit == 0)
      throw UsageError("ulam verify needs --limit or --terms");
    check(ulam_sequence_generate(cfg.limit, cfg.algo == "naive" ? ULAM_ALGO_NAIVE : ULAM_ALGO_FAST, &raw));
    source = cfg.algo + " generator";
  }
  const auto seq = adopt(raw);
  ulam_verify_summary v{};
  check(ulam_sequence_verify(seq.get(), &v));
  const auto terms = terms_of(seq.get());

  std::uint64_t max_gap = 0;
  std::size_t buckets = 0;
  const bool have_gaps = terms.size() >= 2;
  if (have_gaps) {
    const auto st = ulam_gap_statistics(terms.data(), terms.size(), &max_gap, nullptr, 0, &buckets);
    if (st != ULAM_ERR_BUFFER_TOO_SMALL && st != ULAM_OK)
      check(st);
  }
  const bool pass = v.structure_failures + v.uniqueness_failures + v.completeness_failures + v.lemma_failures == 0;

  std::string out;
  if (f == Format::Json) {
    out = nlohmann::json{{"source", source},
                         {"limit", ulam_sequence_limit(seq.get())},
                         {"terms", terms.size()},
                         {"structure_failures", v.structure_failures},
                         {"uniqueness_failures", v.uniqueness_failures},
                         {"completeness_failures", v.completeness_failures},
                         {"lemma_failures", v.lemma_failures},
                         {"max_gap", max_gap},
                         {"pass", pass}}
              .dump(2) +
          "\n";
  } else {
    const auto line = [&](const char *name, std::size_t failures, std::string first) {
      out += failures == 0 ? fmt::format("{:<22} ok\n", name)
                           : fmt::format("{:<22} FAIL ({} failures, first {})\n", name, failures, first);
    };
    out += fmt::format("source: {}\nlimit: {}\nterms: {}\n", source, ulam_sequence_limit(seq.get()), terms.size());
    line("structure", v.structure_failures, fmt::format("at index {}", v.first_structure_index));
    line("uniqueness", v.uniqueness_failures, fmt::format("term {}", v.first_uniqueness_term));
    line("completeness", v.completeness_failures, fmt::format("value {}", v.first_completeness_value));
    line("consecutive-sum lemma", v.lemma_failures, fmt::format("at index {}", v.first_lemma_index));
    if (have_gaps)
      out += fmt::format("max gap: {} ({} distinct gaps)\n", max_gap, buckets);
    out += pass ? "verdict: PASS\n" : "verdict: FAIL\n";
  }
  emit(cfg, f, out);
  return pass ? kExitOk : kExitViolation;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t limit) {
  std::vector<std::uint64_t> cps;
  for (std::uint64_t k = 1; k <= limit; k *= 10) {
    cps.push_back(k);
    if (k > limit / 10)
      break;
  }
  if (cps.back() != limit)
    cps.push_back(limit);
  return cps;
}

int run_density(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  if (cfg.limit == 0)
    throw UsageError("--limit must be positive");
  const auto cps = cfg.checkpoints.empty() ? default_checkpoints(cfg.limit)
                                           : parse_list_option(cfg.checkpoints, "--checkpoints");
  std::vector<ulam_density_record> records(cps.size());
  check(ulam_density_series(cfg.limit, cps.data(), cps.size(), records.data()));

  const auto plot = [&] {
    ulamlab::report::PlotSeries s{"Ulam density |U cap [1,k]| / k", "k", "ratio", {}};
    for (const auto &r : records)
      s.points.emplace_back(static_cast<double>(r.k), r.ratio);
    return ulamlab::report::svg_line_plot(s);
  };

  std::string out;
  switch (f) {
  case Format::Table: {
    ulam_trend_summary trend{};
    const bool have_trend = records.size() >= 3;
    if (have_trend)
      check(ulam_convergence_diagnostic(records.data(), records.size(), &trend));
    out = ulamlab::report::density_table(records, have_trend ? &trend : nullptr);
    break;
  }
  case Format::Csv:
    out = ulamlab::report::density_csv(records);
    break;
  case Format::Json:
    out = ulamlab::report::density_json(records);
    break;
  case Format::Svg:
    out = plot();
    break;
  }
  emit(cfg, f, out);
  if (!cfg.plot.empty())
    write_file(cfg.plot, plot());
  return kExitOk;
}

// ---- chain -----------------------------------------------------------------

int run_validate(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  require_format(f, {Format::Table, Format::Json}, "chain validate");
  const auto chain = load_chain(cfg);
  ulam_violations *raw = nullptr;
  check(ulam_chain_validate(chain.get(), cfg.mode == "star" ? ULAM_MODE_STAR : ULAM_MODE_GENERAL, &raw));
  const ViolationsPtr list(raw, &ulam_violations_free);
  const std::size_t count = ulam_violations_count(list.get());

  std::string out;
  auto violations = nlohmann::json::array();
  for (std::size_t i = 0; i < count; ++i) {
    ulam_violation v{};
    check(ulam_violations_get(list.get(), i, &v));
    if (f == Format::Json)
      violations.push_back({{"index", v.index}, {"kind", ulam_violation_kind_string(v.kind)}, {"reason", v.reason}});
    else
      out += fmt::format("violation index={} kind={}: {}\n", v.index, ulam_violation_kind_string(v.kind), v.reason);
  }
  if (f == Format::Json) {
    out = nlohmann::json{{"mode", cfg.mode}, {"valid", count == 0}, {"violations", violations}}.dump(2) + "\n";
  } else if (count == 0) {
    out = fmt::format("ok ({} mode, length {}, target {})\n", cfg.mode, ulam_chain_length(chain.get()),
                      terms_of(chain.get()).back());
  }
  emit(cfg, f, out);
  return count == 0 ? kExitOk : kExitViolation;
}

int run_decompose(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  require_format(f, {Format::Table, Format::Csv, Format::Json}, "chain decompose");
  const auto chain = load_chain(cfg);
  std::size_t count = 0;
  const auto probe = ulam_chain_decompose(chain.get(), nullptr, 0, &count);
  if (probe != ULAM_ERR_BUFFER_TOO_SMALL && probe != ULAM_OK)
    check(probe);
  std::vector<ulam_generator> gens(count);
  check(ulam_chain_decompose(chain.get(), gens.data(), gens.size(), &count));
  std::uint64_t sum = 0;
  check(ulam_chain_regulator_sum(chain.get(), &sum));
  const std::uint64_t target = terms_of(chain.get()).back();
  const bool identity = sum == target - 1;

  std::string out;
  if (f == Format::Csv) {
    out = "i,determiner,regulator\n";
    for (std::size_t i = 0; i < gens.size(); ++i)
      out += fmt::format("{},{},{}\n", i + 2, gens[i].determiner, gens[i].regulator);
  } else if (f == Format::Json) {
    auto pairs = nlohmann::json::array();
    for (std::size_t i = 0; i < gens.size(); ++i)
      pairs.push_back({{"i", i + 2}, {"determiner", gens[i].determiner}, {"regulator", gens[i].regulator}});
    out = nlohmann::json{{"target", target}, {"pairs", pairs}, {"regulator_sum", sum}, {"identity_holds", identity}}
              .dump(2) +
          "\n";
  } else {
    out = fmt::format("{:>6} {:>12} {:>12}\n", "i", "a_i", "r_i");
    for (std::size_t i = 0; i < gens.size(); ++i)
      out += fmt::format("{:>6} {:>12} {:>12}\n", i + 2, gens[i].determiner, gens[i].regulator);
    out += fmt::format("regulator_sum={} target-1={} {}\n", sum, target - 1, identity ? "OK" : "MISMATCH");
  }
  emit(cfg, f, out);
  return identity ? kExitOk : kExitViolation;
}

std::string indicative_upper(std::uint64_t n) {
  double upper = 0;
  if (n < 3 || ulam_upper_bound_indicative(n, &upper) != ULAM_OK)
    return "n/a";
  return fmt::format("{:.2f}", upper);
}

int run_shortest_table(const RunConfig &cfg, Format f) {
  require_format(f, {Format::Table, Format::Csv}, "chain shortest --up-to");
  std::vector<ulam_shortest_result> rows(cfg.up_to);
  const auto st = ulam_shortest_chain_table(cfg.up_to, cfg.budget, 0, rows.data());
  if (st != ULAM_OK && st != ULAM_ERR_BUDGET_EXHAUSTED)
    check(st);
  std::string out = f == Format::Csv ? "n,nu,iota,exact,lower_bound\n"
                                     : fmt::format("{:>6} {:>4} {:>8} {:>10}\n", "n", "nu", "iota", "lower");
  for (const auto &r : rows) {
    double lower = 0;
    check(ulam_schonhage_lower_bound(r.n, &lower));
    const std::string iota =
        r.exact ? std::to_string(r.lower) : fmt::format("[{},{}]", r.lower, r.upper);
    if (f == Format::Csv)
      out += fmt::format("{},{},{},{},{:.6f}\n", r.n, ulam_hamming_weight(r.n), r.exact ? r.lower : r.upper,
                         r.exact ? 1 : 0, lower);
    else
      out += fmt::format("{:>6} {:>4} {:>8} {:>10.4f}\n", r.n, ulam_hamming_weight(r.n), iota, lower);
  }
  emit(cfg, f, out);
  return kExitOk;
}

int run_shortest(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  if (cfg.up_to != 0)
    return run_shortest_table(cfg, f);
  require_format(f, {Format::Table, Format::Json}, "chain shortest");
  if (cfg.n == 0)
    throw UsageError("chain shortest needs --n or --up-to");
  ulam_shortest_result r{};
  ulam_chain *raw = nullptr;
  const auto st = ulam_shortest_chain(cfg.n, cfg.budget, &r, &raw);
  if (st != ULAM_OK && st != ULAM_ERR_BUDGET_EXHAUSTED)
    check(st);
  const auto witness = adopt(raw);
  double lower = 0;
  check(ulam_schonhage_lower_bound(cfg.n, &lower));
  const auto wterms = terms_of(witness.get());

  std::string out;
  if (f == Format::Json) {
    nlohmann::json j{{"n", cfg.n},
                     {"exact", r.exact != 0},
                     {"iota_lower", r.lower},
                     {"iota_upper", r.upper},
                     {"nu", ulam_hamming_weight(cfg.n)},
                     {"schonhage_lower", lower},
                     {"witness", wterms},
                     {"nodes", r.nodes}};
    double upper = 0;
    if (cfg.n >= 3 && ulam_upper_bound_indicative(cfg.n, &upper) == ULAM_OK)
      j["upper_indicative"] = upper;
    out = j.dump(2) + "\n";
  } else if (r.exact) {
    out = fmt::format("iota={} lower={:.2f} witness={} upper_indicative={} (indicative, o(1)=0)\n", r.lower, lower,
                      ulamlab::report::join(wterms, ","), indicative_upper(cfg.n));
  } else {
    out = fmt::format("iota=[{},{}] lower={:.2f} witness={} upper_indicative={} (indicative, o(1)=0) "
                      "status=budget-exhausted\n",
                      r.lower, r.upper, lower, ulamlab::report::join(wterms, ","), indicative_upper(cfg.n));
  }
  emit(cfg, f, out);
  return kExitOk;
}

int run_embed(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  require_format(f, {Format::Table, Format::Json}, "chain embed");
  if (cfg.count < 2)
    throw UsageError("--ulam-count must be at least 2");
  ulam_sequence *sraw = nullptr;
  check(ulam_sequence_first(cfg.count, &sraw));
  const auto seq = adopt(sraw);
  const auto ulam = terms_of(seq.get());
  ulam_chain *craw = nullptr;
  check(ulam_embed(ulam.data(), ulam.size(), &craw));
  const auto chain = adopt(craw);
  ulam_chain_constant cc{};
  check(ulam_chain_constant_compute(chain.get(), &cc));
  std::uint64_t sum = 0;
  check(ulam_chain_regulator_sum(chain.get(), &sum));
  const auto cterms = terms_of(chain.get());
  const double c = static_cast<double>(cc.c_num) / static_cast<double>(cc.c_den);
  double floor = 0;
  const bool have_floor = cc.n >= 3 && ulam_constant_floor(cc.n, &floor) == ULAM_OK;

  std::string out;
  if (f == Format::Json) {
    nlohmann::json j{{"ulam_count", cfg.count}, {"chain", cterms},     {"target", cc.n},
                     {"delta", cc.delta},       {"c_num", cc.c_num},   {"c_den", cc.c_den},
                     {"inf_r", cc.inf_r},       {"sup_r", cc.sup_r},   {"regulator_sum", sum}};
    if (have_floor) {
      j["constant_floor"] = floor;
      j["meets_floor"] = c >= floor;
    }
    out = j.dump(2) + "\n";
  } else {
    out = fmt::format("chain={}\n", ulamlab::report::join(cterms, ","));
    out += fmt::format("ulam_count={} target={} delta={} c={} inf_r={} sup_r={} regulator_sum={}\n", cfg.count,
                       cc.n, cc.delta,
                       cc.c_den == 1 ? std::to_string(cc.c_num) : fmt::format("{}/{}", cc.c_num, cc.c_den),
                       cc.inf_r, cc.sup_r, sum);
    if (have_floor)
      out += fmt::format("constant_floor={:.6f} (indicative, o(1)=0) c={:.6f} meets_floor={}\n", floor, c,
                         c >= floor ? "yes" : "no");
  }
  emit(cfg, f, out);
  return kExitOk;
}

// ---- report ----------------------------------------------------------------

int run_majorant(const RunConfig &cfg) {
  const auto f = parse_format(cfg.format);
  const auto counts = parse_list_option(cfg.counts, "--counts");
  std::vector<ulam_majorant_record> records(counts.size());
  check(ulam_majorant_series(counts.data(), counts.size(), records.data()));
  std::string out;
  switch (f) {
  case Format::Table:
    out = ulamlab::report::majorant_table(records);
    break;
  case Format::Csv:
    out = ulamlab::report::majorant_csv(records);
    break;
  case Format::Json:
    out = ulamlab::report::majorant_json(records);
    break;
  case Format::Svg: {
    ulamlab::report::PlotSeries s{"1/c of the covering chain", "n", "1/c", {}};
    for (const auto &r : records)
      s.points.emplace_back(static_cast<double>(r.n), r.one_over_c);
    out = ulamlab::report::svg_line_plot(s);
    break;
  }
  }
  emit(cfg, f, out);
  bool ok = true;
  for (const auto &r : records)
    ok = ok && r.count_check && r.majorant_check;
  return ok ? kExitOk : kExitViolation;
}

void add_output_options(CLI::App *cmd, RunConfig &cfg, std::vector<std::string> formats) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("-o,--output", cfg.output, "Write output to PATH instead of stdout");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Ulam numbers, addition chains and density reports"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto *ulam = app.add_subcommand("ulam", "Ulam sequence generation and checks");
  ulam->require_subcommand(1);
  auto *gen = ulam->add_subcommand("gen", "List Ulam numbers <= LIMIT");
  gen->add_option("--limit", cfg.limit, "Inclusive upper bound")->required()->check(CLI::PositiveNumber);
  gen->add_option("--algo", cfg.algo, "Generator")->check(CLI::IsMember({"naive", "fast"}));
  add_output_options(gen, cfg, {"table", "csv", "json", "svg"});

  auto *verify = ulam->add_subcommand("verify", "Check uniqueness, completeness and the consecutive-sum lemma");
  verify->add_option("--limit", cfg.limit, "Inclusive upper bound");
  verify->add_option("--algo", cfg.algo, "Generator")->check(CLI::IsMember({"naive", "fast"}));
  verify->add_option("--terms", cfg.terms_path, "Verify the integers in this file instead of generating");
  add_output_options(verify, cfg, {"table", "json"});

  auto *density = ulam->add_subcommand("density", "Density |U cap [1,k]|/k at checkpoints");
  density->add_option("--limit", cfg.limit, "Inclusive upper bound")->required()->check(CLI::PositiveNumber);
  density->add_option("--checkpoints", cfg.checkpoints, "Comma-separated ascending checkpoints");
  density->add_option("--plot", cfg.plot, "Also write an SVG plot to PATH");
  add_output_options(density, cfg, {"table", "csv", "json", "svg"});

  auto *chain = app.add_subcommand("chain", "Addition chains");
  chain->require_subcommand(1);
  auto *validate = chain->add_subcommand("validate", "Validate a chain file");
  validate->add_option("--terms", cfg.terms_path, "Chain file")->required();
  validate->add_option("--mode", cfg.mode, "Validity mode")->check(CLI::IsMember({"star", "general"}));
  add_output_options(validate, cfg, {"table", "json"});

  auto *decompose = chain->add_subcommand("decompose", "Determiner/regulator decomposition");
  decompose->add_option("--terms", cfg.terms_path, "Chain file")->required();
  add_output_options(decompose, cfg, {"table", "csv", "json"});

  auto *shortest = chain->add_subcommand("shortest", "Shortest addition chain search");
  auto *n_opt = shortest->add_option("--n", cfg.n, "Target")->check(CLI::PositiveNumber);
  auto *up_opt = shortest->add_option("--up-to", cfg.up_to, "Tabulate iota(n) for n = 1..N")
                     ->check(CLI::PositiveNumber);
  n_opt->excludes(up_opt);
  shortest->add_option("--budget", cfg.budget, "Node budget (0 = unlimited)");
  add_output_options(shortest, cfg, {"table", "csv", "json"});

  auto *embed = chain->add_subcommand("embed", "Chain covering the first N Ulam numbers");
  embed->add_option("--ulam-count", cfg.count, "Number of Ulam terms")->required();
  add_output_options(embed, cfg, {"table", "json"});

  auto *report = app.add_subcommand("report", "Paper-bound reports");
  report->require_subcommand(1);
  auto *majorant = report->add_subcommand("majorant", "Covering-chain majorant at l = U_n");
  majorant->add_option("--counts", cfg.counts, "Comma-separated term counts (each >= 2)")->required();
  add_output_options(majorant, cfg, {"table", "csv", "json", "svg"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed())
      return run_gen(cfg);
    if (verify->parsed())
      return run_verify(cfg);
    if (density->parsed())
      return run_density(cfg);
    if (validate->parsed())
      return run_validate(cfg);
    if (decompose->parsed())
      return run_decompose(cfg);
    if (shortest->parsed())
      return run_shortest(cfg);
    if (embed->parsed())
      return run_embed(cfg);
    if (majorant->parsed())
      return run_majorant(cfg);
  } catch (const UsageError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LibraryError &e) {
    std::cerr << "error: " << e.what() << "\n";
    const bool bad_input =
        e.status == ULAM_ERR_CONTRACT || e.status == ULAM_ERR_DOMAIN || e.status == ULAM_ERR_NULL_ARGUMENT;
    return bad_input ? kExitUsage : kExitViolation;
  }
  return kExitUsage;
}
