#include "fqfrieze/cli.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fqfrieze/errors.hpp"
#include "fqfrieze/formulas.hpp"
#include "fqfrieze/frieze.hpp"
#include "fqfrieze/gf.hpp"
#include "fqfrieze/moduli.hpp"
#include "fqfrieze/partitions.hpp"
#include "fqfrieze/search.hpp"

namespace fqfrieze {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string field;
  long long q = 0;
  int width = 0;
  int max_width = 5;
  int max_n = 6;
  std::string strategy = "mitm";
  std::string format = "text";
  std::string which;
  std::string to;
  std::string row;
  std::string points;
  double budget = default_budget();
  int workers = 1;
};

RenderFormat parse_format(const std::string& name) {
  if (name == "text") return RenderFormat::text;
  if (name == "json") return RenderFormat::json;
  throw InputError("unknown format '" + name + "' (expected text or json)");
}

Field need_field(const RunConfig& cfg) {
  if (cfg.field.empty()) throw InputError("--field is required");
  return Field::parse(cfg.field);
}

json big_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(v);
  }
  return v.str();
}

// Left-aligned table with two spaces between columns.
std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& r : rows) {
    if (widths.size() < r.size()) widths.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], r[i].size());
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(widths[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

SearchOptions search_options(const RunConfig& cfg) {
  SearchOptions o;
  o.strategy = parse_strategy(cfg.strategy);
  o.budget = cfg.budget;
  o.workers = cfg.workers;
  return o;
}

ModuliOptions moduli_options(const RunConfig& cfg) {
  ModuliOptions o;
  o.budget = cfg.budget;
  o.workers = cfg.workers;
  return o;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  const Field f = need_field(cfg);
  const auto format = parse_format(cfg.format);
  const auto result = enumerate_friezes(f, cfg.width, search_options(cfg));
  out << catalog_orbits(result, format);
  if (format == RenderFormat::json) out << '\n';
  return exit_ok;
}

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  BigInt q;
  bool char2 = false;
  std::string label;
  if (!cfg.field.empty()) {
    const Field f = need_field(cfg);
    q = f.order();
    char2 = f.char_is_2();
    label = f.descriptor();
  } else if (cfg.q >= 2) {
    q = cfg.q;
    char2 = is_power_of_two(q);
    label = std::to_string(cfg.q);
  } else {
    throw InputError("count needs --field or --q >= 2");
  }
  const auto format = parse_format(cfg.format);
  const std::string which = cfg.which.empty() ? "friezes" : cfg.which;

  if (which == "friezes") {
    json rows = json::array();
    std::vector<std::vector<std::string>> table{{"w", "f_w"}};
    for (int w = 1; w <= cfg.max_width; ++w) {
      const BigInt c = count_friezes(q, char2, w);
      rows.push_back({{"w", w}, {"count", big_json(c)}});
      table.push_back({std::to_string(w), c.str()});
    }
    if (format == RenderFormat::json) {
      out << json{{"field", label}, {"friezes", rows}}.dump() << '\n';
    } else {
      out << "field: " << label << '\n' << format_table(table);
    }
    return exit_ok;
  }
  if (which == "moduli") {
    json rows = json::array();
    std::vector<std::vector<std::string>> table{
        {"n", "c_n", "c_n+", "c_n-", "moduli", "moduli+"}};
    for (int n = 2; n <= cfg.max_n; ++n) {
      const BigInt c = count_configurations(q, n);
      const BigInt m = count_moduli(q, n);
      json row{{"n", n}, {"c_n", big_json(c)}, {"moduli", big_json(m)}};
      std::vector<std::string> line{std::to_string(n), c.str(), "-", "-", m.str(), "-"};
      if (n % 2 == 0) {
        const auto s = count_signed_configurations(q, char2, n);
        const BigInt mp = count_moduli_plus(q, char2, n / 2);
        row["c_n_plus"] = big_json(s.plus);
        row["c_n_minus"] = big_json(s.minus);
        row["moduli_plus"] = big_json(mp);
        line[2] = s.plus.str();
        line[3] = s.minus.str();
        line[5] = mp.str();
      } else {
        row["c_n_plus"] = nullptr;
        row["c_n_minus"] = nullptr;
        row["moduli_plus"] = nullptr;
      }
      rows.push_back(row);
      table.push_back(line);
    }
    if (format == RenderFormat::json) {
      out << json{{"field", label}, {"moduli", rows}}.dump() << '\n';
    } else {
      out << "field: " << label << '\n' << format_table(table);
    }
    return exit_ok;
  }
  throw InputError("count --which must be friezes or moduli, got '" + which + "'");
}

struct CheckRow {
  std::string kind;
  std::string label;
  std::string enumerated;
  std::string expected;
  bool ok = false;
};

template <typename A, typename B>
CheckRow make_check(std::string kind, std::string label, const A& got, const B& want) {
  const BigInt g(got);
  const BigInt w(want);
  return {std::move(kind), std::move(label), g.str(), w.str(), g == w};
}

void verify_friezes(const Field& f, const RunConfig& cfg, std::vector<CheckRow>& rows) {
  for (const auto& c : verify_count_formula(f, cfg.max_width, search_options(cfg))) {
    rows.push_back(
        make_check("friezes", "w=" + std::to_string(c.width), c.enumerated, c.closed_form));
  }
}

void verify_moduli(const Field& f, const RunConfig& cfg, std::vector<CheckRow>& rows) {
  const BigInt q = f.order();
  const auto opts = moduli_options(cfg);
  for (int n = 2; n <= cfg.max_n; ++n) {
    const std::string label = "n=" + std::to_string(n);
    rows.push_back(make_check("configurations", label,
                              count_enumerated_configurations(f, n, SignFilter::all, opts),
                              count_configurations(q, n)));
    rows.push_back(make_check("orbits", label,
                              pgl2_orbits(f, n, SignFilter::all, opts).orbit_count,
                              count_moduli(q, n)));
    if (n % 2 != 0) continue;
    const auto signed_counts = count_signed_configurations(q, f.char_is_2(), n);
    rows.push_back(make_check("plus", label,
                              count_enumerated_configurations(f, n, SignFilter::plus, opts),
                              signed_counts.plus));
    rows.push_back(make_check("minus", label,
                              count_enumerated_configurations(f, n, SignFilter::minus, opts),
                              signed_counts.minus));
    rows.push_back(make_check("plus-orbits", label,
                              pgl2_orbits(f, n, SignFilter::plus, opts).orbit_count,
                              count_moduli_plus(q, f.char_is_2(), n / 2)));
  }
}

void verify_partitions(const Field& f, const RunConfig& cfg, std::vector<CheckRow>& rows) {
  for (int n = 2; n <= cfg.max_n; ++n) {
    for (int k = 2; k <= n; ++k) {
      const std::string label = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      const std::uint64_t brute = count_cyclic_partitions(n, k);
      rows.push_back(make_check("A_kn", label, brute, a_kn_closed_form(k, n)));
      rows.push_back(make_check("A_kn-expansion", label, brute, a_kn_via_expansion(k, n)));
    }
    const auto report = verify_partition_identity(f, n, cfg.budget);
    CheckRow r{"identity", "n=" + std::to_string(n), report.partition_sum.str(),
               report.configurations.str(), report.ok()};
    rows.push_back(r);
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field f = need_field(cfg);
  const auto format = parse_format(cfg.format);
  const std::string which = cfg.which.empty() ? "all" : cfg.which;
  if (which != "friezes" && which != "moduli" && which != "partitions" && which != "all") {
    throw InputError("--which must be friezes, moduli, partitions or all");
  }
  std::vector<CheckRow> rows;
  if (which == "friezes" || which == "all") verify_friezes(f, cfg, rows);
  if (which == "moduli" || which == "all") verify_moduli(f, cfg, rows);
  if (which == "partitions" || which == "all") verify_partitions(f, cfg, rows);

  const bool all_ok =
      std::all_of(rows.begin(), rows.end(), [](const CheckRow& r) { return r.ok; });
  if (format == RenderFormat::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"check", r.kind},
                     {"instance", r.label},
                     {"enumerated", r.enumerated},
                     {"expected", r.expected},
                     {"match", r.ok}});
    }
    out << json{{"field", f.descriptor()}, {"rows", arr}, {"all_match", all_ok}}.dump() << '\n';
  } else {
    std::vector<std::vector<std::string>> table{
        {"check", "instance", "enumerated", "expected", "status"}};
    for (const auto& r : rows) {
      table.push_back({r.kind, r.label, r.enumerated, r.expected, r.ok ? "ok" : "MISMATCH"});
    }
    out << "field: " << f.descriptor() << '\n' << format_table(table);
  }
  for (const auto& r : rows) {
    if (!r.ok) {
      err << "mismatch: " << r.kind << " " << r.label << ": enumerated " << r.enumerated
          << ", expected " << r.expected << '\n';
    }
  }
  return all_ok ? exit_ok : exit_mismatch;
}

std::string format_mat(const Field& f, const Mat2& m) {
  return "[[" + f.format(m.a) + "," + f.format(m.b) + "],[" + f.format(m.c) + "," +
         f.format(m.d) + "]]";
}

int cmd_map(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field f = need_field(cfg);
  if (cfg.to == "config") {
    if (cfg.row.empty()) throw InputError("map --to config needs --row");
    const FirstRow row = parse_first_row(f, cfg.row);
    auto image = frieze_to_configuration(row);
    if (auto* bad = std::get_if<CriterionFails>(&image)) {
      err << "error: " << format_tuple(f, row.entries) << " fails the matrix criterion, product "
          << format_mat(f, bad->product) << '\n';
      return exit_input;
    }
    const auto& config = std::get<Configuration>(image);
    out << "configuration: " << format_configuration(config) << '\n';
    auto back = configuration_to_frieze(config);
    const auto* again = std::get_if<FirstRow>(&back);
    const Tuple expect =
        row.size() % 2 == 0 ? rescaling_canonical(f, row.entries) : row.entries;
    if (again == nullptr || again->entries != expect) {
      err << "round trip failed\n";
      return exit_mismatch;
    }
    out << "round trip: ok" << (row.size() % 2 == 0 ? " (up to rescaling)" : "") << '\n';
    return exit_ok;
  }
  if (cfg.to == "frieze") {
    if (cfg.points.empty()) throw InputError("map --to frieze needs --points");
    const Configuration config = parse_configuration(f, cfg.points);
    auto image = configuration_to_frieze(config);
    if (auto* bad = std::get_if<NotLiftable>(&image)) {
      err << "error: not liftable: " << bad->reason << '\n';
      return exit_input;
    }
    const auto& row = std::get<FirstRow>(image);
    out << "row: " << format_tuple(f, row.entries) << '\n';
    auto back = frieze_to_configuration(row);
    const auto* again = std::get_if<Configuration>(&back);
    if (again == nullptr || !same_orbit(*again, config)) {
      err << "round trip failed\n";
      return exit_mismatch;
    }
    out << "round trip: ok (same PGL2 orbit)\n";
    return exit_ok;
  }
  throw InputError("map --to must be config or frieze");
}

int cmd_print(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field f = need_field(cfg);
  if (cfg.row.empty()) throw InputError("print needs --row");
  const FirstRow row = parse_first_row(f, cfg.row);
  auto built = frieze_from_first_row(row);
  if (auto* bad = std::get_if<NotAFrieze>(&built)) {
    err << "error: " << format_tuple(f, row.entries) << " is not a frieze row, product "
        << format_mat(f, bad->product) << '\n';
    return exit_input;
  }
  out << render_frieze(std::get<Frieze>(built), parse_format(cfg.format));
  if (cfg.format == "json") out << '\n';
  return exit_ok;
}

int cmd_partitions(const RunConfig& cfg, std::ostream& out) {
  if (cfg.max_n < 2) throw InputError("--max-n must be at least 2");
  const auto format = parse_format(cfg.format);
  json rows = json::array();
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> head{"n\\k"};
  for (int k = 2; k <= cfg.max_n; ++k) head.push_back(std::to_string(k));
  table.push_back(head);
  for (int n = 2; n <= cfg.max_n; ++n) {
    json values = json::array();
    std::vector<std::string> line{std::to_string(n)};
    for (int k = 2; k <= n; ++k) {
      const BigInt a = a_kn_closed_form(k, n);
      values.push_back(big_json(a));
      line.push_back(a.str());
    }
    rows.push_back({{"n", n}, {"a", values}});
    table.push_back(line);
  }
  if (format == RenderFormat::json) {
    out << json{{"max_n", cfg.max_n}, {"rows", rows}}.dump() << '\n';
  } else {
    out << format_table(table);
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Tame friezes over finite fields: enumeration and counting checks", "fqfrieze"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or json");
    sub->add_option("--budget", cfg.budget, "work cap (FQFRIEZE_BUDGET overrides the default)");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "enumerate friezes of one width");
  enumerate->add_option("--field", cfg.field, "p, p^k or p^k:c0,..,ck")->required();
  enumerate->add_option("--width", cfg.width, "frieze width")->required();
  enumerate->add_option("--strategy", cfg.strategy, "naive or mitm");
  common(enumerate);

  auto* count = app.add_subcommand("count", "closed-form count tables");
  count->add_option("--field", cfg.field, "field descriptor");
  count->add_option("--q", cfg.q, "any integer q >= 2 instead of a field");
  count->add_option("--which", cfg.which, "friezes or moduli");
  count->add_option("--max-width", cfg.max_width);
  count->add_option("--max-n", cfg.max_n);
  common(count);

  auto* verify = app.add_subcommand("verify", "compare enumeration with closed forms");
  verify->add_option("--field", cfg.field, "field descriptor")->required();
  verify->add_option("--which", cfg.which, "friezes, moduli, partitions or all");
  verify->add_option("--max-width", cfg.max_width);
  verify->add_option("--max-n", cfg.max_n);
  verify->add_option("--strategy", cfg.strategy, "naive or mitm");
  common(verify);

  auto* map = app.add_subcommand("map", "configuration <-> frieze correspondence");
  map->add_option("--field", cfg.field, "field descriptor")->required();
  map->add_option("--to", cfg.to, "config or frieze")->required();
  map->add_option("--row", cfg.row, "first row, comma-separated codes");
  map->add_option("--points", cfg.points, "points, comma-separated codes or inf");
  common(map);

  auto* print = app.add_subcommand("print", "render the frieze of a first row");
  print->add_option("--field", cfg.field, "field descriptor")->required();
  print->add_option("--row", cfg.row, "first row, comma-separated codes")->required();
  common(print);

  auto* partitions = app.add_subcommand("partitions", "triangle of A_{k,n}");
  partitions->add_option("--max-n", cfg.max_n);
  common(partitions);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*enumerate) return cmd_enumerate(cfg, out);
    if (*count) return cmd_count(cfg, out);
    if (*verify) return cmd_verify(cfg, out, err);
    if (*map) return cmd_map(cfg, out, err);
    if (*print) return cmd_print(cfg, out, err);
    if (*partitions) return cmd_partitions(cfg, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return exit_budget;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace fqfrieze
