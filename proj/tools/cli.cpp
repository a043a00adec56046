#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "declustr/analysis.hpp"
#include "declustr/combinatorics.hpp"
#include "declustr/error.hpp"
#include "declustr/serialize.hpp"
#include "declustr/simulator.hpp"

namespace declustr::cli {
namespace {

enum class Format { table, csv, json };

const std::map<std::string, Format> kFormats = {
    {"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};

constexpr const char* kGrammar =
    "usage: declustr design {validate|complete|hadamard|reduce} ...\n"
    "       declustr group {build|verify} ...\n"
    "       declustr layout {build|rotate|inspect} ...\n"
    "       declustr analyze {workload|tradeoff|counterexample} ...\n"
    "       declustr simulate ...\n"
    "every command takes --format table|csv|json; --help for details\n";

struct CodeOptions {
  std::string code = "rdp";
  int p = 3;
  int k = 0;
  int delta = 2;
  std::string family = "balanced";

  void attach(CLI::App* app) {
    app->add_option("--code", code, "Horizontal code: rdp or rs")
        ->check(CLI::IsMember({"rdp", "rs"}));
    app->add_option("--p", p, "RDP prime");
    app->add_option("--k", k, "RS length");
    app->add_option("--delta", delta, "RS parity columns");
    app->add_option("--family", family, "Extended rows: balanced, single or rotations")
        ->check(CLI::IsMember({"balanced", "single", "rotations"}));
  }

  ParityGroup build() const {
    const HorizontalCode hc = code == "rdp" ? HorizontalCode::rdp(p) : HorizontalCode::rs(k, delta);
    return make_group(hc, parse_group_family(family));
  }
};

std::vector<int> parse_disk_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--fail", "expected comma-separated disk indices, got '" + text + "'");
    }
  }
  return out;
}

std::string label_text(ColumnLabel label, int delta) {
  if (delta <= 2 && !label.is_data()) return label.parity == 1 ? "P" : "Q";
  return label.to_string();
}

std::string arrangement_text(const Arrangement& a, int delta) {
  std::string out;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (delta > 2 && c) out += ' ';
    out += label_text(a[c], delta);
  }
  return out;
}

std::string join(const std::vector<int>& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(values[i]);
  return out;
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void write_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << doc.dump(2) << '\n';
}

void flush_warnings(std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  warnings.clear();
}

int default_jobs() {
  if (const char* env = std::getenv("DECLUSTR_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::logic_error&) {
    }
  }
  return 1;
}

// ---- design ---------------------------------------------------------------

void emit_design(const Design& d, Format format, std::ostream& out) {
  const auto& p = d.params();
  switch (format) {
    case Format::table:
      out << "valid " << p.to_string() << " design, " << d.size() << " blocks\n";
      for (std::size_t i = 0; i < d.size(); ++i) {
        out << std::setw(4) << i << "  {" << join(d.block(i)) << "}\n";
      }
      break;
    case Format::csv:
      out << "block,points\n";
      for (std::size_t i = 0; i < d.size(); ++i) out << i << ",\"" << join(d.block(i)) << "\"\n";
      break;
    case Format::json:
      out << design_to_json(d).dump() << '\n';
      break;
  }
}

void emit_validation(const Design& d, Format format, std::ostream& out) {
  const auto& p = d.params();
  switch (format) {
    case Format::table:
      out << "valid " << p.to_string() << " design, " << d.size() << " blocks\n";
      break;
    case Format::csv:
      out << "t,n,k,lambda,blocks\n" << p.t << ',' << p.n << ',' << p.k << ',' << p.lambda << ','
          << d.size() << '\n';
      break;
    case Format::json:
      out << json{{"valid", true}, {"t", p.t}, {"n", p.n}, {"k", p.k}, {"lambda", p.lambda},
                  {"blocks", d.size()}}
                 .dump()
          << '\n';
      break;
  }
}

// ---- group ----------------------------------------------------------------

void emit_group(const ParityGroup& g, Format format, std::ostream& out) {
  const int delta = g.delta();
  switch (format) {
    case Format::table:
      out << g.code().describe() << ", " << to_string(g.family()) << ": "
          << g.extended_rows().size() << " extended rows, m = " << g.depth() << '\n';
      for (std::size_t e = 0; e < g.extended_rows().size(); ++e) {
        out << std::setw(4) << e << "  " << arrangement_text(g.extended_rows()[e], delta) << '\n';
      }
      break;
    case Format::csv:
      out << "extended_row,labels\n";
      for (std::size_t e = 0; e < g.extended_rows().size(); ++e) {
        out << e << ',' << arrangement_text(g.extended_rows()[e], delta) << '\n';
      }
      break;
    case Format::json: {
      json rows = json::array();
      for (const auto& a : g.extended_rows()) rows.push_back(arrangement_text(a, delta));
      out << json{{"group", group_to_json(g)}, {"m", g.depth()}, {"extended_rows", rows}}.dump()
          << '\n';
      break;
    }
  }
}

void emit_balance(const ParityGroup& g, const BalanceReport& r, Format format, std::ostream& out) {
  switch (format) {
    case Format::table:
      out << g.code().describe() << ", " << to_string(g.family()) << ", m = " << g.depth() << '\n'
          << "C1 " << (r.c1 ? "pass" : "fail") << "  C2 " << (r.c2 ? "pass" : "fail") << "  C3 "
          << (r.c3 ? "pass" : "fail") << "  C4 " << (r.c4 ? "pass" : "fail") << "  => "
          << (r.balanced() ? "balanced" : "unbalanced") << '\n';
      for (const auto& [s, value] : r.tau) out << "tau_" << s << " = " << value << '\n';
      break;
    case Format::csv:
      out << "c1,c2,c3,c4,balanced";
      for (int s = 1; s <= r.max_s; ++s) out << ",tau_" << s;
      out << '\n'
          << r.c1 << ',' << r.c2 << ',' << r.c3 << ',' << r.c4 << ',' << r.balanced();
      for (int s = 1; s <= r.max_s; ++s) {
        out << ',';
        if (r.tau.count(s)) out << r.tau.at(s);
      }
      out << '\n';
      break;
    case Format::json: {
      json tau = json::object();
      for (const auto& [s, value] : r.tau) tau[std::to_string(s)] = value;
      out << json{{"c1", r.c1}, {"c2", r.c2}, {"c3", r.c3}, {"c4", r.c4},
                  {"balanced", r.balanced()}, {"m", g.depth()}, {"tau", tau}}
                 .dump()
          << '\n';
      break;
    }
  }
}

// ---- layout ---------------------------------------------------------------

void emit_geometry(const DeclusteredLayout& l, Format format, std::ostream& out) {
  const LayoutGeometry g = layout_geometry(l);
  switch (format) {
    case Format::table:
      out << l.disks() << " disks, " << l.instances() << " groups, " << g.units_per_disk
          << " column-units per disk, M = " << g.rows_per_disk << '\n'
          << "disks worth of data " << rational_text(g.disks_of_data) << ", parity "
          << rational_text(g.disks_of_parity) << '\n';
      for (int d = 0; d < l.disks(); ++d) {
        std::vector<int> groups;
        for (const UnitSlot& s : l.disk_contents(d)) groups.push_back(s.instance);
        out << "disk " << std::setw(2) << d << ": groups " << join(groups, ' ') << "  parity units "
            << g.parity_units_per_disk[d] << '\n';
      }
      break;
    case Format::csv:
      out << "disk,groups,parity_units,data_units\n";
      for (int d = 0; d < l.disks(); ++d) {
        std::vector<int> groups;
        for (const UnitSlot& s : l.disk_contents(d)) groups.push_back(s.instance);
        out << d << ",\"" << join(groups, ' ') << "\"," << g.parity_units_per_disk[d] << ','
            << g.data_units_per_disk[d] << '\n';
      }
      break;
    case Format::json: {
      json disks = json::array();
      for (int d = 0; d < l.disks(); ++d) {
        std::vector<int> groups;
        for (const UnitSlot& s : l.disk_contents(d)) groups.push_back(s.instance);
        disks.push_back({{"disk", d}, {"groups", groups},
                         {"parity_units", g.parity_units_per_disk[d]},
                         {"data_units", g.data_units_per_disk[d]}});
      }
      out << json{{"n", l.disks()}, {"groups", l.instances()},
                  {"units_per_disk", g.units_per_disk}, {"rows_per_disk", g.rows_per_disk},
                  {"disks_of_data", rational_text(g.disks_of_data)},
                  {"disks_of_parity", rational_text(g.disks_of_parity)}, {"disks", disks}}
                 .dump()
          << '\n';
      break;
    }
  }
}

// ---- analyze --------------------------------------------------------------

void emit_workloads(const std::vector<WorkloadReport>& reports, Format format, std::ostream& out) {
  switch (format) {
    case Format::table:
      for (const auto& r : reports) {
        out << "fail {" << join(r.failed) << "}: ";
        out << "reads";
        for (std::size_t d = 0; d < r.units_read.size(); ++d) out << ' ' << r.units_read[d];
        out << (r.uniform ? "  uniform" : "  NON-UNIFORM");
        if (r.fraction) out << "  fraction " << rational_text(*r.fraction);
        if (r.closed_form) out << "  closed-form " << *r.closed_form;
        out << '\n';
      }
      break;
    case Format::csv: {
      out << "failed,disk,units_read,uniform,closed_form\n";
      for (const auto& r : reports) {
        for (std::size_t d = 0; d < r.units_read.size(); ++d) {
          out << '"' << join(r.failed) << "\"," << d << ',' << r.units_read[d] << ','
              << r.uniform << ',';
          if (r.closed_form) out << *r.closed_form;
          out << '\n';
        }
      }
      break;
    }
    case Format::json: {
      json arr = json::array();
      for (const auto& r : reports) {
        json item{{"failed", r.failed}, {"units_read", r.units_read}, {"uniform", r.uniform}};
        item["fraction"] = r.fraction ? json(rational_text(*r.fraction)) : json(nullptr);
        item["closed_form"] = r.closed_form ? json(*r.closed_form) : json(nullptr);
        arr.push_back(item);
      }
      out << arr.dump() << '\n';
      break;
    }
  }
}

void emit_tradeoff(int n, const std::vector<TradeoffRow>& rows, Format format, std::ostream& out) {
  switch (format) {
    case Format::table:
      out << "n = " << n << '\n'
          << std::setw(4) << "k" << std::setw(8) << "lambda" << std::setw(11) << "1 failure"
          << std::setw(12) << "2 failures" << std::setw(8) << "parity" << std::setw(10)
          << "depth/m" << '\n';
      for (const auto& r : rows) {
        out << std::setw(4) << r.k << std::setw(8) << r.lambda << std::setw(10)
            << format_percent(r.one_failure) << '%' << std::setw(11)
            << format_percent(r.two_failures) << '%' << std::setw(8)
            << format_fixed(r.parity_disks, 1) << std::setw(10) << rational_text(r.depth_over_m)
            << '\n';
      }
      break;
    case Format::csv:
      out << "k,lambda,pct_one_failure,pct_two_failures,parity_disks,depth_over_m\n";
      for (const auto& r : rows) {
        out << r.k << ',' << r.lambda << ',' << format_percent(r.one_failure) << ','
            << format_percent(r.two_failures) << ',' << format_fixed(r.parity_disks, 1) << ','
            << rational_text(r.depth_over_m) << '\n';
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"k", r.k},
                       {"lambda", r.lambda},
                       {"pct_one_failure", format_percent(r.one_failure)},
                       {"pct_two_failures", format_percent(r.two_failures)},
                       {"parity_disks", format_fixed(r.parity_disks, 1)},
                       {"depth_over_m", rational_text(r.depth_over_m)}});
      }
      out << arr.dump() << '\n';
      break;
    }
  }
}

void emit_counterexample(const DeclusteredLayout& l, const CounterexampleReport& r, Format format,
                         std::ostream& out) {
  const int delta = l.group().delta();
  const auto cell_text = [&](const CounterexampleCell& c) -> std::string {
    if (!c.present) return "X";
    std::string s = c.label ? label_text(*c.label, delta) : "#";
    if (c.accessed()) s = "*" + s;
    return s;
  };
  switch (format) {
    case Format::table:
      out << "fail {" << join(r.failed) << "}  (* = accessed, X = not on disk)\n" << "group ";
      for (int d = 0; d < l.disks(); ++d) out << std::setw(6) << ("d" + std::to_string(d));
      out << '\n';
      for (int i = 0; i < l.instances(); ++i) {
        out << std::setw(5) << i << ' ';
        for (int d = 0; d < l.disks(); ++d) out << std::setw(6) << cell_text(r.cells[i][d]);
        out << '\n';
      }
      out << "units ";
      for (int d = 0; d < l.disks(); ++d) out << std::setw(6) << r.column_units_accessed[d];
      out << "  column-units accessed\nreads ";
      for (int d = 0; d < l.disks(); ++d) out << std::setw(6) << r.units_read[d];
      out << (r.uniform ? "  uniform\n" : "  NON-UNIFORM\n");
      break;
    case Format::csv:
      out << "group,disk,present,label,units_read\n";
      for (int i = 0; i < l.instances(); ++i) {
        for (int d = 0; d < l.disks(); ++d) {
          const auto& c = r.cells[i][d];
          if (!c.present) continue;
          out << i << ',' << d << ",1," << (c.label ? label_text(*c.label, delta) : "") << ','
              << c.units_read << '\n';
        }
      }
      break;
    case Format::json:
      out << json{{"failed", r.failed},
                  {"column_units_accessed", r.column_units_accessed},
                  {"units_read", r.units_read},
                  {"uniform", r.uniform}}
                 .dump()
          << '\n';
      break;
  }
}

// ---- simulate -------------------------------------------------------------

void emit_sweep(const SweepSummary& s, Format format, std::ostream& out) {
  switch (format) {
    case Format::table:
      for (const auto& o : s.outcomes) {
        out << "fail {" << join(o.failed) << "}: " << (o.recovered ? "recovered" : "CORRUPT")
            << (o.matches_prediction ? ", reads match analysis" : ", reads DIFFER from analysis")
            << '\n';
      }
      out << s.passed << '/' << s.total() << " recovered, ";
      if (s.uniform && s.min_reads == s.max_reads) {
        out << "uniform reads " << s.max_reads << "/disk\n";
      } else if (s.uniform) {
        out << "uniform reads per set, " << s.min_reads << ".." << s.max_reads << "/disk\n";
      } else {
        out << "non-uniform reads " << s.min_reads << ".." << s.max_reads << "/disk\n";
      }
      break;
    case Format::csv:
      out << "failed,recovered,matches_prediction,units_read\n";
      for (const auto& o : s.outcomes) {
        std::vector<int> reads(o.units_read.begin(), o.units_read.end());
        out << '"' << join(o.failed) << "\"," << o.recovered << ',' << o.matches_prediction
            << ",\"" << join(reads, ' ') << "\"\n";
      }
      break;
    case Format::json: {
      json arr = json::array();
      for (const auto& o : s.outcomes) {
        arr.push_back({{"failed", o.failed}, {"recovered", o.recovered},
                       {"matches_prediction", o.matches_prediction}, {"units_read", o.units_read}});
      }
      out << json{{"s", s.s}, {"passed", s.passed}, {"total", s.total()},
                  {"min_reads", s.min_reads}, {"max_reads", s.max_reads}, {"uniform", s.uniform},
                  {"outcomes", arr}}
                 .dump()
          << '\n';
      break;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Declustered-parity layouts from t-designs and balanced parity groups", "declustr"};
  app.require_subcommand(1);

  Format format = Format::table;
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(kFormats))
        ->type_name("table|csv|json");
  };
  int jobs = default_jobs();
  std::uint64_t seed = 0;
  std::string file, out_path, layout_path, design_path, fail_text, fixture;
  int n = 0, k = 0, t = 0, s = 0, max_s = -1, exhaustive = -1;
  std::vector<std::string> row_specs;
  CodeOptions code;

  auto* design = app.add_subcommand("design", "Validate or construct t-designs");
  design->require_subcommand(1);
  auto* d_validate = design->add_subcommand("validate", "Exhaustively validate a design file");
  d_validate->add_option("--file", file, "Design JSON")->required();
  auto* d_complete = design->add_subcommand("complete", "All k-subsets of n points");
  d_complete->add_option("--n", n)->required();
  d_complete->add_option("--k", k)->required();
  d_complete->add_option("--t", t)->required();
  auto* d_hadamard = design->add_subcommand("hadamard", "Sylvester Hadamard 3-design");
  d_hadamard->add_option("--n", n)->required();
  auto* d_reduce = design->add_subcommand("reduce", "Reinterpret a design at lower strength");
  d_reduce->add_option("--file", file)->required();
  d_reduce->add_option("--s", s)->required();
  for (auto* cmd : {d_validate, d_complete, d_hadamard, d_reduce}) add_format(cmd);
  for (auto* cmd : {d_complete, d_hadamard, d_reduce}) {
    cmd->add_option("--out", out_path, "Write the design JSON here");
  }

  auto* group = app.add_subcommand("group", "Build or verify parity groups");
  group->require_subcommand(1);
  auto* g_build = group->add_subcommand("build", "List the extended rows of a group");
  auto* g_verify = group->add_subcommand("verify", "Check balance conditions C1-C4");
  g_verify->add_option("--max-s", max_s, "Largest failure set checked (default delta)");
  for (auto* cmd : {g_build, g_verify}) {
    code.attach(cmd);
    add_format(cmd);
  }

  auto* layout = app.add_subcommand("layout", "Build, rotate or inspect layouts");
  layout->require_subcommand(1);
  auto* l_build = layout->add_subcommand("build", "One group instance per design block");
  l_build->add_option("--design", design_path, "Design JSON")->required();
  code.attach(l_build);
  l_build->add_option("--out", out_path, "Write the layout JSON here");
  auto* l_rotate = layout->add_subcommand("rotate", "Stack n cyclic disk shifts");
  l_rotate->add_option("--layout", layout_path)->required();
  l_rotate->add_option("--out", out_path, "Write the layout JSON here");
  auto* l_inspect = layout->add_subcommand("inspect", "Geometry and per-disk contents");
  l_inspect->add_option("--layout", layout_path)->required();
  for (auto* cmd : {l_build, l_rotate, l_inspect}) add_format(cmd);

  auto* analyze = app.add_subcommand("analyze", "Workload analysis");
  analyze->require_subcommand(1);
  auto* a_workload = analyze->add_subcommand("workload", "Units read per disk for failure sets");
  a_workload->add_option("--layout", layout_path)->required();
  auto* a_fail = a_workload->add_option("--fail", fail_text, "Failed disks, e.g. 0,1");
  auto* a_exh = a_workload->add_option("--exhaustive", exhaustive, "Every failure set of size s");
  a_fail->excludes(a_exh);
  a_workload->add_option("--jobs", jobs, "Worker threads (default $DECLUSTR_JOBS or 1)");
  auto* a_tradeoff = analyze->add_subcommand("tradeoff", "Storage vs reconstruction trade-off");
  a_tradeoff->add_option("--n", n)->required();
  auto* fix_opt = a_tradeoff->add_option("--fixture", fixture, "Built-in (k, lambda) rows")
                      ->check(CLI::IsMember({"fig13"}));
  auto* row_opt = a_tradeoff->add_option("--row", row_specs, "k:lambda, repeatable");
  fix_opt->excludes(row_opt);
  auto* a_counter = analyze->add_subcommand("counterexample", "Per-group access table");
  a_counter->add_option("--layout", layout_path)->required();
  a_counter->add_option("--fail", fail_text)->required();
  for (auto* cmd : {a_workload, a_tradeoff, a_counter}) add_format(cmd);

  auto* simulate = app.add_subcommand("simulate", "Materialize bytes, fail disks, rebuild");
  simulate->add_option("--layout", layout_path)->required();
  auto* s_fail = simulate->add_option("--fail", fail_text, "Failed disks, e.g. 0,1");
  auto* s_exh = simulate->add_option("--exhaustive", exhaustive, "Every failure set of size s");
  s_fail->excludes(s_exh);
  simulate->add_option("--seed", seed, "Data stream seed");
  simulate->add_option("--jobs", jobs, "Worker threads (default $DECLUSTR_JOBS or 1)");
  add_format(simulate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << kGrammar << '\n'
        << app.help("", CLI::AppFormatMode::All);
    return kUsageError;
  }

  std::vector<std::string> warnings;
  try {
    const auto load_layout = [&] {
      auto l = layout_from_json(read_json_file(layout_path), warnings);
      flush_warnings(warnings, err);
      return l;
    };
    const auto load_design = [&](const std::string& path) {
      auto d = design_from_json(read_json_file(path), warnings);
      flush_warnings(warnings, err);
      return d;
    };
    const auto finish_design = [&](const Design& d) {
      if (!out_path.empty()) write_file(out_path, design_to_json(d));
      emit_design(d, format, out);
    };

    if (d_validate->parsed()) {
      emit_validation(load_design(file), format, out);
    } else if (d_complete->parsed()) {
      finish_design(complete_design(n, k, t));
    } else if (d_hadamard->parsed()) {
      finish_design(hadamard_3design(n));
    } else if (d_reduce->parsed()) {
      finish_design(reduce_design(load_design(file), s));
    } else if (g_build->parsed()) {
      emit_group(code.build(), format, out);
    } else if (g_verify->parsed()) {
      const ParityGroup g = code.build();
      emit_balance(g, verify_balance(g, max_s < 0 ? g.delta() : max_s), format, out);
    } else if (l_build->parsed()) {
      const DeclusteredLayout l = build_layout(code.build(), load_design(design_path));
      if (!out_path.empty()) write_file(out_path, layout_to_json(l));
      if (format == Format::json && out_path.empty()) {
        out << layout_to_json(l).dump() << '\n';
      } else {
        emit_geometry(l, format, out);
      }
    } else if (l_rotate->parsed()) {
      const DeclusteredLayout l = rotate_layout(load_layout());
      if (!out_path.empty()) write_file(out_path, layout_to_json(l));
      if (format == Format::json && out_path.empty()) {
        out << layout_to_json(l).dump() << '\n';
      } else {
        emit_geometry(l, format, out);
      }
    } else if (l_inspect->parsed()) {
      emit_geometry(load_layout(), format, out);
    } else if (a_workload->parsed()) {
      const DeclusteredLayout l = load_layout();
      std::vector<WorkloadReport> reports;
      if (exhaustive >= 0) {
        if (exhaustive > l.group().delta()) {
          throw TooManyFailures("layout tolerates at most " + std::to_string(l.group().delta()) +
                                " failures");
        }
        for (const auto& f : all_subsets(l.disks(), exhaustive)) {
          reports.push_back(reconstruction_workload(l, f));
        }
      } else {
        reports.push_back(reconstruction_workload(l, parse_disk_list(fail_text)));
      }
      emit_workloads(reports, format, out);
    } else if (a_tradeoff->parsed()) {
      std::vector<std::pair<int, std::int64_t>> rows;
      if (!fixture.empty()) {
        rows = n20_lambda_fixture();
      } else {
        for (const auto& spec : row_specs) {
          const auto colon = spec.find(':');
          try {
            if (colon == std::string::npos) throw std::invalid_argument(spec);
            rows.emplace_back(std::stoi(spec.substr(0, colon)), std::stoll(spec.substr(colon + 1)));
          } catch (const std::logic_error&) {
            err << "error: --row expects k:lambda, got '" << spec << "'\n\n" << kGrammar;
            return kUsageError;
          }
        }
      }
      if (rows.empty()) {
        err << "error: give --fixture fig13 or at least one --row k:lambda\n\n" << kGrammar;
        return kUsageError;
      }
      emit_tradeoff(n, tradeoff_table(n, rows), format, out);
    } else if (a_counter->parsed()) {
      const DeclusteredLayout l = load_layout();
      emit_counterexample(l, counterexample_report(l, parse_disk_list(fail_text)), format, out);
    } else if (simulate->parsed()) {
      const DeclusteredLayout l = load_layout();
      SweepSummary summary;
      if (exhaustive >= 0) {
        summary = exhaustive_verify(l, exhaustive, seed, jobs);
      } else {
        // A single failure set goes through the same bookkeeping.
        const auto failed = parse_disk_list(fail_text);
        const DiskArray original = materialize(l, seed);
        const Reconstruction rebuilt = fail_and_reconstruct(l, original, failed);
        const WorkloadReport predicted = reconstruction_workload(l, failed);
        FailureOutcome o{predicted.failed, rebuilt.recovered == original,
                         rebuilt.io.units_read == predicted.units_read, rebuilt.io.units_read};
        summary.s = static_cast<int>(failed.size());
        summary.passed = o.recovered && o.matches_prediction;
        summary.uniform = predicted.uniform;
        summary.min_reads = summary.max_reads = 0;
        bool first = true;
        for (int d = 0; d < l.disks(); ++d) {
          if (std::binary_search(o.failed.begin(), o.failed.end(), d)) continue;
          summary.min_reads = first ? o.units_read[d] : std::min(summary.min_reads, o.units_read[d]);
          summary.max_reads = first ? o.units_read[d] : std::max(summary.max_reads, o.units_read[d]);
          first = false;
        }
        summary.outcomes.push_back(std::move(o));
      }
      emit_sweep(summary, format, out);
      return summary.passed == summary.total() ? kOk : kDomainError;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n\n" << kGrammar;
    return kUsageError;
  } catch (const Error& e) {
    flush_warnings(warnings, err);
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace declustr::cli
