#include "declustr/analysis.hpp"

#include <algorithm>
#include <set>

#include "declustr/error.hpp"

namespace declustr {
namespace {

std::vector<int> normalize_failures(const DeclusteredLayout& layout, std::vector<int> failed) {
  std::sort(failed.begin(), failed.end());
  if (std::adjacent_find(failed.begin(), failed.end()) != failed.end()) {
    throw ParamError("failure set lists a disk twice");
  }
  for (int d : failed) {
    if (d < 0 || d >= layout.disks()) {
      throw ParamError("failed disk " + std::to_string(d) + " does not exist");
    }
  }
  if (static_cast<int>(failed.size()) > layout.group().delta()) {
    throw TooManyFailures(std::to_string(failed.size()) + " failed disks exceed the " +
                          std::to_string(layout.group().delta()) + " the layout tolerates");
  }
  return failed;
}

// Units read from each column of `instance` when its columns in `lost` are
// gone.
std::vector<long long> instance_reads(const ParityGroup& group, const std::vector<int>& lost) {
  std::vector<long long> reads(group.k(), 0);
  if (lost.empty()) return reads;
  for (const Arrangement& a : group.extended_rows()) {
    std::vector<ColumnLabel> lost_labels;
    for (int c : lost) lost_labels.push_back(a[c]);
    const LabelSet rule = reconstruction_rule(group.delta(), lost_labels);
    for (int c = 0; c < group.k(); ++c) {
      if (std::find(lost.begin(), lost.end(), c) != lost.end()) continue;
      if (contains(rule, a[c])) reads[c] += group.codeword_rows();
    }
  }
  return reads;
}

std::vector<int> lost_columns(const DeclusteredLayout& layout, int instance,
                              const std::vector<int>& failed) {
  std::vector<int> lost;
  const auto& placement = layout.placements()[instance];
  for (int c = 0; c < static_cast<int>(placement.size()); ++c) {
    if (std::binary_search(failed.begin(), failed.end(), placement[c])) lost.push_back(c);
  }
  return lost;
}

bool surviving_uniform(const std::vector<long long>& values, const std::vector<int>& failed) {
  std::optional<long long> first;
  for (int d = 0; d < static_cast<int>(values.size()); ++d) {
    if (std::binary_search(failed.begin(), failed.end(), d)) continue;
    if (!first) first = values[d];
    if (*first != values[d]) return false;
  }
  return true;
}

}  // namespace

WorkloadReport reconstruction_workload(const DeclusteredLayout& layout, std::vector<int> failed) {
  WorkloadReport report;
  report.failed = normalize_failures(layout, std::move(failed));
  report.units_read.assign(layout.disks(), 0);

  for (int i = 0; i < layout.instances(); ++i) {
    const auto lost = lost_columns(layout, i, report.failed);
    if (lost.empty()) continue;
    const auto reads = instance_reads(layout.group(), lost);
    for (int c = 0; c < layout.group().k(); ++c) {
      report.units_read[layout.placements()[i][c]] += reads[c];
    }
  }

  report.uniform = surviving_uniform(report.units_read, report.failed);
  if (report.uniform) {
    for (int d = 0; d < layout.disks(); ++d) {
      if (std::binary_search(report.failed.begin(), report.failed.end(), d)) continue;
      report.fraction = Rational(report.units_read[d], layout.rows_per_disk());
      break;
    }
  }

  const auto& params = layout.design().params();
  const int s = static_cast<int>(report.failed.size());
  if (params.t == 3 && layout.group().delta() == 2 &&
      layout.group().family() == GroupFamily::balanced && s >= 1) {
    report.closed_form = closed_form_workload(params, layout.group(), s);
  }
  return report;
}

long long closed_form_workload(const DesignParams& params, const ParityGroup& group, int s) {
  if (params.t != 3) throw ParamError("closed form workload needs a 3-design");
  if (s < 1 || s > 2) throw ParamError("closed form workload covers one or two failures");
  if (group.delta() != 2 || group.family() != GroupFamily::balanced) {
    throw ParamError("closed form workload needs a fully juxtaposed two-parity group");
  }
  const long long m = group.depth();
  const long long k = params.k;
  const long long tau1 = m * (k - 2) / (k - 1);
  const long long tau2 = m;
  const long long lambda2 = count_lambda(params, 2, 0);
  if (s == 1) return lambda2 * tau1;
  const long long lambda21 = count_lambda(params, 2, 1);
  return params.lambda * tau2 + 2 * lambda21 * tau1;
}

std::vector<TradeoffRow> tradeoff_table(int n,
                                        const std::vector<std::pair<int, std::int64_t>>& rows) {
  std::vector<TradeoffRow> out;
  for (const auto& [k, lambda] : rows) {
    if (k < 3 || k > n) {
      throw ParamError("trade-off rows need 3 <= k <= n, got k = " + std::to_string(k));
    }
    if (lambda < 1) throw ParamError("lambda must be positive");
    TradeoffRow row;
    row.k = k;
    row.lambda = lambda;
    row.one_failure = Rational(k - 2, n - 1);
    row.two_failures = Rational(std::int64_t{k - 2} * (2 * n - k - 1),
                                std::int64_t{n - 1} * (n - 2));
    row.parity_disks = Rational(2 * n, k);
    row.depth_over_m = Rational(lambda * (n - 1) * (n - 2), std::int64_t{k - 1} * (k - 2));
    out.push_back(row);
  }
  return out;
}

const std::vector<std::pair<int, std::int64_t>>& n20_lambda_fixture() {
  static const std::vector<std::pair<int, std::int64_t>> rows = {
      {3, 1},    {4, 1},    {5, 6},     {6, 10},   {7, 35},  {8, 14},
      {9, 28},   {10, 4},   {11, 55},   {12, 55},  {13, 286}, {14, 182},
      {15, 273}, {16, 140}, {17, 680},  {18, 136}, {19, 17},  {20, 1},
  };
  return rows;
}

std::string format_fixed(const Rational& value, int decimals) {
  if (value < 0) return "-" + format_fixed(-value, decimals);
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;
  // floor(value * scale + 1/2)
  const Rational scaled = value * scale + Rational(1, 2);
  const std::int64_t units = scaled.numerator() / scaled.denominator();
  std::string out = std::to_string(units / scale);
  if (decimals > 0) {
    std::string frac = std::to_string(units % scale);
    out += "." + std::string(decimals - frac.size(), '0') + frac;
  }
  return out;
}

std::string format_percent(const Rational& fraction) { return format_fixed(fraction * 100, 1); }

CounterexampleReport counterexample_report(const DeclusteredLayout& layout,
                                           std::vector<int> failed) {
  CounterexampleReport report;
  report.failed = normalize_failures(layout, std::move(failed));
  const int n = layout.disks();
  const ParityGroup& group = layout.group();
  const bool single_row = group.extended_rows().size() == 1;

  report.cells.assign(layout.instances(), std::vector<CounterexampleCell>(n));
  report.column_units_accessed.assign(n, 0);
  report.units_read.assign(n, 0);
  for (int i = 0; i < layout.instances(); ++i) {
    const auto lost = lost_columns(layout, i, report.failed);
    const auto reads = instance_reads(group, lost);
    for (int c = 0; c < group.k(); ++c) {
      const int disk = layout.placements()[i][c];
      CounterexampleCell& cell = report.cells[i][disk];
      cell.present = true;
      if (single_row) cell.label = group.extended_rows().front()[c];
      cell.units_read = reads[c];
      report.units_read[disk] += reads[c];
      if (cell.accessed()) ++report.column_units_accessed[disk];
    }
  }
  report.uniform = surviving_uniform(report.units_read, report.failed);
  return report;
}

}  // namespace declustr
