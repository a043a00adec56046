#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "declustr/layout.hpp"

namespace declustr {

struct WorkloadReport {
  std::vector<int> failed;            // sorted disk indices
  std::vector<long long> units_read;  // per disk; failed disks read nothing
  bool uniform = false;               // all surviving disks read the same
  std::optional<long long> closed_form;
  // Units read per surviving disk over M, when uniform.
  std::optional<Rational> fraction;
};

// Exhaustive unit-read count for reconstructing `failed`. Each group instance
// that lost s >= 1 columns reads, per extended row, the surviving columns whose
// label is named by the reconstruction rule. Throws TooManyFailures when
// |failed| exceeds delta.
WorkloadReport reconstruction_workload(const DeclusteredLayout& layout, std::vector<int> failed);

// Units read per surviving disk from design counting alone, for a 3-design and
// the full two-parity juxtaposition:
//   s = 1: lambda_2 * tau_1
//   s = 2: lambda * tau_2 + 2 * lambda_2^(1) * tau_1
// with tau_1 = m (k-2)/(k-1) and tau_2 = m.
long long closed_form_workload(const DesignParams& params, const ParityGroup& group, int s);

// One row of the storage/reconstruction trade-off table for n disks.
struct TradeoffRow {
  int k = 0;
  std::int64_t lambda = 0;
  Rational one_failure;   // fraction of each surviving disk read, (k-2)/(n-1)
  Rational two_failures;  // (k-2)(2n-k-1) / ((n-1)(n-2))
  Rational parity_disks;  // 2n/k
  Rational depth_over_m;  // lambda (n-1)(n-2) / ((k-1)(k-2))
};

std::vector<TradeoffRow> tradeoff_table(int n, const std::vector<std::pair<int, std::int64_t>>& rows);

// Minimal lambda per group size for n = 20, as tabulated from the design
// handbook. Used as a fixed input; the designs themselves are not built.
const std::vector<std::pair<int, std::int64_t>>& n20_lambda_fixture();

// value rounded half-up to `decimals` places, as text ("42.1", "100.0").
std::string format_fixed(const Rational& value, int decimals);
// Percentage of a fraction, one decimal.
std::string format_percent(const Rational& fraction);

struct CounterexampleCell {
  bool present = false;                // disk holds a column of this instance
  std::optional<ColumnLabel> label;    // set for single-arrangement groups
  long long units_read = 0;
  bool accessed() const { return units_read > 0; }
};

struct CounterexampleReport {
  std::vector<int> failed;
  // [instance][disk]
  std::vector<std::vector<CounterexampleCell>> cells;
  std::vector<int> column_units_accessed;  // per disk
  std::vector<long long> units_read;       // per disk
  bool uniform = false;
};

// Per instance and per disk: which label the disk holds and whether it is
// read while `failed` is rebuilt. Works for balanced and unbalanced groups.
CounterexampleReport counterexample_report(const DeclusteredLayout& layout,
                                           std::vector<int> failed);

}  // namespace declustr
