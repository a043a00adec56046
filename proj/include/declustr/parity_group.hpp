#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "declustr/erasure_code.hpp"

namespace declustr {

// One placement of the code's column labels across the k group columns.
using Arrangement = std::vector<ColumnLabel>;

// How the extended rows of a group were generated.
enum class GroupFamily {
  balanced,   // every placement of P_1..P_delta, the full juxtaposition
  single,     // the code's canonical arrangement only
  rotations,  // the k cyclic right-rotations of the canonical arrangement
};

std::string to_string(GroupFamily family);
GroupFamily parse_group_family(const std::string& name);  // FormatError

// A code instantiated over a stack of extended rows. Each extended row is one
// codeword (code.rows() rows) whose columns are permuted by its arrangement.
class ParityGroup {
 public:
  ParityGroup(HorizontalCode code, GroupFamily family, std::vector<Arrangement> rows);

  const HorizontalCode& code() const { return code_; }
  GroupFamily family() const { return family_; }
  const std::vector<Arrangement>& extended_rows() const { return rows_; }
  int k() const { return code_.k(); }
  int delta() const { return code_.delta(); }
  int codeword_rows() const { return code_.rows(); }
  // m: total rows = codeword rows x extended rows.
  int depth() const { return code_.rows() * static_cast<int>(rows_.size()); }

  // Code column stored at group column `column` of extended row `row`.
  int code_column(int row, int column) const { return code_columns_[row][column]; }
  // Group column holding code column `code_col` in extended row `row`.
  int group_column(int row, int code_col) const { return group_columns_[row][code_col]; }

 private:
  HorizontalCode code_;
  GroupFamily family_;
  std::vector<Arrangement> rows_;
  std::vector<std::vector<int>> code_columns_;
  std::vector<std::vector<int>> group_columns_;
};

// Full juxtaposition: all delta! * C(k, delta) arrangements, position tuples in
// lexicographic order, then parity indices permuted lexicographically.
ParityGroup balance_horizontal_code(const HorizontalCode& code);
ParityGroup single_arrangement_group(const HorizontalCode& code);
ParityGroup cyclic_rotation_group(const HorizontalCode& code);
ParityGroup make_group(const HorizontalCode& code, GroupFamily family);

struct BalanceReport {
  bool c1 = false;  // (k - delta) m data and delta m parity entries
  bool c2 = false;  // every arrangement carries each parity label once (MDS)
  bool c3 = false;  // uniform per-column reads for every failure set checked
  bool c4 = false;  // equal parity entries per column
  int max_s = 0;
  // failure set (sorted group columns) -> entries read per column; lost
  // columns hold 0.
  std::map<std::vector<int>, std::vector<long long>> reads;
  // s -> entries read per surviving column, when uniform across all sets of
  // size s.
  std::map<int, long long> tau;
  std::vector<long long> parity_per_column;

  bool balanced() const { return c1 && c2 && c3 && c4; }
};

// Exhaustive check of the four balance conditions over arrangements whose
// columns are each read entirely or skipped, per reconstruction_rule.
// `codeword_rows` multiplies extended-row counts into entry counts.
BalanceReport verify_balance(const std::vector<Arrangement>& arrangements, int delta,
                             int codeword_rows, int max_s);
BalanceReport verify_balance(const ParityGroup& group, int max_s);

struct ArrangementCounts {
  long long r_dq = 0;
  long long r_pq = 0;
  long long r_qp = 0;
  friend bool operator==(const ArrangementCounts&, const ArrangementCounts&) = default;
};

// Extended rows with (D at i, Q at j), (P at i, Q at j), (Q at i, P at j).
// Two-parity groups only.
ArrangementCounts arrangement_counts(const ParityGroup& group, int i, int j);

// Entries read from each surviving column when s columns are lost. Throws
// UnbalancedGroup if the count is not the same for every failure set and
// every surviving column.
long long tau(const ParityGroup& group, int s);

}  // namespace declustr
