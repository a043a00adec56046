#include "declustr/parity_group.hpp"

#include <algorithm>
#include <numeric>

#include "declustr/combinatorics.hpp"
#include "declustr/error.hpp"

namespace declustr {
namespace {

void check_arrangement(const Arrangement& a, int k, int delta) {
  if (static_cast<int>(a.size()) != k) throw ParamError("arrangement width differs from k");
  std::vector<int> seen(delta + 1, 0);
  for (ColumnLabel l : a) {
    if (l.parity < 0 || l.parity > delta) throw ParamError("arrangement label out of range");
    ++seen[l.parity];
  }
  if (seen[0] != k - delta) throw ParamError("arrangement must hold k - delta data columns");
  for (int i = 1; i <= delta; ++i) {
    if (seen[i] != 1) throw ParamError("arrangement must hold each parity label once");
  }
}

Arrangement rotate_right(const Arrangement& a, int shift) {
  const int k = static_cast<int>(a.size());
  Arrangement out(k);
  for (int c = 0; c < k; ++c) out[c] = a[((c - shift) % k + k) % k];
  return out;
}

}  // namespace

std::string to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::balanced: return "balanced";
    case GroupFamily::single: return "single";
    case GroupFamily::rotations: return "rotations";
  }
  return "?";
}

GroupFamily parse_group_family(const std::string& name) {
  if (name == "balanced") return GroupFamily::balanced;
  if (name == "single") return GroupFamily::single;
  if (name == "rotations") return GroupFamily::rotations;
  throw FormatError("unknown group family '" + name + "'");
}

ParityGroup::ParityGroup(HorizontalCode code, GroupFamily family, std::vector<Arrangement> rows)
    : code_(std::move(code)), family_(family), rows_(std::move(rows)) {
  if (rows_.empty()) throw ParamError("a parity group needs at least one extended row");
  const int k = code_.k();
  const int data = code_.data_columns();
  for (const Arrangement& a : rows_) {
    check_arrangement(a, k, code_.delta());
    std::vector<int> to_code(k), to_group(k);
    int next_data = 0;
    for (int c = 0; c < k; ++c) {
      const int code_col = a[c].is_data() ? next_data++ : data + a[c].parity - 1;
      to_code[c] = code_col;
      to_group[code_col] = c;
    }
    code_columns_.push_back(std::move(to_code));
    group_columns_.push_back(std::move(to_group));
  }
}

ParityGroup balance_horizontal_code(const HorizontalCode& code) {
  const int k = code.k();
  const int delta = code.delta();
  std::vector<Arrangement> rows;
  for_each_subset(k, delta, [&](std::span<const int> positions) {
    std::vector<int> perm(delta);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      Arrangement a(k, ColumnLabel::data());
      for (int i = 0; i < delta; ++i) a[positions[i]] = ColumnLabel::p(perm[i]);
      rows.push_back(std::move(a));
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
  return ParityGroup(code, GroupFamily::balanced, std::move(rows));
}

ParityGroup single_arrangement_group(const HorizontalCode& code) {
  return ParityGroup(code, GroupFamily::single, {code.canonical_labels()});
}

ParityGroup cyclic_rotation_group(const HorizontalCode& code) {
  std::vector<Arrangement> rows;
  for (int s = 0; s < code.k(); ++s) rows.push_back(rotate_right(code.canonical_labels(), s));
  return ParityGroup(code, GroupFamily::rotations, std::move(rows));
}

ParityGroup make_group(const HorizontalCode& code, GroupFamily family) {
  switch (family) {
    case GroupFamily::balanced: return balance_horizontal_code(code);
    case GroupFamily::single: return single_arrangement_group(code);
    case GroupFamily::rotations: return cyclic_rotation_group(code);
  }
  throw ParamError("unknown group family");
}

BalanceReport verify_balance(const std::vector<Arrangement>& arrangements, int delta,
                             int codeword_rows, int max_s) {
  if (max_s < 0 || max_s > delta) throw ParamError("max_s must lie in [0, delta]");
  if (arrangements.empty()) throw ParamError("no arrangements to verify");
  const int k = static_cast<int>(arrangements.front().size());
  for (const Arrangement& a : arrangements) check_arrangement(a, k, delta);

  BalanceReport report;
  report.max_s = max_s;
  const long long m = static_cast<long long>(codeword_rows) * arrangements.size();

  long long data_entries = 0;
  long long parity_entries = 0;
  report.parity_per_column.assign(k, 0);
  for (const Arrangement& a : arrangements) {
    for (int c = 0; c < k; ++c) {
      if (a[c].is_data()) {
        data_entries += codeword_rows;
      } else {
        parity_entries += codeword_rows;
        report.parity_per_column[c] += codeword_rows;
      }
    }
  }
  report.c1 = data_entries == (k - delta) * m && parity_entries == delta * m;
  report.c2 = true;  // each arrangement holds every parity label of an MDS code
  report.c4 = std::all_of(report.parity_per_column.begin(), report.parity_per_column.end(),
                          [&](long long v) { return v == report.parity_per_column.front(); });

  report.c3 = true;
  for (int s = 1; s <= max_s; ++s) {
    std::optional<long long> common;
    bool uniform_for_s = true;
    for_each_subset(k, s, [&](std::span<const int> failed) {
      std::vector<long long> reads(k, 0);
      for (const Arrangement& a : arrangements) {
        std::vector<ColumnLabel> lost;
        for (int c : failed) lost.push_back(a[c]);
        const LabelSet rule = reconstruction_rule(delta, lost);
        for (int c = 0; c < k; ++c) {
          if (std::find(failed.begin(), failed.end(), c) != failed.end()) continue;
          if (contains(rule, a[c])) reads[c] += codeword_rows;
        }
      }
      std::optional<long long> value;
      for (int c = 0; c < k; ++c) {
        if (std::find(failed.begin(), failed.end(), c) != failed.end()) continue;
        if (!value) value = reads[c];
        if (*value != reads[c]) {
          report.c3 = false;
          uniform_for_s = false;
        }
      }
      if (value) {
        if (!common) common = value;
        if (*common != *value) uniform_for_s = false;
      }
      report.reads.emplace(std::vector<int>(failed.begin(), failed.end()), std::move(reads));
    });
    if (uniform_for_s && common) report.tau[s] = *common;
  }
  return report;
}

BalanceReport verify_balance(const ParityGroup& group, int max_s) {
  return verify_balance(group.extended_rows(), group.delta(), group.codeword_rows(), max_s);
}

ArrangementCounts arrangement_counts(const ParityGroup& group, int i, int j) {
  if (group.delta() != 2) throw ParamError("arrangement counts are defined for two parities");
  if (i == j || i < 0 || j < 0 || i >= group.k() || j >= group.k()) {
    throw ParamError("arrangement counts need two distinct columns");
  }
  const ColumnLabel d = ColumnLabel::data(), p = ColumnLabel::p(1), q = ColumnLabel::p(2);
  ArrangementCounts counts;
  for (const Arrangement& a : group.extended_rows()) {
    if (a[i] == d && a[j] == q) ++counts.r_dq;
    if (a[i] == p && a[j] == q) ++counts.r_pq;
    if (a[i] == q && a[j] == p) ++counts.r_qp;
  }
  return counts;
}

long long tau(const ParityGroup& group, int s) {
  if (s < 1 || s > group.delta()) throw ParamError("tau needs 1 <= s <= delta");
  const BalanceReport report = verify_balance(group, s);
  const auto it = report.tau.find(s);
  if (it == report.tau.end()) {
    throw UnbalancedGroup("reads with " + std::to_string(s) +
                          " lost columns differ across columns or failure sets");
  }
  return it->second;
}

}  // namespace declustr
