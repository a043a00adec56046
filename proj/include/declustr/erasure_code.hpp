#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace declustr {

// Role of a column inside a horizontal code: data (parity == 0) or parity
// column P_i (parity == i, 1-based). For two parities P_1 is the row parity
// "P" and P_2 the diagonal parity "Q".
struct ColumnLabel {
  int parity = 0;

  static constexpr ColumnLabel data() { return {0}; }
  static constexpr ColumnLabel p(int i) { return {i}; }

  bool is_data() const { return parity == 0; }
  friend auto operator<=>(const ColumnLabel&, const ColumnLabel&) = default;

  // "D", "P1", "P2", ...
  std::string to_string() const;
};

using LabelSet = std::vector<ColumnLabel>;  // sorted, unique

// Labels that must be read in full when the columns carrying `lost` are gone:
// D plus the d lowest-indexed surviving parities, d = number of lost data
// columns. Every surviving column is either read entirely or not at all.
// Throws ParamError if |lost| > delta or a label is out of range.
LabelSet reconstruction_rule(int delta, std::span<const ColumnLabel> lost);

bool contains(const LabelSet& set, ColumnLabel label);

// rows x columns grid of byte symbols, row-major.
class Codeword {
 public:
  Codeword() = default;
  Codeword(int rows, int columns) : rows_(rows), columns_(columns), cells_(rows * columns, 0) {}

  int rows() const { return rows_; }
  int columns() const { return columns_; }
  std::uint8_t& at(int row, int column) { return cells_[row * columns_ + column]; }
  std::uint8_t at(int row, int column) const { return cells_[row * columns_ + column]; }

  friend bool operator==(const Codeword&, const Codeword&) = default;

 private:
  int rows_ = 0;
  int columns_ = 0;
  std::vector<std::uint8_t> cells_;
};

enum class CodeKind { rdp, rs };

struct DecodeResult {
  Codeword codeword;
  std::vector<int> columns_read;  // ascending code-column indices
};

// Systematic MDS code whose columns are all-data or all-parity. Code columns
// 0..k-delta-1 hold data; column k-delta+i-1 holds P_i.
class HorizontalCode {
 public:
  // Row-diagonal parity for prime p >= 3: k = p + 1, delta = 2, p - 1 rows.
  static HorizontalCode rdp(int p);
  // Reed-Solomon over GF(2^8), one row per codeword. 2 <= k <= 255,
  // 1 <= delta < k. P_1 is plain XOR parity.
  static HorizontalCode rs(int k, int delta);

  CodeKind kind() const { return kind_; }
  int k() const { return k_; }
  int delta() const { return delta_; }
  int rows() const { return rows_; }
  int data_columns() const { return k_ - delta_; }
  int prime() const { return k_ - 1; }  // RDP only

  // k - delta D's followed by P_1..P_delta.
  std::vector<ColumnLabel> canonical_labels() const;
  ColumnLabel label_of(int column) const;

  // data is rows x (k - delta); returns the full rows x k codeword.
  Codeword encode(const Codeword& data) const;

  // Code columns the decoder reads when `erased` columns are lost.
  std::vector<int> read_plan(std::span<const int> erased) const;

  // Recovers the erased columns using only the columns named by read_plan.
  // Content of every other column in `received` is ignored. Throws
  // TooManyErasures if more than delta columns are erased.
  DecodeResult decode(const Codeword& received, std::span<const int> erased) const;

  std::string describe() const;
  friend bool operator==(const HorizontalCode& a, const HorizontalCode& b) {
    return a.kind_ == b.kind_ && a.k_ == b.k_ && a.delta_ == b.delta_;
  }

 private:
  HorizontalCode(CodeKind kind, int k, int delta, int rows);

  void decode_rdp(Codeword& cw, std::span<const int> unknown_columns) const;
  void decode_rs(Codeword& cw, std::span<const int> erased, std::span<const int> read) const;

  CodeKind kind_;
  int k_;
  int delta_;
  int rows_;
  // RS only: delta x (k - delta) coefficient matrix, row 0 all ones.
  std::vector<std::vector<std::uint8_t>> coefficients_;
};

// Convenience for the RDP examples: data grid (p-1) x (p-1) -> (p-1) x (p+1).
Codeword rdp_encode(const Codeword& data, int p);
DecodeResult rdp_decode(const Codeword& received, std::span<const int> erased, int p);
Codeword rs_encode(const Codeword& data, int k, int delta);
DecodeResult rs_decode(const Codeword& received, std::span<const int> erased, int k, int delta);

}  // namespace declustr
