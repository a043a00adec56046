#include "declustr/erasure_code.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "declustr/error.hpp"
#include "declustr/gf256.hpp"

namespace declustr {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

struct Cell {
  int row;
  int column;
};

// Solves A x = b over GF(2^8) in place; A is square and nonsingular.
std::vector<std::uint8_t> solve(std::vector<std::vector<std::uint8_t>> a,
                                std::vector<std::uint8_t> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular decoding matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const std::uint8_t scale = gf256::inv(a[col][col]);
    for (auto& v : a[col]) v = gf256::mul(v, scale);
    b[col] = gf256::mul(b[col], scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const std::uint8_t f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) a[r][c] ^= gf256::mul(f, a[col][c]);
      b[r] ^= gf256::mul(f, b[col]);
    }
  }
  return b;
}

}  // namespace

std::string ColumnLabel::to_string() const {
  return is_data() ? "D" : "P" + std::to_string(parity);
}

bool contains(const LabelSet& set, ColumnLabel label) {
  return std::binary_search(set.begin(), set.end(), label);
}

LabelSet reconstruction_rule(int delta, std::span<const ColumnLabel> lost) {
  if (delta < 1) throw ParamError("delta must be positive");
  if (static_cast<int>(lost.size()) > delta) {
    throw ParamError("cannot reconstruct " + std::to_string(lost.size()) +
                     " columns with delta = " + std::to_string(delta));
  }
  int lost_data = 0;
  std::set<int> lost_parity;
  for (ColumnLabel l : lost) {
    if (l.parity < 0 || l.parity > delta) {
      throw ParamError("label " + l.to_string() + " out of range for delta = " +
                       std::to_string(delta));
    }
    if (l.is_data()) {
      ++lost_data;
    } else if (!lost_parity.insert(l.parity).second) {
      throw ParamError("parity label " + l.to_string() + " lost twice");
    }
  }
  LabelSet out{ColumnLabel::data()};
  for (int i = 1; i <= delta && lost_data > 0; ++i) {
    if (lost_parity.count(i)) continue;
    out.push_back(ColumnLabel::p(i));
    --lost_data;
  }
  return out;
}

HorizontalCode::HorizontalCode(CodeKind kind, int k, int delta, int rows)
    : kind_(kind), k_(k), delta_(delta), rows_(rows) {}

HorizontalCode HorizontalCode::rdp(int p) {
  if (p < 3 || !is_prime(p)) {
    throw ParamError("RDP needs a prime p >= 3, got " + std::to_string(p));
  }
  return HorizontalCode(CodeKind::rdp, p + 1, 2, p - 1);
}

HorizontalCode HorizontalCode::rs(int k, int delta) {
  if (k < 2 || k > 255 || delta < 1 || delta >= k) {
    throw ParamError("Reed-Solomon needs 2 <= k <= 255 and 1 <= delta < k, got k = " +
                     std::to_string(k) + ", delta = " + std::to_string(delta));
  }
  HorizontalCode code(CodeKind::rs, k, delta, 1);
  // Cauchy rows 1/(x_i + y_j) with x_i = i, y_j = delta + j, each column
  // scaled by (x_0 + y_j) so that the first row is all ones. Scaling keeps
  // every square submatrix nonsingular.
  const int data = k - delta;
  code.coefficients_.assign(delta, std::vector<std::uint8_t>(data));
  for (int i = 0; i < delta; ++i) {
    for (int j = 0; j < data; ++j) {
      const auto x = static_cast<std::uint8_t>(i);
      const auto y = static_cast<std::uint8_t>(delta + j);
      code.coefficients_[i][j] = gf256::div(y, gf256::add(x, y));
    }
  }
  return code;
}

std::vector<ColumnLabel> HorizontalCode::canonical_labels() const {
  std::vector<ColumnLabel> labels(k_, ColumnLabel::data());
  for (int i = 1; i <= delta_; ++i) labels[data_columns() + i - 1] = ColumnLabel::p(i);
  return labels;
}

ColumnLabel HorizontalCode::label_of(int column) const {
  return column < data_columns() ? ColumnLabel::data()
                                 : ColumnLabel::p(column - data_columns() + 1);
}

std::string HorizontalCode::describe() const {
  if (kind_ == CodeKind::rdp) return "RDP(p=" + std::to_string(prime()) + ")";
  return "RS(k=" + std::to_string(k_) + ", delta=" + std::to_string(delta_) + ")";
}

Codeword HorizontalCode::encode(const Codeword& data) const {
  if (data.rows() != rows_ || data.columns() != data_columns()) {
    throw ParamError("data grid must be " + std::to_string(rows_) + "x" +
                     std::to_string(data_columns()) + " for " + describe());
  }
  Codeword cw(rows_, k_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < data_columns(); ++c) cw.at(r, c) = data.at(r, c);
  }
  if (kind_ == CodeKind::rdp) {
    const int p = prime();
    for (int r = 0; r < rows_; ++r) {
      std::uint8_t row_parity = 0;
      for (int c = 0; c < p - 1; ++c) row_parity ^= cw.at(r, c);
      cw.at(r, p - 1) = row_parity;
    }
    // Diagonal d gathers (r, c), c < p, with (r + c) mod p == d; diagonal
    // p - 1 is never stored.
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < p; ++c) {
        const int d = (r + c) % p;
        if (d != p - 1) cw.at(d, p) ^= cw.at(r, c);
      }
    }
  } else {
    for (int r = 0; r < rows_; ++r) {
      for (int i = 0; i < delta_; ++i) {
        std::uint8_t acc = 0;
        for (int j = 0; j < data_columns(); ++j) {
          acc ^= gf256::mul(coefficients_[i][j], cw.at(r, j));
        }
        cw.at(r, data_columns() + i) = acc;
      }
    }
  }
  return cw;
}

std::vector<int> HorizontalCode::read_plan(std::span<const int> erased) const {
  if (static_cast<int>(erased.size()) > delta_) {
    throw TooManyErasures(std::to_string(erased.size()) + " erasures exceed delta = " +
                          std::to_string(delta_) + " of " + describe());
  }
  std::set<int> lost;
  std::vector<ColumnLabel> lost_labels;
  for (int c : erased) {
    if (c < 0 || c >= k_) throw ParamError("erased column out of range");
    if (!lost.insert(c).second) throw ParamError("erased column listed twice");
    lost_labels.push_back(label_of(c));
  }
  const LabelSet rule = reconstruction_rule(delta_, lost_labels);
  std::vector<int> plan;
  for (int c = 0; c < k_; ++c) {
    if (!lost.count(c) && contains(rule, label_of(c))) plan.push_back(c);
  }
  return plan;
}

DecodeResult HorizontalCode::decode(const Codeword& received, std::span<const int> erased) const {
  if (received.rows() != rows_ || received.columns() != k_) {
    throw ParamError("codeword shape mismatch for " + describe());
  }
  const std::vector<int> plan = read_plan(erased);
  // Work only from the planned columns; everything else starts zeroed.
  Codeword cw(rows_, k_);
  for (int r = 0; r < rows_; ++r) {
    for (int c : plan) cw.at(r, c) = received.at(r, c);
  }
  std::vector<int> unknown;
  for (int c = 0; c < k_; ++c) {
    if (!std::binary_search(plan.begin(), plan.end(), c)) unknown.push_back(c);
  }
  if (kind_ == CodeKind::rdp) {
    decode_rdp(cw, unknown);
  } else {
    decode_rs(cw, erased, plan);
  }
  // Columns that were neither erased nor planned come back as received.
  for (int c : unknown) {
    if (std::find(erased.begin(), erased.end(), c) != erased.end()) continue;
    for (int r = 0; r < rows_; ++r) cw.at(r, c) = received.at(r, c);
  }
  return {std::move(cw), plan};
}

void HorizontalCode::decode_rdp(Codeword& cw, std::span<const int> unknown_columns) const {
  const int p = prime();
  std::vector<std::vector<Cell>> equations;
  for (int r = 0; r < p - 1; ++r) {
    std::vector<Cell> eq;
    for (int c = 0; c < p; ++c) eq.push_back({r, c});
    equations.push_back(std::move(eq));
  }
  for (int d = 0; d < p - 1; ++d) {
    std::vector<Cell> eq{{d, p}};
    for (int c = 0; c < p; ++c) {
      const int r = ((d - c) % p + p) % p;
      if (r < p - 1) eq.push_back({r, c});
    }
    equations.push_back(std::move(eq));
  }

  std::vector<std::vector<bool>> known(p - 1, std::vector<bool>(p + 1, true));
  for (int c : unknown_columns) {
    for (int r = 0; r < p - 1; ++r) known[r][c] = false;
  }
  // Every equation XORs to zero; repeatedly solve one with a single unknown.
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& eq : equations) {
      const Cell* missing = nullptr;
      int unknowns = 0;
      std::uint8_t acc = 0;
      for (const Cell& cell : eq) {
        if (known[cell.row][cell.column]) {
          acc ^= cw.at(cell.row, cell.column);
        } else {
          ++unknowns;
          missing = &cell;
        }
      }
      if (unknowns == 1) {
        cw.at(missing->row, missing->column) = acc;
        known[missing->row][missing->column] = true;
        progress = true;
      }
    }
  }
  for (int c : unknown_columns) {
    for (int r = 0; r < p - 1; ++r) {
      if (!known[r][c]) throw std::logic_error("RDP decoding chain did not converge");
    }
  }
}

void HorizontalCode::decode_rs(Codeword& cw, std::span<const int> erased,
                               std::span<const int> read) const {
  const int data = data_columns();
  std::vector<int> lost_data;
  for (int c : erased) {
    if (c < data) lost_data.push_back(c);
  }
  std::sort(lost_data.begin(), lost_data.end());
  std::vector<int> parities;
  for (int c : read) {
    if (c >= data) parities.push_back(c - data);
  }
  if (parities.size() != lost_data.size()) {
    throw std::logic_error("read plan does not match lost data count");
  }

  if (!lost_data.empty()) {
    const std::size_t d = lost_data.size();
    std::vector<std::vector<std::uint8_t>> a(d, std::vector<std::uint8_t>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) a[i][j] = coefficients_[parities[i]][lost_data[j]];
    }
    for (int r = 0; r < rows_; ++r) {
      std::vector<std::uint8_t> syndrome(d);
      for (std::size_t i = 0; i < d; ++i) {
        std::uint8_t acc = cw.at(r, data + parities[i]);
        for (int j = 0; j < data; ++j) {
          if (std::binary_search(lost_data.begin(), lost_data.end(), j)) continue;
          acc ^= gf256::mul(coefficients_[parities[i]][j], cw.at(r, j));
        }
        syndrome[i] = acc;
      }
      const auto values = solve(a, syndrome);
      for (std::size_t j = 0; j < d; ++j) cw.at(r, lost_data[j]) = values[j];
    }
  }
  // All data is now known; recompute every parity column.
  for (int r = 0; r < rows_; ++r) {
    for (int i = 0; i < delta_; ++i) {
      std::uint8_t acc = 0;
      for (int j = 0; j < data; ++j) acc ^= gf256::mul(coefficients_[i][j], cw.at(r, j));
      cw.at(r, data + i) = acc;
    }
  }
}

Codeword rdp_encode(const Codeword& data, int p) { return HorizontalCode::rdp(p).encode(data); }

DecodeResult rdp_decode(const Codeword& received, std::span<const int> erased, int p) {
  return HorizontalCode::rdp(p).decode(received, erased);
}

Codeword rs_encode(const Codeword& data, int k, int delta) {
  return HorizontalCode::rs(k, delta).encode(data);
}

DecodeResult rs_decode(const Codeword& received, std::span<const int> erased, int k, int delta) {
  return HorizontalCode::rs(k, delta).decode(received, erased);
}

}  // namespace declustr
