#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <vector>

#include "declustr/design.hpp"
#include "declustr/parity_group.hpp"

namespace declustr {

using Rational = boost::rational<std::int64_t>;

// Where one column-unit (one group column of one group instance) lives.
struct UnitSlot {
  int instance = 0;
  int column = 0;
};

// An n-disk array holding one copy of the group template per design block.
// Group column c of instance i sits on disk placements[i][c]; on each disk the
// column-units are stacked in ascending instance order, each m rows tall.
class DeclusteredLayout {
 public:
  // Validates every invariant; throws InvariantError on violation.
  DeclusteredLayout(Design design, ParityGroup group, std::vector<std::vector<int>> placements);

  int disks() const { return design_.params().n; }
  const Design& design() const { return design_; }
  const ParityGroup& group() const { return group_; }
  const std::vector<std::vector<int>>& placements() const { return placements_; }
  int instances() const { return static_cast<int>(placements_.size()); }

  // Column-units per disk (lambda_1).
  int units_per_disk() const { return units_per_disk_; }
  // M = m * lambda_1.
  long long rows_per_disk() const {
    return static_cast<long long>(group_.depth()) * units_per_disk_;
  }

  // Column-units on `disk`, top to bottom.
  const std::vector<UnitSlot>& disk_contents(int disk) const { return disk_contents_[disk]; }
  // Position of (instance, column) within its disk's stack.
  int slot_index(int instance, int column) const { return slot_index_[instance][column]; }
  // Row offset on disk of (instance, column, extended row, codeword row).
  long long unit_offset(int instance, int column, int extended_row, int codeword_row) const;

 private:
  Design design_;
  ParityGroup group_;
  std::vector<std::vector<int>> placements_;
  int units_per_disk_ = 0;
  std::vector<std::vector<UnitSlot>> disk_contents_;
  std::vector<std::vector<int>> slot_index_;
};

// One group instance per block; column c goes to the c-th smallest point of
// the block. Requires design.k == group.k and design.t == group.delta + 1
// (MismatchError otherwise).
DeclusteredLayout build_layout(const ParityGroup& group, const Design& design);

// n disk-shifted copies stacked vertically: copy s moves every unit from disk
// x to disk (x + s) mod n. One-parity layouts only.
DeclusteredLayout rotate_layout(const DeclusteredLayout& layout);

struct LayoutGeometry {
  long long rows_per_disk = 0;         // M
  int units_per_disk = 0;              // column-units
  std::vector<long long> parity_units_per_disk;
  std::vector<long long> data_units_per_disk;
  Rational disks_of_data;
  Rational disks_of_parity;
};

// Tallies unit counts directly and checks the disks-worth values against
// (k - delta) n / k and delta n / k.
LayoutGeometry layout_geometry(const DeclusteredLayout& layout);

}  // namespace declustr
