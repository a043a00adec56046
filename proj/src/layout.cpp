#include "declustr/layout.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "declustr/error.hpp"

namespace declustr {

DeclusteredLayout::DeclusteredLayout(Design design, ParityGroup group,
                                     std::vector<std::vector<int>> placements)
    : design_(std::move(design)), group_(std::move(group)), placements_(std::move(placements)) {
  const int n = design_.params().n;
  const int k = group_.k();
  if (design_.params().k != k) {
    throw InvariantError("design block size " + std::to_string(design_.params().k) +
                         " differs from group size " + std::to_string(k));
  }
  if (placements_.size() != design_.size()) {
    throw InvariantError("expected one placement per block (" + std::to_string(design_.size()) +
                         "), got " + std::to_string(placements_.size()));
  }

  disk_contents_.assign(n, {});
  slot_index_.assign(placements_.size(), std::vector<int>(k, 0));
  for (std::size_t i = 0; i < placements_.size(); ++i) {
    const auto& placement = placements_[i];
    if (static_cast<int>(placement.size()) != k) {
      throw InvariantError("placement " + std::to_string(i) + " does not have k disks");
    }
    for (int disk : placement) {
      if (disk < 0 || disk >= n) {
        throw InvariantError("placement " + std::to_string(i) + " names disk " +
                             std::to_string(disk) + " outside 0.." + std::to_string(n - 1));
      }
    }
    std::vector<int> sorted = placement;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvariantError("placement " + std::to_string(i) +
                           " puts two units of one group on the same disk");
    }
    if (sorted != design_.block(i)) {
      throw InvariantError("placement " + std::to_string(i) + " does not match its block");
    }
    for (int c = 0; c < k; ++c) {
      const int disk = placement[c];
      slot_index_[i][c] = static_cast<int>(disk_contents_[disk].size());
      disk_contents_[disk].push_back({static_cast<int>(i), c});
    }
  }

  units_per_disk_ = static_cast<int>(disk_contents_.front().size());
  for (int d = 0; d < n; ++d) {
    if (static_cast<int>(disk_contents_[d].size()) != units_per_disk_) {
      throw InvariantError("disk " + std::to_string(d) + " holds " +
                           std::to_string(disk_contents_[d].size()) + " column-units, disk 0 holds " +
                           std::to_string(units_per_disk_));
    }
  }
  if (units_per_disk_ != count_lambda(design_.params(), 1, 0)) {
    throw InvariantError("column-units per disk differ from lambda_1");
  }

  // Groups with equal parity per column must yield equal parity per disk.
  const BalanceReport balance = verify_balance(group_, 0);
  if (balance.c4) {
    const auto geometry = layout_geometry(*this);
    const auto& parity = geometry.parity_units_per_disk;
    if (std::adjacent_find(parity.begin(), parity.end(), std::not_equal_to<>()) != parity.end()) {
      throw InvariantError("parity units are not spread evenly across disks");
    }
  }
}

long long DeclusteredLayout::unit_offset(int instance, int column, int extended_row,
                                         int codeword_row) const {
  return static_cast<long long>(slot_index_[instance][column]) * group_.depth() +
         static_cast<long long>(extended_row) * group_.codeword_rows() + codeword_row;
}

DeclusteredLayout build_layout(const ParityGroup& group, const Design& design) {
  const auto& p = design.params();
  if (p.k != group.k()) {
    throw MismatchError("design " + p.to_string() + " has block size " + std::to_string(p.k) +
                        " but the group has " + std::to_string(group.k()) + " columns");
  }
  if (p.t != group.delta() + 1) {
    throw MismatchError("a " + std::to_string(group.delta()) + "-parity group needs a " +
                        std::to_string(group.delta() + 1) + "-design, got " + p.to_string());
  }
  // Blocks are stored sorted, so column c lands on the c-th smallest point.
  return DeclusteredLayout(design, group, design.blocks());
}

DeclusteredLayout rotate_layout(const DeclusteredLayout& layout) {
  if (layout.group().delta() != 1) {
    throw ParamError("rotation applies to one-parity layouts; multi-parity layouts are "
                     "already parity-balanced");
  }
  const int n = layout.disks();
  std::vector<Block> blocks;
  std::vector<std::vector<int>> placements;
  for (int shift = 0; shift < n; ++shift) {
    for (const auto& placement : layout.placements()) {
      std::vector<int> moved(placement.size());
      std::transform(placement.begin(), placement.end(), moved.begin(),
                     [&](int d) { return (d + shift) % n; });
      placements.push_back(moved);
      blocks.push_back(std::move(moved));
    }
  }
  DesignParams params = layout.design().params();
  params.lambda *= n;
  return DeclusteredLayout(validate_design(params, std::move(blocks)), layout.group(),
                           std::move(placements));
}

LayoutGeometry layout_geometry(const DeclusteredLayout& layout) {
  const ParityGroup& group = layout.group();
  const int n = layout.disks();
  const int k = group.k();
  const int delta = group.delta();

  std::vector<long long> parity_in_column(k, 0);
  for (const Arrangement& a : group.extended_rows()) {
    for (int c = 0; c < k; ++c) {
      if (!a[c].is_data()) parity_in_column[c] += group.codeword_rows();
    }
  }

  LayoutGeometry g;
  g.rows_per_disk = layout.rows_per_disk();
  g.units_per_disk = layout.units_per_disk();
  g.parity_units_per_disk.assign(n, 0);
  g.data_units_per_disk.assign(n, 0);
  long long total_parity = 0;
  for (int d = 0; d < n; ++d) {
    for (const UnitSlot& slot : layout.disk_contents(d)) {
      g.parity_units_per_disk[d] += parity_in_column[slot.column];
    }
    g.data_units_per_disk[d] = g.rows_per_disk - g.parity_units_per_disk[d];
    total_parity += g.parity_units_per_disk[d];
  }
  g.disks_of_parity = Rational(total_parity, g.rows_per_disk);
  g.disks_of_data = Rational(n) - g.disks_of_parity;

  if (g.disks_of_parity != Rational(delta * n, k)) {
    throw std::logic_error("parity tally disagrees with delta * n / k");
  }
  return g;
}

}  // namespace declustr
