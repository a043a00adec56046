#include "declustr/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "declustr/analysis.hpp"
#include "declustr/combinatorics.hpp"
#include "declustr/error.hpp"

namespace declustr {

std::uint8_t ByteStream::next() {
  if (remaining_ == 0) {
    state_ ^= state_ << 13;
    state_ ^= state_ >> 7;
    state_ ^= state_ << 17;
    word_ = state_;
    remaining_ = 8;
  }
  const auto byte = static_cast<std::uint8_t>(word_ & 0xFF);
  word_ >>= 8;
  --remaining_;
  return byte;
}

Provenance provenance(const DeclusteredLayout& layout, int disk, long long offset) {
  if (disk < 0 || disk >= layout.disks() || offset < 0 || offset >= layout.rows_per_disk()) {
    throw ParamError("unit address out of range");
  }
  const ParityGroup& group = layout.group();
  const UnitSlot slot = layout.disk_contents(disk)[offset / group.depth()];
  const int within = static_cast<int>(offset % group.depth());
  Provenance p;
  p.instance = slot.instance;
  p.group_column = slot.column;
  p.extended_row = within / group.codeword_rows();
  p.codeword_row = within % group.codeword_rows();
  p.label = group.extended_rows()[p.extended_row][slot.column];
  return p;
}

namespace {

std::uint8_t& unit(const DeclusteredLayout& layout, DiskArray& array, int instance, int column,
                   int extended_row, int codeword_row) {
  const int disk = layout.placements()[instance][column];
  return array.disks[disk][layout.unit_offset(instance, column, extended_row, codeword_row)];
}

std::uint8_t unit(const DeclusteredLayout& layout, const DiskArray& array, int instance,
                  int column, int extended_row, int codeword_row) {
  const int disk = layout.placements()[instance][column];
  return array.disks[disk][layout.unit_offset(instance, column, extended_row, codeword_row)];
}

Codeword read_codeword(const DeclusteredLayout& layout, const DiskArray& array, int instance,
                       int extended_row) {
  const ParityGroup& group = layout.group();
  Codeword cw(group.codeword_rows(), group.k());
  for (int code_col = 0; code_col < group.k(); ++code_col) {
    const int column = group.group_column(extended_row, code_col);
    for (int r = 0; r < group.codeword_rows(); ++r) {
      cw.at(r, code_col) = unit(layout, array, instance, column, extended_row, r);
    }
  }
  return cw;
}

}  // namespace

DiskArray materialize(const DeclusteredLayout& layout, std::uint64_t seed) {
  const ParityGroup& group = layout.group();
  const HorizontalCode& code = group.code();
  DiskArray array;
  array.disks.assign(layout.disks(), std::vector<std::uint8_t>(layout.rows_per_disk(), 0));

  ByteStream stream(seed);
  for (int i = 0; i < layout.instances(); ++i) {
    for (int e = 0; e < static_cast<int>(group.extended_rows().size()); ++e) {
      Codeword data(code.rows(), code.data_columns());
      for (int r = 0; r < code.rows(); ++r) {
        for (int c = 0; c < code.data_columns(); ++c) data.at(r, c) = stream.next();
      }
      const Codeword cw = code.encode(data);
      for (int code_col = 0; code_col < code.k(); ++code_col) {
        const int column = group.group_column(e, code_col);
        for (int r = 0; r < code.rows(); ++r) {
          unit(layout, array, i, column, e, r) = cw.at(r, code_col);
        }
      }
    }
  }
  return array;
}

bool parity_consistent(const DeclusteredLayout& layout, const DiskArray& array) {
  const ParityGroup& group = layout.group();
  const HorizontalCode& code = group.code();
  for (int i = 0; i < layout.instances(); ++i) {
    for (int e = 0; e < static_cast<int>(group.extended_rows().size()); ++e) {
      const Codeword cw = read_codeword(layout, array, i, e);
      Codeword data(code.rows(), code.data_columns());
      for (int r = 0; r < code.rows(); ++r) {
        for (int c = 0; c < code.data_columns(); ++c) data.at(r, c) = cw.at(r, c);
      }
      if (code.encode(data) != cw) return false;
    }
  }
  return true;
}

Reconstruction fail_and_reconstruct(const DeclusteredLayout& layout, const DiskArray& array,
                                    std::vector<int> failed) {
  const ParityGroup& group = layout.group();
  const HorizontalCode& code = group.code();
  std::sort(failed.begin(), failed.end());
  if (std::adjacent_find(failed.begin(), failed.end()) != failed.end()) {
    throw ParamError("failure set lists a disk twice");
  }
  if (static_cast<int>(failed.size()) > group.delta()) {
    throw TooManyFailures(std::to_string(failed.size()) + " failed disks exceed the " +
                          std::to_string(group.delta()) + " the layout tolerates");
  }
  for (int d : failed) {
    if (d < 0 || d >= layout.disks()) throw ParamError("failed disk does not exist");
  }
  const auto is_failed = [&](int disk) {
    return std::binary_search(failed.begin(), failed.end(), disk);
  };

  Reconstruction out;
  out.recovered = array;
  for (int d : failed) std::fill(out.recovered.disks[d].begin(), out.recovered.disks[d].end(), 0);
  out.io.units_read.assign(layout.disks(), 0);
  out.io.units_written.assign(layout.disks(), 0);

  for (int i = 0; i < layout.instances(); ++i) {
    const auto& placement = layout.placements()[i];
    std::vector<int> lost_group_columns;
    for (int c = 0; c < group.k(); ++c) {
      if (is_failed(placement[c])) lost_group_columns.push_back(c);
    }
    if (lost_group_columns.empty()) continue;

    for (int e = 0; e < static_cast<int>(group.extended_rows().size()); ++e) {
      std::vector<int> erased;
      for (int c : lost_group_columns) erased.push_back(group.code_column(e, c));
      const std::vector<int> plan = code.read_plan(erased);

      // Fetch only what the decoder will use; everything else stays zero.
      Codeword received(code.rows(), code.k());
      for (int code_col : plan) {
        const int column = group.group_column(e, code_col);
        for (int r = 0; r < code.rows(); ++r) {
          received.at(r, code_col) = unit(layout, array, i, column, e, r);
        }
        out.io.units_read[placement[column]] += code.rows();
      }

      const DecodeResult decoded = code.decode(received, erased);
      if (decoded.columns_read != plan) throw std::logic_error("decoder read outside its plan");
      for (int code_col : erased) {
        const int column = group.group_column(e, code_col);
        for (int r = 0; r < code.rows(); ++r) {
          unit(layout, out.recovered, i, column, e, r) = decoded.codeword.at(r, code_col);
        }
        out.io.units_written[placement[column]] += code.rows();
      }
    }
  }
  return out;
}

SweepSummary exhaustive_verify(const DeclusteredLayout& layout, int s, std::uint64_t seed,
                               int jobs) {
  if (s < 0 || s > layout.group().delta()) {
    throw TooManyFailures("sweep size " + std::to_string(s) + " exceeds delta");
  }
  const DiskArray original = materialize(layout, seed);
  const auto sets = all_subsets(layout.disks(), s);

  SweepSummary summary;
  summary.s = s;
  summary.outcomes.resize(sets.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t idx = next++; idx < sets.size(); idx = next++) {
      FailureOutcome& outcome = summary.outcomes[idx];
      outcome.failed = sets[idx];
      const Reconstruction rebuilt = fail_and_reconstruct(layout, original, sets[idx]);
      const WorkloadReport predicted = reconstruction_workload(layout, sets[idx]);
      outcome.recovered = rebuilt.recovered == original;
      outcome.matches_prediction = rebuilt.io.units_read == predicted.units_read;
      outcome.units_read = rebuilt.io.units_read;
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(sets.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  summary.min_reads = std::numeric_limits<long long>::max();
  summary.max_reads = std::numeric_limits<long long>::min();
  summary.uniform = true;
  for (const FailureOutcome& o : summary.outcomes) {
    if (o.recovered && o.matches_prediction) ++summary.passed;
    std::optional<long long> first;
    for (int d = 0; d < layout.disks(); ++d) {
      if (std::binary_search(o.failed.begin(), o.failed.end(), d)) continue;
      summary.min_reads = std::min(summary.min_reads, o.units_read[d]);
      summary.max_reads = std::max(summary.max_reads, o.units_read[d]);
      if (!first) first = o.units_read[d];
      if (*first != o.units_read[d]) summary.uniform = false;
    }
  }
  if (summary.min_reads > summary.max_reads) summary.min_reads = summary.max_reads = 0;
  return summary;
}

}  // namespace declustr
