#pragma once

#include <cstdint>
#include <vector>

#include "declustr/layout.hpp"

namespace declustr {

// Deterministic byte source for data units: xorshift64 (shifts 13, 7, 17)
// seeded with `seed`, each 64-bit output emitted as 8 little-endian bytes.
// Seed 0 yields an all-zero stream.
class ByteStream {
 public:
  explicit ByteStream(std::uint64_t seed) : state_(seed) {}
  std::uint8_t next();

 private:
  std::uint64_t state_;
  std::uint64_t word_ = 0;
  int remaining_ = 0;
};

// n disks of M one-byte units each.
struct DiskArray {
  std::vector<std::vector<std::uint8_t>> disks;

  int size() const { return static_cast<int>(disks.size()); }
  friend bool operator==(const DiskArray&, const DiskArray&) = default;
};

struct Provenance {
  int instance = 0;
  int extended_row = 0;
  int codeword_row = 0;
  int group_column = 0;
  ColumnLabel label;
};

Provenance provenance(const DeclusteredLayout& layout, int disk, long long offset);

// Fills data units from ByteStream(seed) in order instance, extended row,
// codeword row, data column, then encodes every codeword in place.
DiskArray materialize(const DeclusteredLayout& layout, std::uint64_t seed);

// Every parity unit equals its code's encoding of the matching data units.
bool parity_consistent(const DeclusteredLayout& layout, const DiskArray& array);

struct IOStats {
  std::vector<long long> units_read;     // surviving disks only
  std::vector<long long> units_written;  // replacement disks only
};

struct Reconstruction {
  DiskArray recovered;  // failed disks replaced by rebuilt content
  IOStats io;
};

// Erases the disks in `failed`, decodes every affected codeword reading only
// the columns its decoder asks for, and writes the lost units to fresh
// replacement disks. Throws TooManyFailures when |failed| exceeds delta.
Reconstruction fail_and_reconstruct(const DeclusteredLayout& layout, const DiskArray& array,
                                    std::vector<int> failed);

struct FailureOutcome {
  std::vector<int> failed;
  bool recovered = false;           // byte-exact
  bool matches_prediction = false;  // IOStats reads == reconstruction_workload
  std::vector<long long> units_read;
};

struct SweepSummary {
  int s = 0;
  std::vector<FailureOutcome> outcomes;  // lexicographic by failure set
  int passed = 0;
  long long min_reads = 0;  // over surviving disks of every set
  long long max_reads = 0;
  bool uniform = false;     // every set reads the same amount from each survivor

  int total() const { return static_cast<int>(outcomes.size()); }
};

// Runs fail_and_reconstruct for all C(n, s) failure sets. Sets are split
// across `jobs` threads; the result does not depend on `jobs`.
SweepSummary exhaustive_verify(const DeclusteredLayout& layout, int s, std::uint64_t seed,
                               int jobs = 1);

}  // namespace declustr
