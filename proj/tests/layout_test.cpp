#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "declustr/error.hpp"
#include "declustr/layout.hpp"
#include "declustr/serialize.hpp"
#include "fixtures.hpp"

namespace declustr {
namespace {

DeclusteredLayout rdp3_layout() {
  return build_layout(balance_horizontal_code(HorizontalCode::rdp(3)), testing::eight_point_design());
}

DeclusteredLayout xor_layout() {
  return build_layout(single_arrangement_group(HorizontalCode::rs(4, 1)),
                      testing::five_point_design());
}

TEST(Layout, RdpOverEightDisks) {
  const DeclusteredLayout layout = rdp3_layout();
  EXPECT_EQ(layout.disks(), 8);
  EXPECT_EQ(layout.instances(), 14);
  EXPECT_EQ(layout.units_per_disk(), 7);
  EXPECT_EQ(layout.rows_per_disk(), 168);
}

TEST(Layout, DiskContentsFollowBlocks) {
  const DeclusteredLayout layout = rdp3_layout();
  // Instances touching each disk, in stacking order; column is the rank of the
  // disk within the block.
  const std::vector<std::vector<int>> expected{
      {0, 1, 2, 3, 4, 5, 6},    {0, 1, 2, 10, 11, 12, 13}, {0, 3, 4, 8, 9, 12, 13},
      {0, 5, 6, 8, 9, 10, 11},  {1, 3, 5, 7, 9, 11, 13},   {1, 4, 6, 7, 9, 10, 12},
      {2, 3, 6, 7, 8, 11, 12},  {2, 4, 5, 7, 8, 10, 13}};
  for (int d = 0; d < 8; ++d) {
    std::vector<int> instances;
    for (const UnitSlot& slot : layout.disk_contents(d)) {
      instances.push_back(slot.instance);
      const Block& b = layout.design().block(slot.instance);
      EXPECT_EQ(b[slot.column], d);
      EXPECT_EQ(layout.slot_index(slot.instance, slot.column),
                static_cast<int>(instances.size()) - 1);
    }
    EXPECT_EQ(instances, expected[d]) << "disk " << d;
  }
}

TEST(Layout, UnitOffsetsTileEachDisk) {
  const DeclusteredLayout layout = rdp3_layout();
  const int rows = layout.group().codeword_rows();
  const int ext = static_cast<int>(layout.group().extended_rows().size());
  for (int d = 0; d < layout.disks(); ++d) {
    std::set<long long> offsets;
    for (const UnitSlot& slot : layout.disk_contents(d)) {
      for (int e = 0; e < ext; ++e) {
        for (int r = 0; r < rows; ++r) offsets.insert(layout.unit_offset(slot.instance, slot.column, e, r));
      }
    }
    EXPECT_EQ(static_cast<long long>(offsets.size()), layout.rows_per_disk());
    EXPECT_EQ(*offsets.begin(), 0);
    EXPECT_EQ(*offsets.rbegin(), layout.rows_per_disk() - 1);
  }
  // Instance 13 is last on disk 7; instance 4 is second.
  EXPECT_EQ(layout.unit_offset(13, 3, 0, 0), 6 * 24);
  EXPECT_EQ(layout.unit_offset(4, 3, 5, 1), 1 * 24 + 5 * 2 + 1);
}

TEST(Layout, GeometryOfRdpLayout) {
  const LayoutGeometry g = layout_geometry(rdp3_layout());
  EXPECT_EQ(g.rows_per_disk, 168);
  EXPECT_EQ(g.units_per_disk, 7);
  EXPECT_EQ(g.disks_of_parity, Rational(4));
  EXPECT_EQ(g.disks_of_data, Rational(4));
  EXPECT_EQ(g.parity_units_per_disk, std::vector<long long>(8, 84));
  EXPECT_EQ(g.data_units_per_disk, std::vector<long long>(8, 84));
}

TEST(Layout, TotalUnitsMatchGroupCount) {
  for (const auto& [design, code] :
       {std::pair{testing::eight_point_design(), HorizontalCode::rdp(3)},
        std::pair{hadamard_3design(16), HorizontalCode::rs(8, 2)},
        std::pair{complete_design(7, 4, 3), HorizontalCode::rs(4, 2)},
        std::pair{complete_design(7, 5, 4), HorizontalCode::rs(5, 3)}}) {
    const ParityGroup group = balance_horizontal_code(code);
    const DeclusteredLayout layout = build_layout(group, design);
    const long long total = layout.rows_per_disk() * layout.disks();
    EXPECT_EQ(total, static_cast<long long>(group.depth()) * group.k() *
                         static_cast<long long>(design.size()));
    const LayoutGeometry g = layout_geometry(layout);
    EXPECT_EQ(g.disks_of_parity, Rational(group.delta() * layout.disks(), group.k()));
    for (long long p : g.parity_units_per_disk) EXPECT_EQ(p, g.parity_units_per_disk[0]);
  }
}

TEST(Layout, FourDesignWithThreeParities) {
  const DeclusteredLayout layout =
      build_layout(balance_horizontal_code(HorizontalCode::rs(5, 3)), complete_design(7, 5, 4));
  EXPECT_EQ(layout.instances(), 21);
  EXPECT_EQ(layout.units_per_disk(), 15);
  EXPECT_EQ(layout.group().depth(), 60);
  EXPECT_EQ(layout.rows_per_disk(), 900);
}

TEST(Layout, SingleParityDeclustering) {
  const DeclusteredLayout layout = xor_layout();
  EXPECT_EQ(layout.units_per_disk(), 4);
  EXPECT_EQ(layout.rows_per_disk(), 4);
  // Parity of block {1,2,3,4} lands on disk 4.
  EXPECT_EQ(layout.placements()[4][3], 4);
  const LayoutGeometry g = layout_geometry(layout);
  EXPECT_EQ(g.parity_units_per_disk, (std::vector<long long>{0, 0, 0, 1, 4}));
}

TEST(Layout, RotationEvensOutParity) {
  const DeclusteredLayout rotated = rotate_layout(xor_layout());
  EXPECT_EQ(rotated.rows_per_disk(), 20);
  EXPECT_EQ(rotated.instances(), 25);
  EXPECT_EQ(rotated.design().params(), (DesignParams{2, 5, 4, 15}));
  const LayoutGeometry g = layout_geometry(rotated);
  EXPECT_EQ(g.parity_units_per_disk, std::vector<long long>(5, 5));
  EXPECT_EQ(g.disks_of_parity, Rational(5, 4));

  const LayoutGeometry twice = layout_geometry(rotate_layout(rotated));
  EXPECT_EQ(twice.parity_units_per_disk, std::vector<long long>(5, 25));
  EXPECT_THROW(rotate_layout(rdp3_layout()), ParamError);
}

TEST(Layout, SingleGroupSpansAllDisks) {
  const DeclusteredLayout layout =
      build_layout(balance_horizontal_code(HorizontalCode::rdp(3)), complete_design(4, 4, 3));
  EXPECT_EQ(layout.instances(), 1);
  EXPECT_EQ(layout.units_per_disk(), 1);
  EXPECT_EQ(layout.rows_per_disk(), 24);
}

TEST(Layout, MismatchedInputs) {
  const ParityGroup rdp = balance_horizontal_code(HorizontalCode::rdp(3));
  EXPECT_THROW(build_layout(rdp, testing::five_point_design()), MismatchError);
  EXPECT_THROW(build_layout(rdp, hadamard_3design(16)), MismatchError);
  EXPECT_THROW(build_layout(rdp, reduce_design(testing::eight_point_design(), 2)), MismatchError);
}

TEST(Layout, ConstructorInvariants) {
  const Design d = testing::eight_point_design();
  const ParityGroup g = balance_horizontal_code(HorizontalCode::rdp(3));
  auto placements = d.blocks();
  std::swap(placements[0][0], placements[0][3]);
  EXPECT_NO_THROW(DeclusteredLayout(d, g, placements));  // any column order per block
  placements[0] = {0, 1, 2, 2};
  EXPECT_THROW(DeclusteredLayout(d, g, placements), InvariantError);
  placements[0] = {0, 1, 2, 8};
  EXPECT_THROW(DeclusteredLayout(d, g, placements), InvariantError);
  placements[0] = {0, 1, 2, 4};
  EXPECT_THROW(DeclusteredLayout(d, g, placements), InvariantError);
  placements.pop_back();
  EXPECT_THROW(DeclusteredLayout(d, g, placements), InvariantError);
}

TEST(Serialize, LayoutRoundTrip) {
  for (const DeclusteredLayout& layout : {rdp3_layout(), xor_layout(), rotate_layout(xor_layout())}) {
    const json doc = layout_to_json(layout);
    std::vector<std::string> warnings;
    const DeclusteredLayout back = layout_from_json(parse_json(doc.dump()), warnings);
    EXPECT_TRUE(warnings.empty());
    EXPECT_EQ(back.placements(), layout.placements());
    EXPECT_EQ(back.design(), layout.design());
    EXPECT_EQ(back.group().extended_rows(), layout.group().extended_rows());
    EXPECT_EQ(layout_to_json(back), doc);
  }
}

TEST(Serialize, LayoutRejectsBadPlacements) {
  json doc = layout_to_json(rdp3_layout());
  std::vector<std::string> warnings;
  json out_of_range = doc;
  out_of_range["placements"][3][1] = 8;
  EXPECT_THROW(layout_from_json(out_of_range, warnings), InvariantError);
  json duplicate = doc;
  duplicate["placements"][3][1] = duplicate["placements"][3][0];
  EXPECT_THROW(layout_from_json(duplicate, warnings), InvariantError);
  json bad_design = doc;
  bad_design["design"]["blocks"].erase(0);
  EXPECT_THROW(layout_from_json(bad_design, warnings), InvariantError);
  json malformed = doc;
  malformed["placements"] = "none";
  EXPECT_THROW(layout_from_json(malformed, warnings), FormatError);
}

TEST(Serialize, DesignAndGroupDocuments) {
  std::vector<std::string> warnings;
  json doc = design_to_json(testing::eight_point_design());
  doc["comment"] = "extra";
  const Design d = design_from_json(doc, warnings);
  EXPECT_EQ(d, testing::eight_point_design());
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("comment"), std::string::npos);

  EXPECT_EQ(group_to_json(balance_horizontal_code(HorizontalCode::rdp(3))),
            json::parse(R"({"code":"rdp","p":3})"));
  EXPECT_EQ(group_to_json(single_arrangement_group(HorizontalCode::rs(4, 1))),
            json::parse(R"({"code":"rs","k":4,"delta":1,"family":"single"})"));
  warnings.clear();
  const ParityGroup g = group_from_json(json::parse(R"({"code":"rs","k":5,"delta":2})"), warnings);
  EXPECT_EQ(g.depth(), 20);
  EXPECT_THROW(group_from_json(json::parse(R"({"code":"lrc","k":5})"), warnings), FormatError);
  EXPECT_THROW(parse_json("{not json"), FormatError);
  EXPECT_THROW(design_from_json(json::parse(R"({"t":3})"), warnings), FormatError);
}

}  // namespace
}  // namespace declustr
