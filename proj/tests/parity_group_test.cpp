#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "declustr/error.hpp"
#include "declustr/parity_group.hpp"

namespace declustr {
namespace {

const ColumnLabel D = ColumnLabel::data();
const ColumnLabel P = ColumnLabel::p(1);
const ColumnLabel Q = ColumnLabel::p(2);

TEST(BalancedGroup, Depths) {
  const ParityGroup rdp3 = balance_horizontal_code(HorizontalCode::rdp(3));
  EXPECT_EQ(rdp3.extended_rows().size(), 12u);
  EXPECT_EQ(rdp3.depth(), 24);
  const ParityGroup rdp5 = balance_horizontal_code(HorizontalCode::rdp(5));
  EXPECT_EQ(rdp5.extended_rows().size(), 30u);
  EXPECT_EQ(rdp5.depth(), 120);
  const ParityGroup rs = balance_horizontal_code(HorizontalCode::rs(5, 2));
  EXPECT_EQ(rs.extended_rows().size(), 20u);
  EXPECT_EQ(rs.depth(), 20);
  const ParityGroup rs3 = balance_horizontal_code(HorizontalCode::rs(6, 3));
  EXPECT_EQ(rs3.extended_rows().size(), 120u);  // 3! * C(6,3)
}

TEST(BalancedGroup, ArrangementsAreDistinctAndComplete) {
  for (int k = 3; k <= 7; ++k) {
    const ParityGroup g = balance_horizontal_code(HorizontalCode::rs(k, 2));
    std::set<Arrangement> seen(g.extended_rows().begin(), g.extended_rows().end());
    EXPECT_EQ(seen.size(), g.extended_rows().size());
    EXPECT_EQ(static_cast<int>(seen.size()), k * (k - 1));
    for (const Arrangement& a : g.extended_rows()) {
      EXPECT_EQ(std::count(a.begin(), a.end(), P), 1);
      EXPECT_EQ(std::count(a.begin(), a.end(), Q), 1);
    }
  }
}

TEST(BalancedGroup, LexicographicOrder) {
  const ParityGroup g = balance_horizontal_code(HorizontalCode::rdp(3));
  const auto& rows = g.extended_rows();
  EXPECT_EQ(rows[0], (Arrangement{P, Q, D, D}));
  EXPECT_EQ(rows[1], (Arrangement{Q, P, D, D}));
  EXPECT_EQ(rows[2], (Arrangement{P, D, Q, D}));
  EXPECT_EQ(rows[11], (Arrangement{D, D, Q, P}));
}

TEST(BalancedGroup, ColumnMapsAreInverse) {
  const ParityGroup g = balance_horizontal_code(HorizontalCode::rdp(5));
  for (int e = 0; e < static_cast<int>(g.extended_rows().size()); ++e) {
    std::set<int> codes;
    for (int c = 0; c < g.k(); ++c) {
      const int code_col = g.code_column(e, c);
      codes.insert(code_col);
      EXPECT_EQ(g.group_column(e, code_col), c);
      EXPECT_EQ(g.code().label_of(code_col), g.extended_rows()[e][c]);
    }
    EXPECT_EQ(static_cast<int>(codes.size()), g.k());
  }
}

TEST(BalancedGroup, AllConditionsHold) {
  for (int k = 3; k <= 8; ++k) {
    const BalanceReport r = verify_balance(balance_horizontal_code(HorizontalCode::rs(k, 2)), 2);
    EXPECT_TRUE(r.balanced()) << "k=" << k;
  }
  for (int p : {3, 5, 7}) {
    EXPECT_TRUE(verify_balance(balance_horizontal_code(HorizontalCode::rdp(p)), 2).balanced());
  }
  for (int k = 4; k <= 6; ++k) {
    const BalanceReport r = verify_balance(balance_horizontal_code(HorizontalCode::rs(k, 3)), 3);
    EXPECT_TRUE(r.balanced()) << "k=" << k;
    EXPECT_EQ(r.tau.size(), 3u);
  }
}

TEST(BalancedGroup, ArrangementCountsPerColumnPair) {
  for (int k = 3; k <= 8; ++k) {
    const ParityGroup g = balance_horizontal_code(HorizontalCode::rs(k, 2));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j) continue;
        // Direct tally over the arrangements.
        ArrangementCounts direct;
        for (const Arrangement& a : g.extended_rows()) {
          direct.r_dq += a[i] == D && a[j] == Q;
          direct.r_pq += a[i] == P && a[j] == Q;
          direct.r_qp += a[i] == Q && a[j] == P;
        }
        EXPECT_EQ(arrangement_counts(g, i, j), direct);
        EXPECT_EQ(arrangement_counts(g, i, j), (ArrangementCounts{k - 2, 1, 1}));
      }
    }
  }
}

TEST(BalancedGroup, TauValues) {
  const ParityGroup g4 = balance_horizontal_code(HorizontalCode::rdp(3));
  EXPECT_EQ(tau(g4, 1), 16);
  EXPECT_EQ(tau(g4, 2), 24);
  const ParityGroup g6 = balance_horizontal_code(HorizontalCode::rdp(5));
  EXPECT_EQ(tau(g6, 1), 96);
  EXPECT_EQ(tau(g6, 2), 120);
  for (int k = 3; k <= 8; ++k) {
    const ParityGroup g = balance_horizontal_code(HorizontalCode::rs(k, 2));
    EXPECT_EQ(tau(g, 1) * (k - 1), static_cast<long long>(g.depth()) * (k - 2));
    EXPECT_EQ(tau(g, 2), g.depth());
  }
}

TEST(BalancedGroup, ReadsOnlyAndAllSurvivorsForTwoLosses) {
  const BalanceReport r = verify_balance(balance_horizontal_code(HorizontalCode::rdp(3)), 2);
  for (const auto& [failed, reads] : r.reads) {
    for (int c = 0; c < 4; ++c) {
      const bool lost = std::find(failed.begin(), failed.end(), c) != failed.end();
      if (lost) EXPECT_EQ(reads[c], 0);
    }
  }
  EXPECT_EQ(r.parity_per_column, (std::vector<long long>(4, 12)));
}

TEST(SingleArrangement, FailsBalance) {
  const ParityGroup g = single_arrangement_group(HorizontalCode::rdp(5));
  EXPECT_EQ(g.extended_rows().size(), 1u);
  const BalanceReport r = verify_balance(g, 2);
  EXPECT_TRUE(r.c1);
  EXPECT_TRUE(r.c2);
  EXPECT_FALSE(r.c3);
  EXPECT_FALSE(r.c4);
  EXPECT_THROW(tau(g, 1), UnbalancedGroup);
}

TEST(Rotations, EqualParityButUnevenReads) {
  const ParityGroup g = cyclic_rotation_group(HorizontalCode::rdp(5));
  ASSERT_EQ(g.extended_rows().size(), 6u);
  // Each rotation shifts the canonical arrangement right by one.
  for (std::size_t e = 1; e < 6; ++e) {
    for (int c = 0; c < 6; ++c) {
      EXPECT_EQ(g.extended_rows()[e][(c + 1) % 6], g.extended_rows()[e - 1][c]);
    }
  }
  const BalanceReport r = verify_balance(g, 2);
  EXPECT_TRUE(r.c4);
  EXPECT_FALSE(r.c3);
  const auto& reads = r.reads.at({0});
  EXPECT_EQ(reads[1], 5 * 4);
  EXPECT_EQ(reads[5], 4 * 4);
  EXPECT_THROW(tau(g, 1), UnbalancedGroup);
}

TEST(VerifyBalance, RawArrangements) {
  // Two arrangements that put P on the same column violate C4.
  const std::vector<Arrangement> bad{{P, Q, D}, {P, D, Q}};
  const BalanceReport r = verify_balance(bad, 2, 1, 1);
  EXPECT_FALSE(r.c4);
  EXPECT_EQ(r.parity_per_column, (std::vector<long long>{2, 1, 1}));
}

TEST(GroupFamily, Parse) {
  EXPECT_EQ(parse_group_family("balanced"), GroupFamily::balanced);
  EXPECT_EQ(parse_group_family("single"), GroupFamily::single);
  EXPECT_EQ(parse_group_family("rotations"), GroupFamily::rotations);
  EXPECT_THROW(parse_group_family("rotated"), FormatError);
  EXPECT_EQ(to_string(GroupFamily::rotations), "rotations");
}

TEST(ParityGroupCtor, RejectsInvalidArrangements) {
  const auto code = HorizontalCode::rs(4, 2);
  EXPECT_THROW(ParityGroup(code, GroupFamily::balanced, {{P, P, D, D}}), ParamError);
  EXPECT_THROW(ParityGroup(code, GroupFamily::balanced, {{P, Q, D}}), ParamError);
  EXPECT_THROW(ParityGroup(code, GroupFamily::balanced, {}), ParamError);
}

}  // namespace
}  // namespace declustr
