#include <gtest/gtest.h>

#include "macc/serialize.hpp"

using namespace macc;

TEST(Serialize, IcpRoundTrip) {
  const auto icp = IcpInstance::make(3, {{{0}, {1, 2}}, {{1, 2}, {}}}, {"a", "b", "c"});
  const auto j = to_json(icp);
  EXPECT_EQ(j["users"][0]["want"], Json::array({1}));
  const auto back = icp_from_json(j);
  EXPECT_EQ(back.n_messages, 3);
  EXPECT_EQ(back.users[1].want, icp.users[1].want);
  EXPECT_EQ(back.users[0].known, icp.users[0].known);
  EXPECT_EQ(back.labels, icp.labels);
  EXPECT_THROW(icp_from_json(Json{{"users", 3}}), InvalidParameter);
  EXPECT_THROW(icp_from_json(Json::parse(R"({"n_messages":2,"users":[{"want":[3]}]})")), InvalidParameter);
}

TEST(Serialize, ColoringRoundTrip) {
  const auto c = Coloring::make({1, 2, 1, 3});
  EXPECT_EQ(coloring_from_json(to_json(c)).colors, c.colors);
  EXPECT_THROW(coloring_from_json(Json::parse("[1, 3]")), InvalidParameter);
  EXPECT_THROW(coloring_from_json(Json::parse(R"({"a":1})")), InvalidParameter);
}

TEST(Serialize, SchemeRoundTripBothWidths) {
  for (int w : {8, 16}) {
    const auto inst = MaccInstance::make(9, 9, 2, 2);
    const auto plan = assemble(inst, DemandProfile::distinct(inst), DeliveryMode::quadratic, {{}, w});
    for (const auto& b : plan.blocks) {
      const auto j = to_json(b.scheme);
      const auto& row = j["rows"][0].get_ref<const std::string&>();
      EXPECT_EQ(row.size(), b.scheme.message_order.size() * (w == 8 ? 2 : 4));
      const auto back = scheme_from_json(j);
      EXPECT_EQ(back.field, b.scheme.field);
      EXPECT_EQ(back.coefficients, b.scheme.coefficients);
      EXPECT_EQ(back.split_factor, b.scheme.split_factor);
      ASSERT_EQ(back.message_order.size(), b.scheme.message_order.size());
      for (std::size_t k = 0; k < back.message_order.size(); ++k) {
        EXPECT_EQ(back.message_order[k].message, b.scheme.message_order[k].message);
        EXPECT_EQ(back.message_order[k].part, b.scheme.message_order[k].part);
        EXPECT_EQ(back.message_order[k].label, b.scheme.message_order[k].label);
      }
      // the decoded-back scheme still serves the block
      for (bool ok : decode_all(back, b.block.icp)) EXPECT_TRUE(ok);
    }
  }
}

TEST(Serialize, SchemeRejectsBadRows) {
  auto j = Json::parse(R"({"field":{"degree":8},"messages":[{"message":1},{"message":2}],"rows":["0102"]})");
  EXPECT_NO_THROW(scheme_from_json(j));
  j["rows"][0] = "010";
  EXPECT_THROW(scheme_from_json(j), InvalidParameter);
  j["rows"][0] = "zz01";
  EXPECT_THROW(scheme_from_json(j), InvalidParameter);
  j["rows"][0] = "0102";
  j["field"]["degree"] = 2;
  j["rows"][0] = "0105";
  EXPECT_THROW(scheme_from_json(j), InvalidParameter);
  j["field"]["degree"] = 8;
  j["field"]["polynomial"] = 0x11b;
  EXPECT_THROW(scheme_from_json(j), InvalidParameter);
}

TEST(Serialize, PlanJsonShape) {
  const auto inst = MaccInstance::make(8, 8, 2, 3);
  const auto plan = assemble(inst, DemandProfile::distinct(inst), DeliveryMode::linear);
  const auto j = to_json(plan);
  EXPECT_EQ(j["rate"]["num"], 3);
  EXPECT_EQ(j["rate"]["den"], 8);
  EXPECT_EQ(j["F"], 8);
  EXPECT_EQ(j["blocks"][0]["construction"], "cyclic(4)");
  EXPECT_EQ(j["blocks"][0]["descriptor"]["kind"], "union");
  EXPECT_EQ(j["blocks"][0]["descriptor"]["z"], 6);
  EXPECT_EQ(to_json(verify_plan(plan))["all_ok"], true);
}

TEST(Serialize, RatesCsv) {
  EXPECT_EQ(rates_csv_header(), "K,L,i,M,scheme,rate_num,rate_den,F,applicable");
  EXPECT_EQ(rates_csv_row(8, 2, "3", Rational(3), r4(8, 2, 3)), "8,2,3,3,r4,3,8,8,true");
  EXPECT_EQ(rates_csv_row(8, 2, "3", Rational(3), r1(8, 2, 3)), "8,2,3,3,r1,,,,false");
}
