#include "macc/serialize.hpp"

#include <cstdio>

namespace macc {

namespace {

std::vector<int> plus_one(const std::vector<int>& v) {
  std::vector<int> out(v);
  for (int& x : out) ++x;
  return out;
}

std::vector<int> minus_one(const Json& j) {
  std::vector<int> out = j.get<std::vector<int>>();
  for (int& x : out) --x;
  return out;
}

int hex_width(int degree) { return degree <= 8 ? 2 : 4; }

Json descriptor(const DeliveryBlock& b) {
  if (b.union_desc) return Json{{"kind", "union"}, {"a1", b.union_desc->a1}, {"a2", b.union_desc->a2}, {"z", b.union_desc->z}};
  if (b.single_desc)
    return Json{{"kind", "single"}, {"a1", b.single_desc->a1}, {"a2", b.single_desc->a2}, {"z", b.single_desc->z}};
  return nullptr;
}

}  // namespace

Json to_json(const IcpInstance& icp) {
  Json users = Json::array();
  for (const auto& u : icp.users) users.push_back(Json{{"want", plus_one(u.want)}, {"known", plus_one(u.known)}});
  Json j{{"n_messages", icp.n_messages}, {"users", users}};
  if (!icp.labels.empty()) j["labels"] = icp.labels;
  return j;
}

IcpInstance icp_from_json(const Json& j) {
  try {
    std::vector<IcpUser> users;
    for (const auto& u : j.at("users"))
      users.push_back({minus_one(u.at("want")), u.contains("known") ? minus_one(u.at("known")) : std::vector<int>{}});
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return IcpInstance::make(j.at("n_messages").get<int>(), std::move(users), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed ICP JSON: ") + e.what());
  }
}

Json to_json(const Coloring& coloring) { return coloring.colors; }

Coloring coloring_from_json(const Json& j) {
  try {
    return Coloring::make(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed coloring JSON: ") + e.what());
  }
}

Json to_json(const TransmissionScheme& scheme) {
  Json messages = Json::array();
  for (const auto& m : scheme.message_order)
    messages.push_back(Json{{"message", m.message + 1}, {"part", m.part + 1}, {"label", m.label}});
  const int width = hex_width(scheme.field.degree);
  Json rows = Json::array();
  char buf[8];
  for (Eigen::Index r = 0; r < scheme.coefficients.rows(); ++r) {
    std::string hex;
    for (Eigen::Index c = 0; c < scheme.coefficients.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%0*x", width, static_cast<unsigned>(scheme.coefficients(r, c)));
      hex += buf;
    }
    rows.push_back(hex);
  }
  return Json{{"field", {{"degree", scheme.field.degree}, {"polynomial", scheme.field.polynomial}}},
              {"split_factor", scheme.split_factor},
              {"messages", messages},
              {"rows", rows}};
}

TransmissionScheme scheme_from_json(const Json& j) {
  try {
    TransmissionScheme s;
    s.field = FieldSpec::for_degree(j.at("field").at("degree").get<int>());
    if (j.at("field").contains("polynomial") && j.at("field").at("polynomial").get<std::uint32_t>() != s.field.polynomial)
      throw InvalidParameter("scheme JSON: unsupported reduction polynomial");
    s.split_factor = j.value("split_factor", 1);
    for (const auto& m : j.at("messages"))
      s.message_order.push_back({m.at("message").get<int>() - 1, m.value("part", 1) - 1, m.value("label", "")});
    const int width = hex_width(s.field.degree);
    const auto& rows = j.at("rows");
    const auto cols = static_cast<Eigen::Index>(s.message_order.size());
    s.coefficients.resize(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const auto hex = rows[r].get<std::string>();
      if (static_cast<Eigen::Index>(hex.size()) != cols * width)
        throw InvalidParameter("scheme JSON: row " + std::to_string(r + 1) + " has the wrong length");
      for (Eigen::Index c = 0; c < cols; ++c) {
        const unsigned long v = std::stoul(hex.substr(static_cast<std::size_t>(c * width), width), nullptr, 16);
        if (v >= s.field.size()) throw InvalidParameter("scheme JSON: coefficient outside the field");
        s.coefficients(static_cast<Eigen::Index>(r), c) = static_cast<GfElement>(v);
      }
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed scheme JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidParameter*>(&e)) throw;
    throw InvalidParameter(std::string("malformed scheme JSON: ") + e.what());
  }
}

Json to_json(const Rational& r) {
  return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"value", to_double(r)}};
}

Json to_json(const DeliveryPlan& plan) {
  Json blocks = Json::array();
  for (const auto& b : plan.blocks)
    blocks.push_back(Json{{"columns", b.columns},
                          {"pieces", b.pieces},
                          {"construction", b.construction},
                          {"descriptor", descriptor(b)},
                          {"coloring", to_json(b.coloring)},
                          {"n_transmissions", b.scheme.n_transmissions()},
                          {"load", to_json(b.load())},
                          {"scheme", to_json(b.scheme)}});
  Json j{{"N", plan.instance.n_files},
         {"K", plan.instance.K()},
         {"L", plan.instance.L()},
         {"i", plan.instance.i()},
         {"mode", to_string(plan.mode)}};
  if (plan.n_colors) j["X"] = *plan.n_colors;
  j["demands"] = plan.demands.demands;
  j["rate"] = to_json(plan.rate);
  j["F"] = plan.subpacketization;
  j["n_transmissions"] = plan.n_transmissions();
  j["blocks"] = blocks;
  return j;
}

Json to_json(const VerificationReport& report) {
  std::vector<bool> ok(report.user_ok.begin(), report.user_ok.end());
  return Json{{"all_ok", report.all_ok},
              {"columns_covered", report.columns_covered},
              {"user_ok", ok},
              {"rate", to_json(report.rate)},
              {"F", report.subpacketization},
              {"n_transmissions", report.n_transmissions}};
}

Json to_json(const RateReport& report) {
  Json j{{"scheme", report.scheme}, {"applicable", report.applicable}};
  j["rate"] = report.rate ? to_json(*report.rate) : Json(nullptr);
  j["F"] = report.subpacketization ? Json(*report.subpacketization) : Json(nullptr);
  j["reason"] = report.reason;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

std::string rates_csv_header() { return "K,L,i,M,scheme,rate_num,rate_den,F,applicable"; }

std::string rates_csv_row(int K, int L, const std::string& i, const Rational& memory, const RateReport& report) {
  std::string row =
      std::to_string(K) + "," + std::to_string(L) + "," + i + "," + to_string(memory) + "," + report.scheme + ",";
  if (report.rate)
    row += std::to_string(report.rate->numerator()) + "," + std::to_string(report.rate->denominator());
  else
    row += ",";
  row += ",";
  if (report.subpacketization) row += std::to_string(*report.subpacketization);
  row += report.applicable ? ",true" : ",false";
  return row;
}

}  // namespace macc
