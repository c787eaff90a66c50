#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "macc/coloring.hpp"
#include "macc/delivery.hpp"
#include "macc/icp.hpp"
#include "macc/linalg.hpp"
#include "macc/rates.hpp"

namespace macc {

using Json = nlohmann::ordered_json;

/// {"n_messages", "users": [{"want", "known"}], "labels"}; message ids 1-based.
Json to_json(const IcpInstance& icp);
IcpInstance icp_from_json(const Json& j);

/// Array of 1-based colors, one per message.
Json to_json(const Coloring& coloring);
Coloring coloring_from_json(const Json& j);

/// Field, message order and one hex string per transmission (2 hex digits
/// per coefficient up to GF(2^8), 4 above).
Json to_json(const TransmissionScheme& scheme);
TransmissionScheme scheme_from_json(const Json& j);

Json to_json(const Rational& r);
Json to_json(const DeliveryPlan& plan);
Json to_json(const VerificationReport& report);
Json to_json(const RateReport& report);

/// CSV: K,L,i,M,scheme,rate_num,rate_den,F,applicable
std::string rates_csv_header();
/// `i` is left empty for memory-shared rows.
std::string rates_csv_row(int K, int L, const std::string& i, const Rational& memory, const RateReport& report);

}  // namespace macc
