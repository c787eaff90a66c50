#include "macc/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "macc/delivery.hpp"
#include "macc/oracle.hpp"
#include "macc/rates.hpp"
#include "macc/serialize.hpp"

namespace macc {

namespace {

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& text, const std::string& name) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    return r;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidParameter*>(&e)) throw;
    throw InvalidParameter(name + ": expected a:b, got '" + text + "'");
  }
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InvalidParameter("expected an integer or a/b fraction, got '" + text + "'");
  }
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  } catch (const std::exception&) {
    throw InvalidParameter("expected a comma-separated list of integers, got '" + text + "'");
  }
  return out;
}

/// Options from a JSON config become command-line arguments placed before the
/// user's own, skipping any option the user already gave.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config" && k + 1 < args.size()) {
      path = args[++k];
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
    } else {
      rest.push_back(args[k]);
    }
  }
  if (!path) return rest;
  std::ifstream in(*path);
  if (!in) throw InvalidParameter("cannot read config file " + *path);
  Json cfg;
  try {
    cfg = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("malformed config JSON: ") + e.what());
  }
  if (!cfg.is_object()) throw InvalidParameter("config JSON must be an object");

  auto given = [&](const std::string& flag) {
    for (const auto& a : rest)
      if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
    return false;
  };
  std::vector<std::string> merged;
  std::size_t first_flag = 0;
  while (first_flag < rest.size() && rest[first_flag].rfind("-", 0) != 0) merged.push_back(rest[first_flag++]);
  for (const auto& [key, value] : cfg.items()) {
    const std::string flag = "--" + key;
    if (given(flag)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) merged.push_back(flag);
    } else if (value.is_string()) {
      merged.push_back(flag);
      merged.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      merged.push_back(flag);
      merged.push_back(std::to_string(value.get<long long>()));
    } else {
      throw InvalidParameter("config key '" + key + "' must be a string, integer or boolean");
    }
  }
  merged.insert(merged.end(), rest.begin() + static_cast<std::ptrdiff_t>(first_flag), rest.end());
  return merged;
}

std::optional<int> field_from_env() {
  const char* w = std::getenv("MACC_LAB_FIELD_W");
  if (!w || !*w) return std::nullopt;
  try {
    return FieldSpec::for_degree(std::stoi(w)).degree;
  } catch (const std::invalid_argument&) {
    throw InvalidParameter(std::string("MACC_LAB_FIELD_W must be an integer in [1, 16], got '") + w + "'");
  }
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

constexpr int kSweepMaxK = 200;

/// Calculator value a constructed plan is held to: an upper bound in linear
/// mode, an exact match otherwise.
Rational reference_rate(DeliveryMode mode, int K, int L, int i) {
  switch (mode) {
    case DeliveryMode::linear: {
      const auto r4v = *r4(K, L, i).rate;
      const auto r3v = r3(K, L, i);
      return r3v.rate ? std::min(r4v, *r3v.rate) : r4v;
    }
    case DeliveryMode::quadratic: return *r5_f5(K, L, i).rate;
    case DeliveryMode::divisor: return *r3(K, L, i).rate;
  }
  return Rational(0);
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-access coded caching laboratory", "macc_lab"};
  app.require_subcommand(1);

  // rates
  int K = 0, L = 0, i = -1, N = 0;
  std::string memory, format = "csv";
  auto* rates = app.add_subcommand("rates", "Closed-form rates of every scheme");
  rates->add_option("--K", K, "Number of caches and users")->required();
  rates->add_option("--L", L, "Caches accessed per user")->required();
  rates->add_option("--i", i, "Memory index, M = iN/K; all indices when omitted");
  rates->add_option("--N", N, "Number of files (default K)");
  rates->add_option("--M", memory, "Memory per cache (integer or a/b); memory-shared rates");
  rates->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  // plan
  std::string mode_name = "linear", demands_text, out_path;
  std::optional<int> X, field_degree;
  auto* plan_cmd = app.add_subcommand("plan", "Build, encode and verify a delivery");
  plan_cmd->add_option("--K", K)->required();
  plan_cmd->add_option("--L", L)->required();
  plan_cmd->add_option("--i", i)->required();
  plan_cmd->add_option("--N", N, "Number of files (default K)");
  plan_cmd->add_option("--mode", mode_name, "linear, quadratic or divisor");
  plan_cmd->add_option("--X", X, "Colors per pair in divisor mode");
  plan_cmd->add_option("--demands", demands_text, "Comma-separated 1-based file per user");
  plan_cmd->add_option("--field-degree", field_degree, "w of GF(2^w)");
  plan_cmd->add_option("--out", out_path, "Write the plan JSON here");

  // sweep
  std::string k_range, l_range;
  auto* sweep = app.add_subcommand("sweep", "Verify deliveries over a parameter grid");
  sweep->add_option("--K-range", k_range, "a:b")->required();
  sweep->add_option("--L-range", l_range, "a:b")->required();
  sweep->add_option("--mode", mode_name, "linear, quadratic or divisor");
  sweep->add_option("--field-degree", field_degree, "w of GF(2^w)");
  sweep->add_option("--out", out_path, "Write CSV here")->required();

  // oracle
  std::string icp_path, which = "chi,mais,minrank";
  int cap_chi = 20, cap_mais = 24, cap_minrank = 10;
  auto* oracle = app.add_subcommand("oracle", "Exact small-instance bounds");
  oracle->add_option("--icp", icp_path, "ICP JSON file");
  oracle->add_option("--K", K);
  oracle->add_option("--L", L);
  oracle->add_option("--i", i);
  oracle->add_option("--N", N);
  oracle->add_option("--which", which, "Comma-separated subset of chi,mais,minrank");
  oracle->add_option("--cap-chi", cap_chi);
  oracle->add_option("--cap-mais", cap_mais);
  oracle->add_option("--cap-minrank", cap_minrank);

  try {
    const auto args = merge_config(raw_args);
    std::vector<const char*> argv{"macc_lab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitInvalid;
    }

    if (rates->parsed()) {
      if (N == 0) N = K;
      const auto inst = MaccInstance::make(N, K, L, 0);
      if (!memory.empty()) {
        if (i >= 0) throw InvalidParameter("rates: give either --i or --M");
        const Rational M = parse_rational(memory);
        const auto reports = compare_at_memory(N, K, L, M);
        if (format == "json") {
          Json arr = Json::array();
          for (const auto& r : reports) arr.push_back(to_json(r));
          out << Json{{"N", N}, {"K", K}, {"L", L}, {"M", to_string(M)}, {"schemes", arr}}.dump(2) << "\n";
        } else {
          out << rates_csv_header() << "\n";
          for (const auto& r : reports) out << rates_csv_row(K, L, "", M, r) << "\n";
        }
        return kExitOk;
      }
      std::vector<int> indices;
      if (i >= 0) {
        MaccInstance::make(N, K, L, i);
        indices.push_back(i);
      } else {
        for (int ii = 0; ii <= inst.max_memory_index(); ++ii) indices.push_back(ii);
      }
      if (format == "json") {
        Json arr = Json::array();
        for (int ii : indices) {
          Json schemes = Json::array();
          for (const auto& r : compare(K, L, ii)) schemes.push_back(to_json(r));
          arr.push_back(Json{{"N", N}, {"K", K}, {"L", L}, {"i", ii},
                             {"M", to_string(Rational(static_cast<std::int64_t>(ii) * N, K))}, {"schemes", schemes}});
        }
        out << arr.dump(2) << "\n";
      } else {
        out << rates_csv_header() << "\n";
        for (int ii : indices)
          for (const auto& r : compare(K, L, ii))
            out << rates_csv_row(K, L, std::to_string(ii), Rational(static_cast<std::int64_t>(ii) * N, K), r) << "\n";
      }
      return kExitOk;
    }

    if (!field_degree) field_degree = field_from_env();

    if (plan_cmd->parsed()) {
      if (N == 0) N = K;
      const auto inst = MaccInstance::make(N, K, L, i);
      const auto demands =
          demands_text.empty() ? DemandProfile::distinct(inst) : DemandProfile::make(inst, parse_list(demands_text));
      const auto mode = parse_mode(mode_name);
      const auto plan = assemble(inst, demands, mode, AssembleOptions{X, field_degree});
      const auto report = verify_plan(plan);
      Json j = to_json(plan);
      j["verification"] = to_json(report);
      write_output(j.dump(2) + "\n", out_path, out);
      if (!out_path.empty())
        out << "rate " << to_string(report.rate) << " F " << report.subpacketization << " transmissions "
            << report.n_transmissions << (report.all_ok ? " verified" : " FAILED") << "\n";
      if (!report.all_ok) {
        err << "verification failed\n";
        return kExitVerification;
      }
      return kExitOk;
    }

    if (sweep->parsed()) {
      const auto mode = parse_mode(mode_name);
      const Range kr = parse_range(k_range, "--K-range"), lr = parse_range(l_range, "--L-range");
      if (kr.lo < 1 || lr.lo < 1) throw InvalidParameter("sweep: ranges must start at 1 or above");
      if (kr.hi > kSweepMaxK) throw InvalidParameter("sweep: K above " + std::to_string(kSweepMaxK) + " is too much work");
      auto cell = [](const RateReport& r) { return r.rate ? to_string(*r.rate) : std::string("n/a"); };
      std::ostringstream csv;
      csv << "K,L,i,mode,rate,rate_decimal,F,n_transmissions,r1,r2,r3,r4,r5,within_bound,verified\n";
      bool all_ok = true;
      for (int k = kr.lo; k <= kr.hi; ++k)
        for (int l = lr.lo; l <= std::min(lr.hi, k); ++l)
          for (int ii = 1; ii * l < k; ++ii) {
            const auto inst = MaccInstance::make(k, k, l, ii);
            const auto plan = assemble(inst, DemandProfile::distinct(inst), mode, AssembleOptions{{}, field_degree});
            const auto rep = verify_plan(plan);
            const auto ref = reference_rate(mode, k, l, ii);
            const bool bound_ok = mode == DeliveryMode::linear ? rep.rate <= ref : rep.rate == ref;
            all_ok = all_ok && bound_ok && rep.all_ok;
            char decimal[32];
            std::snprintf(decimal, sizeof decimal, "%.6f", to_double(rep.rate));
            csv << k << "," << l << "," << ii << "," << to_string(mode) << "," << to_string(rep.rate) << ","
                << decimal << "," << rep.subpacketization << "," << rep.n_transmissions;
            for (const auto& r : compare(k, l, ii)) csv << "," << cell(r);
            csv << "," << (bound_ok ? "true" : "false") << "," << (rep.all_ok ? "true" : "false") << "\n";
          }
      write_output(csv.str(), out_path, out);
      if (!all_ok) {
        err << "verification failed for at least one point\n";
        return kExitVerification;
      }
      return kExitOk;
    }

    if (oracle->parsed()) {
      IcpInstance icp;
      if (!icp_path.empty()) {
        std::ifstream in(icp_path);
        if (!in) throw InvalidParameter("cannot read " + icp_path);
        try {
          icp = icp_from_json(Json::parse(in));
        } catch (const nlohmann::json::exception& e) {
          throw InvalidParameter(std::string("malformed ICP JSON: ") + e.what());
        }
      } else {
        if (K == 0 || L == 0 || i < 1) throw InvalidParameter("oracle: give --icp or --K, --L and --i >= 1");
        if (N == 0) N = K;
        const auto inst = MaccInstance::make(N, K, L, i);
        icp = as_icp(reduce_macc(inst, DemandProfile::distinct(inst)));
      }
      Json j{{"n_messages", icp.n_messages}, {"n_users", icp.n_users()}};
      for (const auto& name : [&] {
             std::vector<std::string> v;
             std::stringstream ss(which);
             std::string item;
             while (std::getline(ss, item, ',')) v.push_back(item);
             return v;
           }()) {
        if (name == "chi") {
          const auto chi = exhaustive_chi_l(icp, cap_chi);
          j["chi_l"] = chi.value;
          j["chi_l_coloring"] = to_json(chi.coloring);
        } else if (name == "mais") {
          j["mais"] = mais(icp, cap_mais);
        } else if (name == "minrank") {
          j["minrank_gf2"] = min_rank_gf2(icp, cap_minrank);
        } else {
          throw InvalidParameter("oracle: unknown bound '" + name + "'");
        }
      }
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeCap;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace macc
