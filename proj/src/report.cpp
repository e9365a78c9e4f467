#include "whrank/report.hpp"

#include <json.hpp>

#include "whrank/error.hpp"

namespace whrank {

namespace {

nlohmann::ordered_json to_json(const RankReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  if (r.order <= std::numeric_limits<std::uint64_t>::max())
    j["order"] = static_cast<std::uint64_t>(r.order);
  else
    j["order"] = r.order.str();
  j["classes_C"] = r.classes_C;
  j["classes_R_aut"] = r.classes_R_aut;
  j["classes_Q_aut"] = r.classes_Q_aut;
  j["classes_R_inn"] = r.classes_R_inn;
  j["classes_Q_inn"] = r.classes_Q_inn;
  j["N"] = r.N;
  j["bass_rank"] = r.bass_rank;
  j["action_provenance"] = r.action_provenance;
  return j;
}

}  // namespace

std::string report_json(const RankReport& r) { return to_json(r).dump(); }

RankReport report_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    RankReport r;
    r.label = j.at("label").get<std::string>();
    const auto& order = j.at("order");
    r.order = order.is_string() ? BigInt(order.get<std::string>()) : BigInt(order.get<std::uint64_t>());
    r.classes_C = j.at("classes_C").get<std::uint64_t>();
    r.classes_R_aut = j.at("classes_R_aut").get<std::uint64_t>();
    r.classes_Q_aut = j.at("classes_Q_aut").get<std::uint64_t>();
    r.classes_R_inn = j.at("classes_R_inn").get<std::uint64_t>();
    r.classes_Q_inn = j.at("classes_Q_inn").get<std::uint64_t>();
    r.N = j.at("N").get<long long>();
    r.bass_rank = j.at("bass_rank").get<long long>();
    r.action_provenance = j.at("action_provenance").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw GroupError(Errc::parse_error, std::string("report JSON: ") + e.what());
  }
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "label",         "order",         "classes_C", "classes_R_aut",    "classes_Q_aut",
      "classes_R_inn", "classes_Q_inn", "N",         "bass_rank", "action_provenance"};
  return cols;
}

std::string report_tsv_header() {
  std::string s;
  for (const auto& c : report_columns()) s += (s.empty() ? "" : "\t") + c;
  return s;
}

std::string report_tsv_row(const RankReport& r) {
  return r.label + "\t" + r.order.str() + "\t" + std::to_string(r.classes_C) + "\t" +
         std::to_string(r.classes_R_aut) + "\t" + std::to_string(r.classes_Q_aut) + "\t" +
         std::to_string(r.classes_R_inn) + "\t" + std::to_string(r.classes_Q_inn) + "\t" +
         std::to_string(r.N) + "\t" + std::to_string(r.bass_rank) + "\t" + r.action_provenance;
}

}  // namespace whrank
