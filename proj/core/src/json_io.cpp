#include "ncpart/json_io.hpp"

#include <fstream>
#include <algorithm>

#include "ncpart/error.hpp"

namespace ncpart {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

nlohmann::json parse_literal(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational(v.get<std::string>());
    } catch (const std::exception&) {
      bad("cannot read '" + v.get<std::string>() + "' as a fraction");
    }
  }
  bad("expected an integer or a \"p/q\" string");
}

}  // namespace

nlohmann::json to_json(const NCPartition& p) {
  return {{"n", p.n()}, {"blocks", p.blocks()}};
}

NCPartition partition_from_json(const nlohmann::json& j) {
  try {
    return validate_partition(j.at("blocks").get<std::vector<Block>>(), j.at("n").get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("partition JSON needs \"n\" and \"blocks\": ") + e.what());
  }
}

nlohmann::json to_json(const PlaneTree& t) {
  return {{"degrees", std::vector<std::size_t>(t.degrees().begin(), t.degrees().end())}};
}

PlaneTree tree_from_json(const nlohmann::json& j) {
  try {
    return PlaneTree::from_degrees(j.at("degrees").get<std::vector<std::size_t>>());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("tree JSON needs \"degrees\": ") + e.what());
  }
}

WeightSeq weights_from_json(const nlohmann::json& j) {
  try {
    if (j.is_array()) return WeightSeq::explicit_values(j.get<std::vector<double>>());
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "set") {
      const auto members = j.at("members").get<std::vector<std::size_t>>();
      return WeightSeq::membership(MembershipSet::finite({members.begin(), members.end()}));
    }
    if (kind == "predicate") {
      return WeightSeq::membership(MembershipSet::parse(j.at("name").get<std::string>()));
    }
    if (kind == "explicit") return WeightSeq::explicit_values(j.at("values").get<std::vector<double>>());
    bad("unknown weight kind '" + kind + "' (set, predicate, explicit)");
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed weight JSON: ") + e.what());
  }
}

WeightSeq parse_weight_spec(std::string_view spec) {
  if (!spec.empty() && (spec.front() == '{' || spec.front() == '[')) {
    return weights_from_json(parse_literal(spec));
  }
  constexpr std::string_view kExplicit = "explicit:";
  if (spec.substr(0, kExplicit.size()) == kExplicit) {
    return weights_from_json(read_json_file(std::string(spec.substr(kExplicit.size()))));
  }
  return WeightSeq::membership(MembershipSet::parse(spec));
}

CumulantSeq cumulants_from_json(const nlohmann::json& j) {
  try {
    if (j.is_object() && j.contains("preset")) {
      return CumulantSeq::preset(j.at("preset").get<std::string>());
    }
    const nlohmann::json& list = j.is_array() ? j : j.at("kappa");
    if (!list.is_array()) bad("\"kappa\" must be an array");
    const bool exact = std::all_of(list.begin(), list.end(), [](const nlohmann::json& v) {
      return v.is_number_integer() || v.is_string();
    });
    if (j.is_object() && j.contains("geometric_ratio")) {
      return CumulantSeq::geometric_tail(list.get<std::vector<double>>(),
                                         j.at("geometric_ratio").get<double>());
    }
    if (j.is_object() && j.value("infinite", false)) {
      return CumulantSeq::untailed(list.get<std::vector<double>>());
    }
    if (exact) {
      std::vector<Rational> values;
      for (const auto& v : list) values.push_back(rational_from_json(v));
      return CumulantSeq::exact(std::move(values));
    }
    return CumulantSeq::finite(list.get<std::vector<double>>());
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed cumulant JSON: ") + e.what());
  }
}

}  // namespace ncpart
