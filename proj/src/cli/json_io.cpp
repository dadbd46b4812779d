#include "shiftmon/json_io.hpp"

#include <string>

namespace shiftmon {

nlohmann::ordered_json presentation_to_json(const NumericalMonoid& m,
                                            const Presentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = m.generators();
  j["betti_elements"] = p.betti_elements();
  auto rels = nlohmann::ordered_json::array();
  for (const auto& r : p.relations()) {
    nlohmann::ordered_json item;
    item["betti"] = r.betti;
    item["left"] = r.left.coords();
    item["right"] = r.right.coords();
    rels.push_back(std::move(item));
  }
  j["relations"] = std::move(rels);
  return j;
}

Presentation presentation_from_json(const nlohmann::json& j,
                                    const NumericalMonoid& m) {
  if (!j.is_object() || !j.contains("relations") || !j["relations"].is_array()) {
    throw Error(ErrorCode::kInvalidInput,
                "presentation JSON needs a \"relations\" array");
  }
  if (j.contains("generators") &&
      j["generators"].get<std::vector<Int>>() != m.generators()) {
    throw Error(ErrorCode::kInvalidInput,
                "presentation was written for different generators");
  }
  std::vector<Relation> rels;
  try {
    for (const auto& item : j["relations"]) {
      Relation r;
      r.left = Factorization(item.at("left").get<std::vector<Int>>());
      r.right = Factorization(item.at("right").get<std::vector<Int>>());
      if (r.left.size() != m.rank() || r.right.size() != m.rank()) {
        throw Error(ErrorCode::kInvalidInput, "relation has wrong dimension");
      }
      r.betti = r.left.value(m.generators());
      rels.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidInput,
                std::string("malformed presentation JSON: ") + e.what());
  }
  return Presentation(std::move(rels));
}

}  // namespace shiftmon
