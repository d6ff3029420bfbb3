#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "ncpart/freeprob.hpp"
#include "ncpart/partition.hpp"
#include "ncpart/plane_tree.hpp"
#include "ncpart/weights.hpp"

namespace ncpart {

/// {"n": 12, "blocks": [[1,3,5], ...]}
nlohmann::json to_json(const NCPartition& p);
/// Validates; throws NotAPartition, Crossing or InvalidArgument.
NCPartition partition_from_json(const nlohmann::json& j);

/// {"degrees": [...]}
nlohmann::json to_json(const PlaneTree& t);
PlaneTree tree_from_json(const nlohmann::json& j);

/// {"kind":"set","members":[2,4]} | {"kind":"predicate","name":"odd"} |
/// {"kind":"explicit","values":[1,1,0.5]}; a bare array is read as explicit values.
WeightSeq weights_from_json(const nlohmann::json& j);

/// Preset text (all, odd, even, prime, set:k[,l...], divisible:k, multiples:k,
/// explicit:<path>) or a JSON literal.
WeightSeq parse_weight_spec(std::string_view spec);

/// {"kappa":[...]} (numbers, or "p/q" strings for exact values), optionally
/// with "geometric_ratio": q, or {"preset": "..."}; a bare array is a finite list.
CumulantSeq cumulants_from_json(const nlohmann::json& j);

}  // namespace ncpart
