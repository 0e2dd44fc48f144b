#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "wreathfh/group.hpp"
#include "wreathfh/partition.hpp"
#include "wreathfh/wreath.hpp"

namespace wfh {

/// Cayley table: {"order": N, "mul": [[...]], "labels": [...]} (labels optional).
FiniteGroup group_from_json(const nlohmann::json& j);
FiniteGroup load_cayley_file(const std::string& path);
nlohmann::json group_to_json(const FiniteGroup& g);

/// PFN literal: {"<class-index>": [parts...]}, e.g. {"0":[2,1],"2":[1]}.
ClassPartitionMap pfn_from_json(const nlohmann::json& j);
ClassPartitionMap parse_pfn(const std::string& text);
nlohmann::json pfn_to_json(const ClassPartitionMap& m);
/// Compact single-line form of pfn_to_json.
std::string pfn_literal(const ClassPartitionMap& m);

/// Element literal: {"n":8,"g":[...],"sigma":[...]} with 1-based sigma images.
WreathElement element_from_json(const FiniteGroup& group, const nlohmann::json& j);
WreathElement parse_element(const FiniteGroup& group, const std::string& text);
nlohmann::json element_to_json(const WreathElement& x);

}  // namespace wfh
