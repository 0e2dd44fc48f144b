#include "wreathfh/literals.hpp"

#include <fstream>
#include <sstream>

#include "wreathfh/error.hpp"

namespace wfh {

using nlohmann::json;

namespace {

json parse_text(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("bad ") + what + " literal: " + e.what());
  }
}

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw Error(Errc::ParseError, where + " must be an integer");
  return v.get<int>();
}

}  // namespace

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("mul"))
    throw Error(Errc::ParseError, "Cayley JSON needs \"order\" and \"mul\"");
  const int order = as_int(j.at("order"), "order");
  const json& mul = j.at("mul");
  if (!mul.is_array()) throw Error(Errc::ParseError, "\"mul\" must be an array");
  std::vector<std::vector<int>> table;
  for (const auto& row : mul) {
    if (!row.is_array()) throw Error(Errc::ParseError, "\"mul\" rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) r.push_back(as_int(v, "mul entry"));
    table.push_back(std::move(r));
  }
  if (static_cast<int>(table.size()) != order)
    throw Error(Errc::BadTable, "\"mul\" has " + std::to_string(table.size()) + " rows, order is " +
                                    std::to_string(order));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw Error(Errc::ParseError, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return build_group(table, std::move(labels));
}

FiniteGroup load_cayley_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return group_from_json(parse_text(buf.str(), "Cayley table"));
}

json group_to_json(const FiniteGroup& g) {
  return {{"order", g.order()}, {"mul", g.table()}, {"labels", g.labels()}};
}

ClassPartitionMap pfn_from_json(const json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "PFN literal must be a JSON object");
  ClassPartitionMap m;
  for (const auto& [key, parts] : j.items()) {
    int c;
    try {
      std::size_t used = 0;
      c = std::stoi(key, &used);
      if (used != key.size() || c < 0) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "PFN key '" + key + "' is not a class index");
    }
    if (!parts.is_array()) throw Error(Errc::ParseError, "PFN value for '" + key + "' must be an array");
    std::vector<int> ps;
    for (const auto& v : parts) {
      int p = as_int(v, "PFN part");
      if (p <= 0) throw Error(Errc::ParseError, "PFN parts must be positive");
      ps.push_back(p);
    }
    m.set(c, union_of(m.at(c), Partition(std::move(ps))));
  }
  return m;
}

ClassPartitionMap parse_pfn(const std::string& text) { return pfn_from_json(parse_text(text, "PFN")); }

json pfn_to_json(const ClassPartitionMap& m) {
  json j = json::object();
  for (const auto& [c, p] : m.entries()) j[std::to_string(c)] = p.parts();
  return j;
}

std::string pfn_literal(const ClassPartitionMap& m) { return pfn_to_json(m).dump(); }

WreathElement element_from_json(const FiniteGroup& group, const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("g") || !j.contains("sigma"))
    throw Error(Errc::ParseError, "element literal needs \"n\", \"g\" and \"sigma\"");
  WreathElement x;
  x.n = as_int(j.at("n"), "n");
  for (const auto& v : j.at("g")) x.g.push_back(as_int(v, "g entry"));
  for (const auto& v : j.at("sigma")) x.sigma.push_back(as_int(v, "sigma entry") - 1);
  validate(group, x);
  return x;
}

WreathElement parse_element(const FiniteGroup& group, const std::string& text) {
  return element_from_json(group, parse_text(text, "element"));
}

json element_to_json(const WreathElement& x) {
  std::vector<int> sigma;
  for (int s : x.sigma) sigma.push_back(s + 1);
  return {{"n", x.n}, {"g", x.g}, {"sigma", sigma}};
}

}  // namespace wfh
