#include "cutoperad/io_json.hpp"

#include <nlohmann/json.hpp>

namespace cutoperad {

using nlohmann::json;

Signature signatureFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("signature: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("d") || !j.contains("generators"))
    throw StructuralError("signature: expected {\"d\":..., \"generators\":...}");
  int d = j["d"].get<int>();
  std::vector<std::vector<std::pair<std::string, int>>> gens;
  for (const auto& dir : j["generators"]) {
    std::vector<std::pair<std::string, int>> list;
    for (const auto& g : dir)
      list.emplace_back(g.at("name").get<std::string>(),
                        g.at("arity").get<int>());
    gens.push_back(std::move(list));
  }
  return Signature(d, std::move(gens));
}

std::string signatureToJson(const Signature& sig) {
  json dirs = json::array();
  for (int k = 1; k <= sig.dims(); ++k) {
    json list = json::array();
    for (int id : sig.generators(k)) {
      const GeneratorInfo& g = sig.gen(id);
      list.push_back({{"name", g.name}, {"arity", g.arity}});
    }
    dirs.push_back(std::move(list));
  }
  json j = {{"d", sig.dims()}, {"generators", std::move(dirs)}};
  return j.dump();
}

namespace {

json subdivisionJson(const Signature& sig, const SubdivisionPtr& s, int& pos,
                     const std::vector<int>& numbering) {
  if (s->isLeaf()) return json{{"leaf", numbering[pos++]}};
  json children = json::array();
  for (const auto& c : s->children())
    children.push_back(subdivisionJson(sig, c, pos, numbering));
  return json{{"cut",
               {{"dir", s->direction()},
                {"gen", sig.gen(s->generator()).name},
                {"children", std::move(children)}}}};
}

void subdivisionFromJson(const Signature& sig, const json& j,
                         SubdivisionPtr& shape, std::vector<int>& numbers) {
  if (j.contains("leaf")) {
    shape = Subdivision::leaf();
    numbers.push_back(j["leaf"].get<int>());
    return;
  }
  if (!j.contains("cut"))
    throw StructuralError("subdivision: expected \"cut\" or \"leaf\"");
  const json& cut = j["cut"];
  int genId = sig.idOf(cut.at("gen").get<std::string>());
  if (cut.contains("dir") &&
      cut["dir"].get<int>() != sig.gen(genId).direction)
    throw StructuralError("subdivision: generator direction mismatch");
  std::vector<SubdivisionPtr> children;
  for (const auto& c : cut.at("children")) {
    SubdivisionPtr child;
    subdivisionFromJson(sig, c, child, numbers);
    children.push_back(std::move(child));
  }
  shape = Subdivision::cut(sig, genId, std::move(children));
}

}  // namespace

std::string labelledToJson(const Signature& sig, const LabelledSubdivision& s) {
  int pos = 0;
  return subdivisionJson(sig, s.shape, pos, s.numbering).dump();
}

ParsedSubdivision labelledFromJson(const Signature& sig,
                                   const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("subdivision: ") + e.what(), e.byte);
  }
  ParsedSubdivision out;
  subdivisionFromJson(sig, j, out.raw, out.numbers);
  return out;
}

namespace {

json termJson(const Signature& sig, const TermPtr& t) {
  if (t->isLeaf()) {
    if (t->leafNumber > 0) return json{{"leaf", t->leafNumber}};
    return json{{"leaf", t->atom}};
  }
  json args = json::array();
  for (const auto& c : t->children) args.push_back(termJson(sig, c));
  return json{{"gen", sig.gen(t->genId).name}, {"args", std::move(args)}};
}

TermPtr termFromJsonValue(const Signature& sig, const json& j) {
  if (j.contains("leaf")) {
    const json& leaf = j["leaf"];
    if (leaf.is_number_integer()) return numberLeaf(leaf.get<int>());
    return atomLeaf(leaf.get<std::string>());
  }
  if (!j.contains("gen"))
    throw StructuralError("term: expected \"gen\" or \"leaf\"");
  int genId = sig.idOf(j["gen"].get<std::string>());
  std::vector<TermPtr> children;
  for (const auto& c : j.at("args"))
    children.push_back(termFromJsonValue(sig, c));
  return termNode(sig, genId, std::move(children));
}

}  // namespace

std::string termToJson(const Signature& sig, const TermPtr& t) {
  return termJson(sig, t).dump();
}

TermPtr termFromJson(const Signature& sig, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("term: ") + e.what(), e.byte);
  }
  return termFromJsonValue(sig, j);
}

}  // namespace cutoperad
