#include "hwcat/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hwcat::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& require(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

std::string as_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected a list");
  return v;
}

Scalar as_scalar(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (v.is_string()) {
    try {
      return Scalar::parse(v.get<std::string>());
    } catch (const InputError& e) {
      fail(where, e.what());
    }
  }
  fail(where, "expected an integer or an exact rational string like \"-3/2\"");
}

std::vector<PathTerm> parse_terms(const json& v, const std::string& where, const Quiver& q) {
  std::vector<PathTerm> out;
  const auto& arr = as_array(v, where);
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    if (!arr[k].is_object()) fail(at, "expected an object with \"coeff\" and \"path\"");
    PathTerm t;
    t.coeff = as_scalar(require(arr[k], at, "coeff"), at + "/coeff");
    const auto& path = as_array(require(arr[k], at, "path"), at + "/path");
    for (std::size_t j = 0; j < path.size(); ++j) {
      auto name = as_string(path[j], at + "/path/" + std::to_string(j));
      try {
        q.arrow_index(name);
      } catch (const InputError&) {
        fail(at + "/path/" + std::to_string(j), "unknown arrow \"" + name + "\"");
      }
      t.path.push_back(name);
    }
    out.push_back(std::move(t));
  }
  return out;
}

json scalar_json(const Scalar& s) {
  if (s.value().get_den() == 1 && s.value().get_num().fits_slong_p()) return s.value().get_num().get_si();
  return s.to_string();
}

json terms_json(const std::vector<PathTerm>& terms) {
  json out = json::array();
  for (const auto& t : terms) out.push_back({{"coeff", scalar_json(t.coeff)}, {"path", t.path}});
  return out;
}

}  // namespace

AlgebraDocument parse_algebra_document(const std::string& text, std::optional<FieldCtx> field) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) fail("", "expected an object");
  static const std::set<std::string> known{"name", "field", "vertices", "arrows", "relations", "duality", "order"};
  for (const auto& [key, value] : doc.items())
    if (!known.count(key)) fail("/" + key, "unknown field");

  AlgebraDocument out;
  if (doc.contains("name")) out.name = as_string(doc["name"], "/name");
  if (field) {
    out.field = *field;
  } else if (doc.contains("field")) {
    try {
      out.field = FieldCtx::parse(as_string(doc["field"], "/field"));
    } catch (const InputError& e) {
      fail("/field", e.what());
    }
  }

  const auto& vertices = as_array(require(doc, "", "vertices"), "/vertices");
  std::set<std::string> seen;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    auto label = as_string(vertices[k], "/vertices/" + std::to_string(k));
    if (!seen.insert(label).second) fail("/vertices/" + std::to_string(k), "duplicate vertex \"" + label + "\"");
    out.quiver.vertices.push_back(label);
  }
  if (out.quiver.vertices.empty()) fail("/vertices", "at least one vertex is required");

  auto vertex_at = [&](const json& v, const std::string& where) {
    auto label = as_string(v, where);
    for (std::size_t i = 0; i < out.quiver.vertices.size(); ++i)
      if (out.quiver.vertices[i] == label) return i;
    fail(where, "unknown vertex \"" + label + "\"");
  };
  if (doc.contains("arrows")) {
    const auto& arrows = as_array(doc["arrows"], "/arrows");
    std::set<std::string> names;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
      const std::string at = "/arrows/" + std::to_string(k);
      if (!arrows[k].is_object()) fail(at, "expected an object with \"name\", \"src\", \"tgt\"");
      Arrow a;
      a.name = as_string(require(arrows[k], at, "name"), at + "/name");
      if (!names.insert(a.name).second) fail(at + "/name", "duplicate arrow \"" + a.name + "\"");
      a.source = vertex_at(require(arrows[k], at, "src"), at + "/src");
      a.target = vertex_at(require(arrows[k], at, "tgt"), at + "/tgt");
      out.quiver.arrows.push_back(a);
    }
  }
  if (doc.contains("relations")) {
    const auto& rels = as_array(doc["relations"], "/relations");
    for (std::size_t k = 0; k < rels.size(); ++k) {
      const std::string at = "/relations/" + std::to_string(k);
      if (!rels[k].is_object()) fail(at, "expected an object with \"terms\"");
      out.relations.push_back({parse_terms(require(rels[k], at, "terms"), at + "/terms", out.quiver)});
    }
  }
  if (doc.contains("duality")) {
    if (!doc["duality"].is_object()) fail("/duality", "expected an object mapping arrows to images");
    DualityCertificate cert;
    for (const auto& [arrow, image] : doc["duality"].items()) {
      const std::string at = "/duality/" + arrow;
      try {
        out.quiver.arrow_index(arrow);
      } catch (const InputError&) {
        fail(at, "unknown arrow \"" + arrow + "\"");
      }
      cert[arrow] = parse_terms(image, at, out.quiver);
    }
    out.duality = std::move(cert);
  }
  if (doc.contains("order")) {
    const auto& order = as_array(doc["order"], "/order");
    std::string joined;
    for (std::size_t k = 0; k < order.size(); ++k) joined += (k ? "," : "") + as_string(order[k], "/order/" + std::to_string(k));
    out.order = joined;
  }

  try {
    out.algebra = compile_algebra(out.quiver, out.relations, out.field);
  } catch (const InputError& e) {
    fail("/relations", e.what());
  }
  if (out.duality) out.algebra = with_duality(out.algebra, *out.duality);
  return out;
}

AlgebraDocument load_algebra_document(const std::string& path, std::optional<FieldCtx> field) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra_document(ss.str(), field);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string dump_algebra_document(const AlgebraDocument& doc) {
  json out;
  if (!doc.name.empty()) out["name"] = doc.name;
  out["field"] = doc.field.to_string();
  out["vertices"] = doc.quiver.vertices;
  out["arrows"] = json::array();
  for (const auto& a : doc.quiver.arrows)
    out["arrows"].push_back({{"name", a.name}, {"src", doc.quiver.vertices[a.source]}, {"tgt", doc.quiver.vertices[a.target]}});
  out["relations"] = json::array();
  for (const auto& r : doc.relations) out["relations"].push_back({{"terms", terms_json(r.terms)}});
  if (doc.duality) {
    out["duality"] = json::object();
    for (const auto& [arrow, image] : *doc.duality) out["duality"][arrow] = terms_json(image);
  }
  if (doc.order) {
    json pairs = json::array();
    std::stringstream ss(*doc.order);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) pairs.push_back(item);
    out["order"] = pairs;
  }
  return out.dump(2) + "\n";
}

}  // namespace hwcat::io
