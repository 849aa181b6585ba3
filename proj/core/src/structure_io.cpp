#include "visfol/structure_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "visfol/errors.hpp"

namespace visfol {

namespace {

using nlohmann::json;

const json& member(const json& obj, const std::string& key,
                   const std::string& path) {
  if (!obj.is_object())
    throw SchemaError("expected an object", path.empty() ? "/" : path);
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError("missing key", path + "/" + key);
  return *it;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError("expected a string", path);
  return v.get<std::string>();
}

const json& as_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError("expected an array", path);
  return v;
}

SceneGraph scene_graph_from_json(const json& j) {
  SceneGraph g;
  if (j.contains("image_id")) g.image_id = as_string(j["image_id"], "/image_id");
  const json& objects = as_array(member(j, "objects", ""), "/objects");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    std::string path = "/objects/" + std::to_string(i);
    SceneObject o;
    o.id = as_string(member(objects[i], "id", path), path + "/id");
    o.category =
        as_string(member(objects[i], "category", path), path + "/category");
    if (objects[i].contains("attributes")) {
      const json& attrs = as_array(objects[i]["attributes"], path + "/attributes");
      for (std::size_t k = 0; k < attrs.size(); ++k)
        o.attributes.push_back(
            as_string(attrs[k], path + "/attributes/" + std::to_string(k)));
    }
    g.objects.push_back(std::move(o));
  }
  if (j.contains("relations")) {
    const json& relations = as_array(j["relations"], "/relations");
    for (std::size_t i = 0; i < relations.size(); ++i) {
      std::string path = "/relations/" + std::to_string(i);
      SceneRelation r;
      r.subject = as_string(member(relations[i], "subject", path), path + "/subject");
      r.predicate =
          as_string(member(relations[i], "predicate", path), path + "/predicate");
      r.object = as_string(member(relations[i], "object", path), path + "/object");
      g.relations.push_back(std::move(r));
    }
  }
  return g;
}

Structure structure_from_json(const json& j) {
  Structure s;
  if (j.contains("image_id")) s.set_image_id(as_string(j["image_id"], "/image_id"));
  const json& domain = as_array(member(j, "domain", ""), "/domain");
  for (std::size_t i = 0; i < domain.size(); ++i) {
    std::string path = "/domain/" + std::to_string(i);
    try {
      s.add_entity(as_string(domain[i], path));
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      throw SchemaError(e.what(), path);
    }
  }
  if (j.contains("unary")) {
    const json& unary = j["unary"];
    if (!unary.is_object()) throw SchemaError("expected an object", "/unary");
    for (const auto& [pred, ents] : unary.items()) {
      std::string path = "/unary/" + pred;
      const json& arr = as_array(ents, path);
      try {
        s.declare_unary(pred);
      } catch (const Error& e) {
        throw SchemaError(e.what(), path);
      }
      for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string epath = path + "/" + std::to_string(i);
        try {
          s.add_unary(pred, as_string(arr[i], epath));
        } catch (const SchemaError&) {
          throw;
        } catch (const Error& e) {
          throw SchemaError(e.what(), epath);
        }
      }
    }
  }
  if (j.contains("binary")) {
    const json& binary = j["binary"];
    if (!binary.is_object()) throw SchemaError("expected an object", "/binary");
    for (const auto& [pred, pairs] : binary.items()) {
      std::string path = "/binary/" + pred;
      const json& arr = as_array(pairs, path);
      try {
        s.declare_binary(pred);
      } catch (const Error& e) {
        throw SchemaError(e.what(), path);
      }
      for (std::size_t i = 0; i < arr.size(); ++i) {
        std::string ppath = path + "/" + std::to_string(i);
        const json& pair = as_array(arr[i], ppath);
        if (pair.size() != 2)
          throw SchemaError("expected a [subject, object] pair", ppath);
        try {
          s.add_binary(pred, as_string(pair[0], ppath + "/0"),
                       as_string(pair[1], ppath + "/1"));
        } catch (const SchemaError&) {
          throw;
        } catch (const Error& e) {
          throw SchemaError(e.what(), ppath);
        }
      }
    }
  }
  return s;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(e.what(), "/");
  }
}

}  // namespace

Structure parse_structure_json(const std::string& text) {
  json j = parse_json(text);
  if (j.is_object() && j.contains("domain")) return structure_from_json(j);
  if (j.is_object() && j.contains("objects")) {
    SceneGraph g = scene_graph_from_json(j);
    try {
      return scene_graph_to_structure(g);
    } catch (const Error& e) {
      throw SchemaError(e.what(), "/objects");
    }
  }
  throw SchemaError("expected a 'domain' or 'objects' key", "/");
}

SceneGraph parse_scene_graph_json(const std::string& text) {
  return scene_graph_from_json(parse_json(text));
}

Structure load_structure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_structure_json(buf.str());
  } catch (const SchemaError& e) {
    throw SchemaError(std::string(e.what()) + " in " + path.string(),
                      e.pointer());
  }
}

std::string structure_to_json(const Structure& s) {
  json j;
  if (!s.image_id().empty()) j["image_id"] = s.image_id();
  j["domain"] = s.domain();
  json unary = json::object();
  for (const auto& [pred, ents] : s.unary())
    unary[pred] = std::vector<std::string>(ents.begin(), ents.end());
  j["unary"] = unary;
  json binary = json::object();
  for (const auto& [pred, pairs] : s.binary()) {
    json arr = json::array();
    for (const auto& [subj, obj] : pairs)
      arr.push_back(json::array({subj, obj}));
    binary[pred] = arr;
  }
  j["binary"] = binary;
  return j.dump(2) + "\n";
}

void save_structure(const Structure& s, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << structure_to_json(s);
}

}  // namespace visfol
