#ifndef VISFOL_STRUCTURE_IO_HPP
#define VISFOL_STRUCTURE_IO_HPP

#include <filesystem>
#include <string>

#include "visfol/structure.hpp"

namespace visfol {

// Two accepted input schemas, detected by their top-level keys:
//
// scene graph
//   {"image_id": "img1",
//    "objects": [{"id": "d1", "category": "man", "attributes": ["tall"]}],
//    "relations": [{"subject": "d1", "predicate": "wear", "object": "d2"}]}
//
// structure
//   {"domain": ["d1","d2"],
//    "unary": {"man": ["d1"]},
//    "binary": {"wear": [["d1","d2"]]}}
//
// Schema violations raise SchemaError with a JSON-pointer path.
Structure parse_structure_json(const std::string& text);
Structure load_structure(const std::filesystem::path& path);

SceneGraph parse_scene_graph_json(const std::string& text);

// Writes the structure schema (domain order preserved, keys sorted);
// load_structure(save_structure(s)) == s.
std::string structure_to_json(const Structure& s);
void save_structure(const Structure& s, const std::filesystem::path& path);

}  // namespace visfol

#endif  // VISFOL_STRUCTURE_IO_HPP
