#pragma once

#include <string>

#include "crease/mesh.hpp"

namespace crease {

// Plain v/f records, 1-based indices, %.9g coordinates.  Output is a pure
// function of the positions so reruns are byte-identical.
void write_obj(const std::string& path, const std::vector<Vec3>& X,
               const std::vector<std::array<int, 3>>& F);

struct ObjData {
  std::vector<Vec3> X;
  std::vector<std::array<int, 3>> F;
};
// Reads v/f records; ignores normals, textures and groups.  Throws
// std::runtime_error on unreadable files or out-of-range indices.
ObjData read_obj(const std::string& path);

}  // namespace crease
