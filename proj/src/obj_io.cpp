#include "crease/obj_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crease {

void write_obj(const std::string& path, const std::vector<Vec3>& X,
               const std::vector<std::array<int, 3>>& F) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& p : X) std::fprintf(fp, "v %.9g %.9g %.9g\n", p.x(), p.y(), p.z());
  for (const auto& f : F) std::fprintf(fp, "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
  std::fclose(fp);
}

ObjData read_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  ObjData d;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "v") {
      Vec3 p;
      ss >> p.x() >> p.y() >> p.z();
      d.X.push_back(p);
    } else if (tag == "f") {
      std::array<int, 3> f{};
      for (int k = 0; k < 3; ++k) {
        std::string tok;
        ss >> tok;
        f[k] = std::stoi(tok.substr(0, tok.find('/'))) - 1;  // 1-based, slash forms allowed
        if (f[k] < 0) throw std::runtime_error("bad face index in " + path);
      }
      d.F.push_back(f);
    }
  }
  for (const auto& f : d.F)
    for (int k = 0; k < 3; ++k)
      if (f[k] >= static_cast<int>(d.X.size())) throw std::runtime_error("face index out of range in " + path);
  return d;
}

}  // namespace crease
