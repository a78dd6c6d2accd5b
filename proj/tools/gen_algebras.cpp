// Writes the bundled algebra files: s8.json (s = n + a) and s7_alpha0.json (s_H at alpha = 0).

#include <cstdio>
#include <string>

#include "solvgeom/solvgeom.h"

namespace {

int save(sg_algebra* algebra, const std::string& path) {
  const sg_status st = sg_algebra_save(algebra, path.c_str());
  sg_algebra_free(algebra);
  if (st != SG_OK) {
    std::fprintf(stderr, "gen_algebras: %s: %s\n", path.c_str(), sg_last_error());
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: gen_algebras <output-dir>\n");
    return 2;
  }
  const std::string dir = argv[1];
  sg_algebra* s8 = nullptr;
  sg_algebra* s7 = nullptr;
  if (sg_algebra_create_solvable(&s8) != SG_OK || sg_algebra_create_hypersurface(0.0, &s7) != SG_OK) {
    std::fprintf(stderr, "gen_algebras: %s\n", sg_last_error());
    return 1;
  }
  return save(s8, dir + "/s8.json") | save(s7, dir + "/s7_alpha0.json");
}
