#pragma once
#include <optional>
#include <string>
#include <vector>

#include "dpgit/torus.hpp"

namespace dpgit {

struct DefBlock {
  std::string name;
  std::vector<std::string> coords;
  Support weights;  // one per coordinate
};

struct DefSpace {
  std::string name;
  int torus_rank = 0;
  std::vector<DefBlock> blocks;

  size_t dimension() const;
  Support all_weights() const;
  std::vector<std::string> coordinate_names() const;

  static DefSpace X1T();  // (v1, v2, v3) under (C*)^2
  static DefSpace X1e();  // (a1, a2, b0..b6) under C*
  static DefSpace by_name(const std::string& name);
};

struct DefVerdict {
  StabilityResult result;
  bool tabulated = true;  // false for mixed zero patterns outside the reference table
};

DefVerdict def_polystability(const DefSpace& space, const std::vector<FieldElement>& v);
std::optional<IntVec> destabilizing_1ps(const DefSpace& space, const std::vector<FieldElement>& v);

}  // namespace dpgit
