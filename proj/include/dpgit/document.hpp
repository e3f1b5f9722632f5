#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpgit/lp.hpp"
#include "dpgit/poly.hpp"

namespace dpgit {

// Text format: statements end at ';' or where the next keyword starts; '#' starts a comment.
//   ring P(1,1,2,3) [over Q(i)] vars x,y,z,w
//   poly [name =] expr
//   matrix name = [[e, e, ...], [...], ...]
//   lambda int, int, ...
//   point expr, expr, ...
//   task name
struct Ambient {
  std::vector<long> weights;
  bool gaussian = false;  // over Q(i)
  VarsPtr vars;
  std::string to_string() const;  // "P(1,1,2,3)"
  bool operator==(const Ambient& o) const;
};

struct NamedPoly {
  std::string name;  // may be empty
  MultiPoly poly;
};

struct NamedMatrix {
  std::string name;
  QMat entries;
};

struct InputDocument {
  Ambient ambient;
  std::vector<NamedPoly> polys;
  std::vector<NamedMatrix> matrices;
  std::optional<std::vector<long>> lambda;
  std::optional<std::vector<FieldElement>> point;
  std::optional<std::string> task;

  const MultiPoly* find_poly(const std::string& name) const;
  const NamedMatrix* find_matrix(const std::string& name) const;
  bool operator==(const InputDocument& o) const;
};

InputDocument parse_document(std::string_view text);
std::string print_document(const InputDocument& doc);

}  // namespace dpgit
