#pragma once
#include <optional>
#include <string>

#include "dpgit/document.hpp"
#include "dpgit/germ.hpp"
#include "dpgit/singular.hpp"
#include "dpgit/types.hpp"

namespace dpgit {

// What a document describes once its ambient and polynomials are recognized.
enum class ModelKind { Cubic, Pencil, DoubleCover, PlaneCurve, BinaryForm, SexticPair, ExceptionalPair };
std::string to_string(ModelKind k);

struct SurfaceModel {
  ModelKind kind = ModelKind::Cubic;
  MultiPoly form;  // cubic, plane curve, binary form or double-cover branch
  QuadricPencil pencil;
  BaseSpace base = BaseSpace::P2;
  MultiPoly f4, f6;  // SexticPair: z^3 + f4 z + f6; ExceptionalPair: g4, g6
  int degree = 0;    // del Pezzo degree for surfaces, form degree otherwise
};

SurfaceModel recognize(const InputDocument& doc);

// w^2 = branch from a weighted hypersurface whose top variable has half its degree.
// Variables of the result are the remaining three, sorted by weight.
std::pair<BaseSpace, MultiPoly> double_cover_branch(const MultiPoly& p, const std::vector<long>& weights);

// Branch of a degree-one double cover recast for the classifiers on P(1,1,2):
// either (f4, f6) with the z^3 term normalized away, or (g4, g6) with z^2 (x^2 + y^2).
struct DegreeOneNormalForm {
  bool sextic = true;
  MultiPoly a, b;  // (f4, f6) or (g4, g6), binary forms in x, y
};
DegreeOneNormalForm degree_one_normal_form(const MultiPoly& branch);

SurfaceProfile model_profile(const SurfaceModel& m, const TruncationPolicy& policy);

struct StabilityReport {
  StabilityResult result;
  std::string classifier;
};
StabilityReport model_stability(const SurfaceModel& m, const SurfaceProfile* profile, const TruncationPolicy& policy);

}  // namespace dpgit
