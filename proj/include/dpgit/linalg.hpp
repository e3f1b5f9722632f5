#pragma once
#include <vector>

#include "dpgit/field.hpp"
#include "dpgit/upoly.hpp"

namespace dpgit {

using Vec = std::vector<FieldElement>;
using Mat = std::vector<Vec>;

Mat identity_matrix(int n);
Mat transpose(const Mat& a);
Mat matmul(const Mat& a, const Mat& b);
Vec matvec(const Mat& a, const Vec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Mat& a, const FieldElement& c);

int rank(Mat a);
FieldElement det(Mat a);
// Basis of the right kernel, in reduced echelon normalization (free variable = 1).
std::vector<Vec> kernel(Mat a);
Mat inverse(Mat a);  // throws MathError when singular
// Characteristic polynomial det(x I - a), monic.
KPoly charpoly(const Mat& a);
bool poly_annihilates(const KPoly& p, const Mat& a);

}  // namespace dpgit
