#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gf {

using Q = boost::multiprecision::cpp_rational;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;

std::string to_string(const Q& q);  // "p/q", or "p" when integral
double to_double(const Q& q);

// Solves A x = b for square A. nullopt when singular.
std::optional<QVec> solve(QMat a, QVec b);
int rank(QMat a);

Q dot(const QVec& a, const QVec& b);

// Orthogonal projection of u onto the cone spanned by gens; returns squared distance.
Q cone_distance2(const std::vector<QVec>& gens, const QVec& u);

// Is there phi with phi.z = 0 (z in zero), phi.p > 0 (p in pos), phi.m < 0 (m in neg)?
// Fourier-Motzkin, fine for the handful of vectors a fan check needs.
bool strictly_separable(const std::vector<QVec>& zero, const std::vector<QVec>& pos,
                        const std::vector<QVec>& neg, int dim);

}  // namespace gf
