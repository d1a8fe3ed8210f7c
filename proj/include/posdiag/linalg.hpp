#pragma once

#include <optional>
#include <vector>

#include "posdiag/rational.hpp"

namespace posdiag::linalg {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>; // row major

Mat identity(std::size_t n);

/// In-place reduced row echelon form; returns pivot column per pivot row.
std::vector<std::size_t> rref(Mat& m);

std::size_t rank(Mat m);

Rational det(Mat m);

/// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& m);

/// Basis of the right nullspace of m (vectors of length #cols).
std::vector<Vec> nullspace(const Mat& m);

/// One solution x of m x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

Vec mat_vec(const Mat& m, const Vec& v);

Rational dot(const Vec& a, const Vec& b);

/// Scales an integer-able rational vector to primitive integer form
/// (clears denominators, divides by content, keeps orientation).
Vec primitive(const Vec& v);

} // namespace posdiag::linalg
