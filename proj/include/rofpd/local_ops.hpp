#pragma once

#include <cmath>
#include <stdexcept>

// Element-local algebra of the regularized TV linearization: the smoothed
// norm |x|_beta, the Newton matrix H(r), its closed-form inverse, and the
// lagged-diffusivity scalar counterpart. All pure functions.

namespace rofpd {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
};

// Symmetric 2x2 matrix, a21 = a12 implied.
struct SymMat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a22 = 0.0;

  Vec2 apply(Vec2 v) const {
    return {a11 * v.x + a12 * v.y, a12 * v.x + a22 * v.y};
  }
  static SymMat2 identity() { return {1.0, 0.0, 1.0}; }
  static SymMat2 scaled_identity(double s) { return {s, 0.0, s}; }
};

inline constexpr double kMinBeta = 1e-14;

inline void check_beta(double beta) {
  if (!(beta >= kMinBeta))
    throw std::invalid_argument("regularization parameter beta must be >= 1e-14");
}

// sqrt(|x|^2 + beta); always >= sqrt(beta).
inline double beta_norm(Vec2 v, double beta) {
  check_beta(beta);
  return std::sqrt(v.x * v.x + v.y * v.y + beta);
}

// H(r) = (1/|r|_b)(I - r r^T / |r|_b^2). Symmetric positive definite with
// eigenvalues in [beta/|r|_b^3, 1/|r|_b].
inline SymMat2 h_matrix(Vec2 r, double beta) {
  const double nb = beta_norm(r, beta);
  const double s = 1.0 / nb;
  const double c = s / (nb * nb);
  return {s - c * r.x * r.x, -c * r.x * r.y, s - c * r.y * r.y};
}

// Sherman-Morrison closed form: H(r)^{-1} = |r|_b (I + r r^T / beta).
inline SymMat2 h_matrix_inverse(Vec2 r, double beta) {
  const double nb = beta_norm(r, beta);
  const double c = nb / beta;
  return {nb + c * r.x * r.x, c * r.x * r.y, nb + c * r.y * r.y};
}

// Picard scalar: 1/|r|_b, in (0, 1/sqrt(beta)].
inline double h_hat(Vec2 r, double beta) { return 1.0 / beta_norm(r, beta); }

}  // namespace rofpd
