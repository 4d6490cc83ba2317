#pragma once

#include <map>
#include <string>

#include "antisym/spectra.hpp"

namespace antisym {

/// One machine-checked inequality or identity. satisfied <=> slack >= -tolerance.
/// Inequality reports use slack = lhs - rhs; identity reports use
/// slack = -|lhs - rhs|.
struct BoundReport {
  std::string bound_name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool satisfied = false;
  std::string input_digest;
  std::map<std::string, double> details;
};

BoundReport make_inequality_report(std::string name, double lhs, double rhs,
                                   double tolerance, std::string input_digest,
                                   std::map<std::string, double> details = {});
BoundReport make_identity_report(std::string name, double lhs, double rhs,
                                 double tolerance, std::string input_digest,
                                 std::map<std::string, double> details = {});

/// Tangent lower bound on the entropy summand: for lambda, x > 0,
///   -lambda log2 lambda >= (log2 e) * ((1 - ln x) lambda - lambda^2 / x),
/// with equality exactly at x = lambda. Returns the right-hand side.
/// Summed over a spectrum and maximized over x (optimum x = I_2) this yields
/// S(rho) >= -log2 I_2(rho).
double furuta_rhs(double lambda, double x);

/// S(rho) >= -log2 I_2(rho), tolerance 1e-9 on the slack.
BoundReport entropy_purity_bound(const DensityMatrix& rho);

/// I_2(rho_A) <= 1/2^n for the reduced state of the pure state with amplitude
/// tensor a. lhs = 2^-n, rhs = I_2, tolerance 1e-10.
BoundReport purity_bound_check(const AmplitudeTensor& a);

/// Nonnegative defect in the purity bound, by brute force over swap subsets:
///   defect = 2^-(2n+1) * sum_{T subset of slots} sum_{P,P'}
///            |a_P a_P' - a_Q a_Q'|^2,
/// where (Q, Q') exchange the slots in T between P and P'. Satisfies
/// I_2 + defect = 2^-n. Guarded to n <= 3.
double i2_defect(const AmplitudeTensor& a);

/// E(psi) >= n. The report's details record the proof chain
/// E >= -log2 I_2 >= n link by link.
BoundReport antisym_entropy_check(const AmplitudeTensor& a);

/// Reference lower bound log2(d/(d-1)) for the d-level antisymmetric space,
/// d >= 2. For d = 3 this is log2(3/2) ~= 0.585.
double shimono_lower_bound(int d);

}  // namespace antisym
