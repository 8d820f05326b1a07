#pragma once

#include <string>
#include <vector>

#include "nlsup/sc_hull.hpp"
#include "nlsup/set_ops.hpp"
#include "nlsup/simple_function.hpp"

namespace nlsup::oscillation {

using functional::SimpleFunction;

// Oscillation target: a simple function whose values lie on the segment
// [alpha, beta]; lambdas[i] solves v_i = l*alpha + (1-l)*beta per piece.
struct OscillationSpec {
  setcore::Point alpha;
  setcore::Point beta;
  SimpleFunction target;
  std::vector<double> lambdas;
  double tol = kDefaultTol;
};
OscillationSpec make_spec(const setcore::Point& alpha,
                          const setcore::Point& beta,
                          const SimpleFunction& target,
                          double tol = kDefaultTol);

// The j-th element of the oscillating sequence: on each target piece, the
// jx-periodic two-value pattern taking alpha on the first lambda_i fraction
// of every period and beta on the rest. Values are exact copies of alpha and
// beta; period breakpoints are intersected with the piece exactly.
SimpleFunction build_sequence(const OscillationSpec& spec, int j);

struct PairingEntry {
  std::string phi;
  double err = 0.0;
};
struct YmEntry {
  std::size_t piece = 0;
  double tv = 0.0;  // total variation distance to (lambda_i, 1 - lambda_i)
};
struct JReport {
  int j = 0;
  std::size_t violations = 0;  // value pairs outside {alpha,beta}^2
  std::vector<PairingEntry> pairings;
  std::vector<YmEntry> ym;
};
struct OscillationReport {
  std::vector<JReport> per_j;
};

// Weak* convergence audit: exact pairings of u_j - u against indicators of
// (0, k/16), k = 1..15, and the monomials 1, x, x^2, plus per-piece
// two-atom empirical weights.
OscillationReport weak_star_report(const OscillationSpec& spec,
                                   const std::vector<int>& j_list);

struct EmpiricalMeasure {
  std::vector<setcore::Point> atoms;
  std::vector<double> weights;  // normalized to sum 1 over (a, b)
};
// Measure-weighted value histogram of u over the window (a, b).
EmpiricalMeasure empirical_young_measure(const SimpleFunction& u, double a,
                                         double b,
                                         double tol = kDefaultTol);

struct ApproxResult {
  bool ok = false;
  SimpleFunction approx;
  double sup_error = 0.0;
  int boxes_used = 0;
  std::string message;
};
// Piecewise-constant approximation with error below 1/j: samples of u on a
// uniform partition of (0,1) are bucketed into value boxes of diameter
// under 1/j, and one representative per box is chosen so that all
// representative pairs (and self-pairs) lie in E. Fails with a report when
// the sampled function is not E-conforming.
ApproxResult simple_approximation(const std::vector<setcore::Point>& samples,
                                  const setcore::SetHandle& e, int j,
                                  double tol = kDefaultTol);

struct ClosureWitness {
  bool feasible = false;
  setcore::PairPoint base;  // generator square of hull(hat K) holding u
  bool pairs_in_K = true;   // every u_j value pair lies in K itself
  OscillationReport report;
  std::string message;
};
// End-to-end witness that hull-conforming targets are weak* limits of
// K-conforming oscillations: picks a generator square of hull(hat K)
// containing the values of u, oscillates between its endpoints, audits all
// value pairs against K, and reports the pairing decay. Scalar sets only.
ClosureWitness closure_witness(const setcore::FinitePairSet& k,
                               const SimpleFunction& u,
                               const std::vector<int>& j_list);

}  // namespace nlsup::oscillation
