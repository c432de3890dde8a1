#pragma once

#include "sparsectl/controllability.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sparsectl {

/// Exact fraction for the necessary-side sparsity bound (integer rank sums
/// over window lengths), compared against integer s without float rounding.
struct Rational {
  long long num = 0;
  long long den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  long long ceil() const { return (num + den - 1) / den; }
  bool leq(long long s) const { return num <= s * den; }
};

inline bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
inline bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }

/// Classical output-controllability rank test: rank(C W) = n.
bool check_output_controllable(const LinearSystem& sys, const TolerancePolicy& pol = {});

struct NecessaryCheck {
  bool holds = false;
  bool rank_ok = false;  // rank(C W) = n
  int rank_CW = 0;
  Rational bound;      // max over i of (sum of the first i+1 rank gaps)/(i+1)
  int bound_index = 0; // smallest maximizing i
  int sparsity = 0;
};

/// Necessary side: rank(C W) = n and the averaged rank-gap bound <= s.
NecessaryCheck necessary_conditions(const LinearSystem& sys, int s, const TolerancePolicy& pol = {});

struct SufficientCheck {
  bool holds = false;
  bool rank_ok = false;
  int rank_CW = 0;
  int bound = 0;       // min{m, max rank gap}
  int max_metric = 0;
  int bound_index = 0; // smallest i attaining the max gap
  int sparsity = 0;
};

/// Sufficient side: rank(C W) = n and min{m, max rank gap} <= s.
SufficientCheck sufficient_conditions(const LinearSystem& sys, int s, const TolerancePolicy& pol = {});

struct SparsityInterval {
  int lo = 1;
  int hi = 1;
};

/// Bracket for the minimum sparsity level that guarantees output sparse
/// controllability; both ends clamped to >= 1. Empty when the system is not
/// output controllable.
std::optional<SparsityInterval> minimum_sparsity_interval(const LinearSystem& sys,
                                                          const TolerancePolicy& pol = {});

struct Corollary1Check {
  bool applies = false;   // max rank gap attained at i = 0
  bool rank_ok = false;
  int reduced_bound = 0;  // n - rank(C A W)

  bool reduced_condition(int s) const { return rank_ok && s >= reduced_bound; }
};

/// When the maximum rank gap is the first one, the necessary and sufficient
/// sides coincide and reduce to rank(C W) = n with s >= n - rank(C A W).
Corollary1Check corollary1_check(const LinearSystem& sys, const TolerancePolicy& pol = {});

struct Corollary2Check {
  bool holds = false;
  bool rank_ok = false;
  int bound = 0;         // min{m, N - rank(A)}
  int strict_bound = 0;  // rank(W) - rank(A W), never larger than bound
  bool holds_strict = false;
  int sparsity = 0;
};

/// Cheap sufficient test avoiding the rank profile entirely.
Corollary2Check corollary2_check(const LinearSystem& sys, int s, const TolerancePolicy& pol = {});

struct PbhCheck {
  bool holds = false;
  bool eig_rank_ok = false;  // rank([lambda I - A, B]) = N at every eigenvalue of A
  int rank_A = 0;
  int nullity_bound = 0;     // N - rank(A)
  int sparsity = 0;
};

/// State (not output) s-sparse controllability: eigenvalue PBH test plus
/// N <= rank(A) + s. Non-eigenvalue lambda are skipped since lambda*I - A is
/// then invertible and the pencil has full row rank.
PbhCheck pbh_state_sparse(const LinearSystem& sys, int s, const TolerancePolicy& pol = {});

struct TheoremCCheck {
  bool holds = false;
  bool rank_C_ok = false;    // rank(C) = n
  bool eig_rank_ok = false;  // rank(C [lambda I - A, B]) = n at every eigenvalue of A
  int rank_CA = 0;
  int sparsity = 0;
};

/// Weaker eigenvalue-based necessary test: rank(C [lambda I - A, B]) = n for
/// all complex lambda, plus rank(C A) >= n - s. The all-lambda condition is
/// finitely checkable: at non-eigenvalue lambda the pencil rank equals
/// rank(C), so the rank(C) = n gate covers every lambda outside the spectrum.
TheoremCCheck theoremC_necessary(const LinearSystem& sys, int s, const TolerancePolicy& pol = {});

struct ControllabilityReport {
  std::string name;
  int N = 0;
  int m = 0;
  int n = 0;
  int rank_CW = 0;
  bool output_controllable = false;
  RankProfile profile;
  Rational necessary_bound;
  int necessary_bound_index = 0;
  int sufficient_bound = 0;
  int max_metric = 0;
  std::vector<int> s_list;
  std::vector<bool> necessary_holds;
  std::vector<bool> sufficient_holds;
  std::vector<bool> corollary2_holds;
  std::vector<bool> pbh_state_sparse;
  std::vector<bool> theoremC_necessary;
  std::optional<SparsityInterval> min_sparsity;
  bool corollary1_applies = false;
  int corollary1_reduced_bound = 0;
  int corollary2_bound = 0;
  int corollary2_strict_bound = 0;
  TolerancePolicy tolerance_used;
  std::vector<std::string> notes;
};

/// Evaluates every test for each s in s_list (defaults to 1..m when empty)
/// and asserts the report's internal consistency before returning.
ControllabilityReport full_report(const LinearSystem& sys, std::vector<int> s_list = {},
                                  const TolerancePolicy& pol = {});

}  // namespace sparsectl
