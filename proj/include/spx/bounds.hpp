#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spx/bigint.hpp"

namespace spx {

/// A named, exactly evaluated formula value. Exact values carry no
/// rounding; astronomically large bounds are reported on a log2 scale
/// and tagged as such.
struct BoundReport {
  std::string name;
  std::optional<int> k, l;
  std::optional<long long> n;
  enum class Kind { Exact, Rational, Log2 } kind = Kind::Exact;
  BigCount exact;
  BigRational rational;
  double log2_value = 0.0;
  std::string anchor;               // formula provenance, self-documenting output
  std::vector<std::string> flags;   // e.g. "asymptotic reference", anomaly caveats

  static BoundReport of(std::string name, BigCount v, std::string anchor);
  static BoundReport of(std::string name, BigRational v, std::string anchor);
  static BoundReport of_log2(std::string name, double v, std::string anchor);

  [[nodiscard]] std::string value_string() const;
};

/// C(k+l, l), the pair-count cap for cross and skew systems.
BigCount bollobas_pair_bound(int k, int l);

struct NBounds {
  BigRational lower;
  BigCount upper;
  bool anomaly = false;  // k = 1: the formula undercuts the true n(k,l)
};

/// Quarter-binomial lower and double-sum upper bound on n(k,l); requires
/// k <= l. At k = 1 the upper formula is below the brute-force value, so
/// the result carries a caveat flag.
NBounds tuza_n_bounds(int k, int l);

struct SOfK {
  BigCount S;
  BigRational s;
};

/// S(k) = sum_{i=1}^{2k-1} C(i, floor(i/2)) and s(k) = S(k)/C(2k,k).
SOfK s_of_k(int k);

/// C(k+l, l+1) + C(k+l, k+1), an n(k,l) upper bound.
BigCount lemma_g_bound(int k, int l);

struct N1Bounds {
  BigCount lower;
  BigCount upper;
  bool crossed = false;  // lower > upper (k = 1 implicit-domain issue)
};

/// Lower k+l+C(k+l,k+1); upper C(k+l+2,k+1) - C(k+l,k) - 2 (needs k <= l).
N1Bounds n1_bounds(int k, int l);

/// k+l-1+3*C(k+l-1,k-1), a lower bound on n2(k,l).
BigCount n2_lower(int k, int l);

struct FBounds {
  BigRational eighth;       // C(2k,k)/8, strict lower reference
  BigCount lower;           // 2k-2 + C(2k-2,k-1)/2
  BigRational majumder_ref; // (3/2) C(2k-2,k-1), asymptotic reference only
};

FBounds f_bounds(int k);

/// log2 of 2^(2^g) * C(n,g) = 2^g + log2 C(n,g); g >= 1. Returns +inf
/// when 2^g overflows the float exponent.
double m_upper_log2(long long n, int k, int g);

/// log2 of the exact sum over j = 1 .. C(2k,k)/2 of C(C(n,k), j).
double bdds_m_upper_log2(long long n, int k);

struct MmaxBounds {
  BigCount tuza;        // floor((k+l)^(k+l) / (k^k l^l))
  BigCount conjecture;  // 2 C(k+l, k)
};

MmaxBounds mmax_bounds(int k, int l);

struct MWindow {
  double log_lower;  // (1/8)  * C(2k,k) * log2 n
  double log_upper;  // 1.1    * C(2k,k) * log2 n
};

/// Asymptotic window endpoints for log2 M(n,k); reference values only.
MWindow m_theorem_window(long long n, int k);

/// Every applicable report for the given parameters, as the CLI emits them.
std::vector<BoundReport> all_bounds(int k, std::optional<int> l,
                                    std::optional<long long> n,
                                    std::optional<int> g = std::nullopt);

}  // namespace spx
