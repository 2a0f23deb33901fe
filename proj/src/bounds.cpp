#include "spx/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "spx/combinatorics.hpp"

namespace spx {

BoundReport BoundReport::of(std::string name, BigCount v, std::string anchor) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = Kind::Exact;
  r.exact = std::move(v);
  r.anchor = std::move(anchor);
  return r;
}

BoundReport BoundReport::of(std::string name, BigRational v, std::string anchor) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = Kind::Rational;
  r.rational = std::move(v);
  r.anchor = std::move(anchor);
  return r;
}

BoundReport BoundReport::of_log2(std::string name, double v, std::string anchor) {
  BoundReport r;
  r.name = std::move(name);
  r.kind = Kind::Log2;
  r.log2_value = v;
  r.anchor = std::move(anchor);
  return r;
}

std::string BoundReport::value_string() const {
  switch (kind) {
    case Kind::Exact: return to_string(exact);
    case Kind::Rational: return to_string(rational);
    case Kind::Log2: return "log2=" + std::to_string(log2_value);
  }
  return "?";
}

BigCount bollobas_pair_bound(int k, int l) { return binomial(k + l, l); }

NBounds tuza_n_bounds(int k, int l) {
  if (k < 1 || l < k)
    throw std::invalid_argument("tuza_n_bounds: requires 1 <= k <= l");
  NBounds out;
  out.lower = BigRational(binomial(k + l + 1, k + 1), 4);
  BigCount upper = 0;
  for (int i = 1; i <= 2 * k - 2; ++i) upper += binomial(i, i / 2);
  for (int i = 2 * k - 1; i <= k + l - 1; ++i) upper += binomial(i, l);
  out.upper = upper;
  out.anomaly = (k == 1);  // exhaustive search gives n(1,1)=2 > formula value
  return out;
}

SOfK s_of_k(int k) {
  if (k < 1) throw std::invalid_argument("s_of_k: k must be >= 1");
  SOfK out;
  out.S = 0;
  for (int i = 1; i <= 2 * k - 1; ++i) out.S += binomial(i, i / 2);
  out.s = BigRational(out.S, binomial(2 * k, k));
  return out;
}

BigCount lemma_g_bound(int k, int l) {
  return binomial(k + l, l + 1) + binomial(k + l, k + 1);
}

N1Bounds n1_bounds(int k, int l) {
  if (k < 1 || l < k)
    throw std::invalid_argument("n1_bounds: upper bound requires 1 <= k <= l");
  N1Bounds out;
  out.lower = BigCount(k + l) + binomial(k + l, k + 1);
  out.upper = binomial(k + l + 2, k + 1) - binomial(k + l, k) - 2;
  out.crossed = out.lower > out.upper;
  return out;
}

BigCount n2_lower(int k, int l) {
  return BigCount(k + l - 1) + 3 * binomial(k + l - 1, k - 1);
}

FBounds f_bounds(int k) {
  if (k < 2) throw std::invalid_argument("f_bounds: k must be >= 2");
  FBounds out;
  out.eighth = BigRational(binomial(2 * k, k), 8);
  out.lower = BigCount(2 * k - 2) + binomial(2 * k - 2, k - 1) / 2;
  out.majumder_ref = BigRational(3 * binomial(2 * k - 2, k - 1), 2);
  return out;
}

double m_upper_log2(long long n, int k, int g) {
  (void)k;
  if (g < 1) throw std::invalid_argument("m_upper_log2: g must be >= 1");
  if (g > 1020) return std::numeric_limits<double>::infinity();
  return std::ldexp(1.0, g) + log2_big(binomial(n, g));
}

double bdds_m_upper_log2(long long n, int k) {
  const BigCount vertex_count = binomial(n, k);
  const BigCount terms = binomial(2 * k, k) / 2;
  if (terms > 100000)
    throw std::invalid_argument("bdds_m_upper_log2: k too large for exact summation");
  BigCount sum = 0;
  for (BigCount j = 1; j <= terms; ++j)
    sum += binomial_big(vertex_count, j.convert_to<long long>());
  return log2_big(sum);
}

MmaxBounds mmax_bounds(int k, int l) {
  if (k < 1 || l < 1)
    throw std::invalid_argument("mmax_bounds: k and l must be positive");
  MmaxBounds out;
  BigCount num = 1, den = 1;
  for (int i = 0; i < k + l; ++i) num *= k + l;
  for (int i = 0; i < k; ++i) den *= k;
  for (int i = 0; i < l; ++i) den *= l;
  out.tuza = num / den;  // floor
  out.conjecture = 2 * binomial(k + l, k);
  return out;
}

MWindow m_theorem_window(long long n, int k) {
  if (n < 2 || k < 1)
    throw std::invalid_argument("m_theorem_window: requires n >= 2, k >= 1");
  const double central = binomial(2 * k, k).convert_to<double>();
  const double logn = std::log2(static_cast<double>(n));
  return {0.125 * central * logn, 1.1 * central * logn};
}

namespace {

const char* kAsymptotic = "asymptotic reference, not a proven bound at finite k";

void set_params(BoundReport& r, std::optional<int> k, std::optional<int> l,
                std::optional<long long> n) {
  r.k = k;
  r.l = l;
  r.n = n;
}

}  // namespace

std::vector<BoundReport> all_bounds(int k, std::optional<int> l,
                                    std::optional<long long> n,
                                    std::optional<int> g) {
  std::vector<BoundReport> out;
  auto push = [&](BoundReport r, std::optional<int> rl = std::nullopt) {
    set_params(r, k, rl ? rl : l, n);
    out.push_back(std::move(r));
  };

  {
    auto sk = s_of_k(k);
    push(BoundReport::of("S_k", sk.S, "S(k) = sum_{i=1}^{2k-1} C(i, floor(i/2))"));
    auto r = BoundReport::of("s_k", sk.s, "s(k) = S(k)/C(2k,k), tends to 1");
    r.flags.push_back(kAsymptotic);
    push(std::move(r));
  }
  if (k >= 2) {
    auto fb = f_bounds(k);
    push(BoundReport::of("f_strict_lower", fb.eighth, "C(2k,k)/8 < f(k)"));
    push(BoundReport::of("f_lower", fb.lower, "2k-2 + C(2k-2,k-1)/2 <= f(k)"));
    auto r = BoundReport::of("f_majumder_ref", fb.majumder_ref,
                             "f(k) <= (1+o(1)) (3/2) C(2k-2,k-1)");
    r.flags.push_back(kAsymptotic);
    push(std::move(r));
    push(BoundReport::of("n_kk_lower", BigCount(2 * k - 2) + 2 * binomial(2 * k - 2, k - 1),
                         "2k-2 + 2 C(2k-2,k-1) <= n(k,k)"), k);
  }

  if (l) {
    const int ll = *l;
    push(BoundReport::of("bollobas_pair_bound", bollobas_pair_bound(k, ll),
                         "m <= C(k+l, l)"));
    push(BoundReport::of("lemma_g_upper", lemma_g_bound(k, ll),
                         "n(k,l) <= C(k+l,l+1) + C(k+l,k+1)"));
    push(BoundReport::of("n2_lower", n2_lower(k, ll),
                         "k+l-1 + 3 C(k+l-1,k-1) <= n2(k,l)"));
    {
      auto mm = mmax_bounds(k, ll);
      push(BoundReport::of("mmax_tuza_upper", mm.tuza,
                           "m_max(k,l) <= (k+l)^(k+l) / (k^k l^l)"));
      auto r = BoundReport::of("mmax_conjecture", mm.conjecture,
                               "conjectured m_max(k,l) <= 2 C(k+l,k)");
      r.flags.push_back("conjecture, not a proven bound");
      push(std::move(r));
    }
    push(BoundReport::of("n1_lower", BigCount(k + ll) + binomial(k + ll, k + 1),
                         "k+l + C(k+l,k+1) <= n1(k,l)"));
    if (k <= ll) {
      auto nb = tuza_n_bounds(k, ll);
      push(BoundReport::of("n_lower_strict", nb.lower,
                           "C(k+l+1,k+1)/4 < n(k,l)"));
      auto up = BoundReport::of("n_upper", nb.upper,
                                "n(k,l) <= sum C(i,floor(i/2)) + sum C(i,l)");
      if (nb.anomaly)
        up.flags.push_back("k=1 anomaly: exhaustive search exceeds this value");
      push(std::move(up));

      auto n1b = n1_bounds(k, ll);
      auto up1 = BoundReport::of("n1_upper", n1b.upper,
                                 "n1(k,l) <= C(k+l+2,k+1) - C(k+l,k) - 2");
      if (n1b.crossed)
        up1.flags.push_back("k=1 anomaly: formula drops below the n1 lower bound");
      push(std::move(up1));
    }
  }

  if (n) {
    auto r = BoundReport::of_log2("bdds_m_upper", bdds_m_upper_log2(*n, k),
                                  "M(n,k) <= sum_j C(C(n,k), j)");
    push(std::move(r));
    if (g) {
      push(BoundReport::of_log2("m_upper_via_g", m_upper_log2(*n, k, *g),
                                "M(n,k) <= 2^(2^g) C(n,g)"));
    }
    auto w = m_theorem_window(*n, k);
    auto lo = BoundReport::of_log2("m_window_lower", w.log_lower,
                                   "(1/8) C(2k,k) log2 n");
    lo.flags.push_back(kAsymptotic);
    push(std::move(lo));
    auto hi = BoundReport::of_log2("m_window_upper", w.log_upper,
                                   "1.1 C(2k,k) log2 n");
    hi.flags.push_back(kAsymptotic);
    push(std::move(hi));
  }

  return out;
}

}  // namespace spx
