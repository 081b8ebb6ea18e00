#include "cutoperad/series.hpp"

#include <algorithm>

#include "cutoperad/errors.hpp"

namespace cutoperad {

IntSeries IntSeries::x(int order) {
  IntSeries s(order);
  if (order >= 1) s.set(1, 1);
  return s;
}

void IntSeries::set(int n, Rat v) {
  if (n < 1 || n > order())
    throw StructuralError("series index out of range");
  c_[n] = std::move(v);
}

bool IntSeries::isIdentity() const { return *this == IntSeries::x(order()); }

bool operator==(const IntSeries& a, const IntSeries& b) {
  if (a.order() != b.order()) return false;
  for (int n = 1; n <= a.order(); ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
  if (a.order() != b.order()) throw StructuralError("series order mismatch");
  IntSeries r(a.order());
  for (int n = 1; n <= a.order(); ++n) r.set(n, a.at(n) + b.at(n));
  return r;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  if (a.order() != b.order()) throw StructuralError("series order mismatch");
  int N = a.order();
  IntSeries r(N);
  for (int i = 1; i < N; ++i) {
    if (a.at(i) == 0) continue;
    for (int j = 1; i + j <= N; ++j) {
      if (b.at(j) == 0) continue;
      r.set(i + j, r.at(i + j) + a.at(i) * b.at(j));
    }
  }
  return r;
}

IntSeries composeSeries(const IntSeries& outer, const IntSeries& inner) {
  if (outer.order() != inner.order())
    throw StructuralError("series order mismatch");
  int N = outer.order();
  IntSeries result(N);
  IntSeries power = inner;  // inner^m
  for (int m = 1; m <= N; ++m) {
    if (m > 1) power = mul(power, inner);
    if (outer.at(m) == 0) continue;
    for (int n = m; n <= N; ++n)
      result.set(n, result.at(n) + outer.at(m) * power.at(n));
  }
  return result;
}

IntSeries seriesInverse(const IntSeries& g) {
  int N = g.order();
  if (N < 1 || g.at(1) == 0)
    throw StructuralError("series inversion needs an invertible linear term");
  // Solve g(f) = x coefficient by coefficient: the x^n coefficient of g(f)
  // is g_1 f_n plus terms in f_1..f_{n-1}.
  IntSeries f(N);
  f.set(1, Rat(1) / g.at(1));
  std::vector<IntSeries> powers;  // powers[m-1] = f^m, updated as f grows
  for (int n = 2; n <= N; ++n) {
    IntSeries fn(N);
    for (int i = 1; i < n; ++i) fn.set(i, f.at(i));
    // coefficient of x^n in sum_{m>=2} g_m fn^m  (fn misses f_n, which only
    // contributes through the linear term)
    Rat acc = 0;
    IntSeries power = fn;
    for (int m = 2; m <= n; ++m) {
      power = mul(power, fn);
      if (g.at(m) != 0) acc += g.at(m) * power.at(n);
    }
    f.set(n, -acc / g.at(1));
  }
  return f;
}

DirichletCoeffs DirichletCoeffs::unit(int order) {
  DirichletCoeffs d(order);
  if (order >= 1) d.set(1, 1);
  return d;
}

void DirichletCoeffs::set(int n, Rat v) {
  if (n < 1 || n > order())
    throw StructuralError("Dirichlet index out of range");
  d_[n] = std::move(v);
}

bool operator==(const DirichletCoeffs& a, const DirichletCoeffs& b) {
  if (a.order() != b.order()) return false;
  for (int n = 1; n <= a.order(); ++n)
    if (a.at(n) != b.at(n)) return false;
  return true;
}

DirichletCoeffs dirichletProduct(const DirichletCoeffs& a,
                                 const DirichletCoeffs& b) {
  if (a.order() != b.order())
    throw StructuralError("Dirichlet order mismatch");
  int N = a.order();
  DirichletCoeffs r(N);
  for (int k = 1; k <= N; ++k) {
    if (a.at(k) == 0) continue;
    for (int l = 1; k * l <= N; ++l) {
      if (b.at(l) == 0) continue;
      r.set(k * l, r.at(k * l) + a.at(k) * b.at(l));
    }
  }
  return r;
}

IntSeries nTransform(const DirichletCoeffs& d) {
  IntSeries s(d.order());
  for (int n = 1; n <= d.order(); ++n) s.set(n, d.at(n));
  return s;
}

Int boxDimension(std::span<const Int> dimsA, std::span<const Int> dimsB,
                 int n) {
  if (n < 1) throw StructuralError("boxDimension: arity must be >= 1");
  Int total = 0;
  for (int k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    int l = n / k;
    if (k > static_cast<int>(dimsA.size()) ||
        l > static_cast<int>(dimsB.size()))
      continue;
    const Int& da = dimsA[k - 1];
    const Int& db = dimsB[l - 1];
    if (da == 0 || db == 0) continue;
    // number of orthogonal partition pairs with |pi|=k, |tau|=l is n!/(k!l!)
    total += factorial(n) / (factorial(k) * factorial(l)) * da * db;
  }
  return total;
}

DirichletCoeffs signatureDirichlet(const Signature& sig, int order) {
  DirichletCoeffs d = DirichletCoeffs::unit(order);
  for (int k = 1; k <= sig.dims(); ++k) {
    DirichletCoeffs factor = DirichletCoeffs::unit(order);
    for (int n = 2; n <= order; ++n) {
      int a = sig.generatorsOfArity(k, n);
      if (a != 0) factor.set(n, Rat(-a));
    }
    d = dirichletProduct(d, factor);
  }
  return d;
}

IntSeries shapeSeries(const Signature& sig, int order) {
  return seriesInverse(nTransform(signatureDirichlet(sig, order)));
}

EulerReport eulerCheck(const Signature& sig, std::span<const Int> elements,
                       int order) {
  EulerReport report;
  if (static_cast<int>(elements.size()) < order)
    throw StructuralError("eulerCheck: elements table shorter than order");

  // f from the supplied dimension table; f_n = elements(n)/n! must be an
  // integral shape count, which is itself part of the check.
  IntSeries f(order);
  for (int n = 1; n <= order; ++n) {
    Rat fn = Rat(elements[n - 1]) / Rat(factorial(n));
    if (boost::multiprecision::denominator(fn) != 1) {
      report.failure = "elements(" + std::to_string(n) +
                       ") is not divisible by n!";
      return report;
    }
    f.set(n, fn);
  }

  IntSeries g = nTransform(signatureDirichlet(sig, order));
  report.inverseBothWays =
      composeSeries(g, f).isIdentity() && composeSeries(f, g).isIdentity();

  // Alternating sum per arity, degree by degree: the degree-h part of the
  // generator collection is the sum of the matrix products of the X_k over
  // h-element direction subsets; composing its exponential dimension series
  // with f gives dim (H o C)_h(n) / n!.
  int d = sig.dims();
  std::vector<DirichletCoeffs> perDirection;
  for (int k = 1; k <= d; ++k) {
    DirichletCoeffs xk(order);
    for (int n = 2; n <= order; ++n) {
      int a = sig.generatorsOfArity(k, n);
      if (a != 0) xk.set(n, Rat(a));
    }
    perDirection.push_back(std::move(xk));
  }
  std::vector<DirichletCoeffs> byDegree(d + 1, DirichletCoeffs(order));
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    DirichletCoeffs prod = DirichletCoeffs::unit(order);
    int h = 0;
    for (int k = 0; k < d; ++k)
      if (mask & (1u << k)) {
        prod = dirichletProduct(prod, perDirection[k]);
        ++h;
      }
    for (int n = 1; n <= order; ++n)
      byDegree[h].set(n, byDegree[h].at(n) + prod.at(n));
  }
  IntSeries alternating(order);
  for (int h = 0; h <= d; ++h) {
    IntSeries composed = composeSeries(nTransform(byDegree[h]), f);
    for (int n = 1; n <= order; ++n) {
      Rat v = composed.at(n);
      if (h % 2 == 1) v = -v;
      alternating.set(n, alternating.at(n) + v);
    }
  }

  report.pass = report.inverseBothWays;
  for (int n = 1; n <= order; ++n) {
    EulerRow row;
    row.arity = n;
    row.alternatingSum = alternating.at(n);
    row.pass = (row.alternatingSum == (n == 1 ? Rat(1) : Rat(0)));
    if (!row.pass) {
      report.pass = false;
      if (report.failure.empty())
        report.failure = "alternating sum at arity " + std::to_string(n) +
                         " is " + ratToString(row.alternatingSum);
    }
    report.rows.push_back(std::move(row));
  }
  if (!report.inverseBothWays && report.failure.empty())
    report.failure = "g and f are not mutually inverse";
  return report;
}

}  // namespace cutoperad
