#pragma once

#include <span>
#include <vector>

#include "cutoperad/numeric.hpp"
#include "cutoperad/signature.hpp"

namespace cutoperad {

/// A truncated power series with zero constant term: exact rational
/// coefficients c_1..c_N.  The truncation order is always explicit.
class IntSeries {
 public:
  explicit IntSeries(int order) : c_(order + 1, Rat(0)) {}
  static IntSeries x(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& at(int n) const { return c_.at(n); }
  void set(int n, Rat v);

  bool isIdentity() const;  // == x to truncation

 private:
  std::vector<Rat> c_;  // c_[0] stays 0
};

bool operator==(const IntSeries& a, const IntSeries& b);

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries mul(const IntSeries& a, const IntSeries& b);

/// outer(inner), truncated; inner must have zero constant term.
IntSeries composeSeries(const IntSeries& outer, const IntSeries& inner);

/// Compositional inverse: f with f(g(x)) = g(f(x)) = x mod x^{N+1}.
/// Requires g_1 invertible.
IntSeries seriesInverse(const IntSeries& g);

/// Dirichlet coefficients d_1..d_N (coefficient of n^{-s}).
class DirichletCoeffs {
 public:
  explicit DirichletCoeffs(int order) : d_(order + 1, Rat(0)) {}
  static DirichletCoeffs unit(int order);  // (1, 0, 0, ...)

  int order() const { return static_cast<int>(d_.size()) - 1; }
  const Rat& at(int n) const { return d_.at(n); }
  void set(int n, Rat v);

 private:
  std::vector<Rat> d_;  // d_[0] unused
};

bool operator==(const DirichletCoeffs& a, const DirichletCoeffs& b);

/// (ab)_n = sum_{kl=n} a_k b_l.
DirichletCoeffs dirichletProduct(const DirichletCoeffs& a,
                                 const DirichletCoeffs& b);

/// N(n^{-s}) = x^n applied coefficientwise.
IntSeries nTransform(const DirichletCoeffs& d);

/// Dimension of the matrix product at arity n:
///   sum_{kl=n} n!/(k! l!) dimsA(k) dimsB(l),
/// where dims are indexed by arity starting at 1 (dims[0] = arity 1).
Int boxDimension(std::span<const Int> dimsA, std::span<const Int> dimsB, int n);

/// Signed Dirichlet series of the resolution generators:
///   D(s) = prod_k (1 - sum_n a_k(n) n^{-s}),
/// a_k(n) = number of direction-k generators of arity n.
DirichletCoeffs signatureDirichlet(const Signature& sig, int order);

/// Shape counts by series inversion: f = (N(D))^{<-1>}; coefficient n is
/// the number of canonical subdivisions of arity n.
IntSeries shapeSeries(const Signature& sig, int order);

struct EulerRow {
  int arity = 0;
  Rat alternatingSum;  // sum_h (-1)^h dim (H o C)_h(n), divided by n!
  bool pass = false;
};

struct EulerReport {
  bool pass = false;
  bool inverseBothWays = false;  // f(g)=x and g(f)=x
  std::vector<EulerRow> rows;
  std::string failure;
};

/// Euler-characteristic bookkeeping for a signature against an
/// independently computed table of operad dimensions elements(1..N):
/// builds g from the signature, f from the table, and checks both
/// composition identities plus the per-arity alternating sum
/// (computed degree by degree through the matrix-product dimensions).
EulerReport eulerCheck(const Signature& sig, std::span<const Int> elements,
                       int order);

}  // namespace cutoperad
