#pragma once

// Valued polynomials: finite supports in Z^n with one rational valuation per
// exponent (optionally a rational coefficient whose p-adic valuation it is).
// Terms with valuation infinity are never stored.

#include "tropicast/rational.hpp"

namespace trop {

struct Term {
  ZVec exp;
  Rat val;
  std::optional<Rat> coeff;
  bool collision = false;  // valuation came from a min over colliding products
};

struct ValuedPolynomial {
  int n_vars = 0;
  std::optional<long> prime;
  std::vector<Term> terms;  // exponents pairwise distinct

  ZMat support() const;
  QVec valuations() const;
};

// Exponent of p in q; nullopt encodes val(0) = infinity.
std::optional<Rat> padic_valuation(const Rat& q, long p);

// Tropicalize a polynomial given as (exponent, rational coefficient) pairs;
// zero coefficients are dropped, the all-zero polynomial is an error.
ValuedPolynomial tropicalize(const std::vector<std::pair<ZVec, Rat>>& monomials, long p);

// Valuation-only constructor (coefficients unknown / not rational).
ValuedPolynomial valued_from_support(int n_vars, const std::vector<std::pair<ZVec, Rat>>& terms);

// Tropical product: supports add, valuations add, exponent collisions take
// the minimum and are flagged.  Coefficients are not propagated.
ValuedPolynomial trop_mul(const ValuedPolynomial& f, const ValuedPolynomial& g);

// min_a (val(a) + exp(a).w) together with the set of terms attaining it.
std::pair<Rat, std::vector<int>> trop_eval(const ValuedPolynomial& f, const QVec& w);

}  // namespace trop
