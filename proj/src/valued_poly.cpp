#include "tropicast/valued_poly.hpp"

#include <algorithm>
#include <map>

namespace trop {

ZMat ValuedPolynomial::support() const {
  ZMat out;
  for (const auto& t : terms) out.push_back(t.exp);
  return out;
}

QVec ValuedPolynomial::valuations() const {
  QVec out;
  for (const auto& t : terms) out.push_back(t.val);
  return out;
}

std::optional<Rat> padic_valuation(const Rat& q, long p) {
  if (p < 2 || mpz_probab_prime_p(Int(p).get_mpz_t(), 30) == 0)
    fail(Err::NotPrime, "padic_valuation: modulus is not prime");
  if (q == 0) return std::nullopt;
  Int pp(p);
  long v = 0;
  Int num = q.get_num();
  while (num % pp == 0) { num /= pp; ++v; }
  Int den = q.get_den();
  while (den % pp == 0) { den /= pp; --v; }
  return Rat(v);
}

ValuedPolynomial tropicalize(const std::vector<std::pair<ZVec, Rat>>& monomials, long p) {
  ValuedPolynomial f;
  if (monomials.empty()) fail(Err::ZeroPolynomial, "tropicalize: zero polynomial");
  f.n_vars = (int)monomials[0].first.size();
  f.prime = p;
  std::map<ZVec, Rat> collect;
  for (const auto& [exp, c] : monomials) {
    auto it = collect.find(exp);
    if (it == collect.end()) collect.emplace(exp, c);
    else it->second += c;
  }
  for (const auto& [exp, c] : collect) {
    if (c == 0) continue;
    Term t;
    t.exp = exp;
    t.val = *padic_valuation(c, p);
    t.coeff = c;
    f.terms.push_back(t);
  }
  if (f.terms.empty()) fail(Err::ZeroPolynomial, "tropicalize: zero polynomial");
  return f;
}

ValuedPolynomial valued_from_support(int n_vars, const std::vector<std::pair<ZVec, Rat>>& terms) {
  ValuedPolynomial f;
  f.n_vars = n_vars;
  std::map<ZVec, Rat> seen;
  for (const auto& [exp, v] : terms) {
    if ((int)exp.size() != n_vars) fail(Err::DimMismatch, "exponent arity mismatch");
    if (seen.count(exp)) fail(Err::Internal, "duplicate exponent in support");
    seen.emplace(exp, v);
  }
  for (const auto& [exp, v] : seen) f.terms.push_back({exp, v, std::nullopt, false});
  if (f.terms.empty()) fail(Err::ZeroPolynomial, "empty support");
  return f;
}

ValuedPolynomial trop_mul(const ValuedPolynomial& f, const ValuedPolynomial& g) {
  if (f.n_vars != g.n_vars) fail(Err::DimMismatch, "trop_mul: variable count mismatch");
  std::map<ZVec, std::pair<Rat, int>> collect;  // exp -> (min val, hit count)
  for (const auto& a : f.terms) {
    for (const auto& b : g.terms) {
      ZVec e = zvec_add(a.exp, b.exp);
      Rat v = a.val + b.val;
      auto it = collect.find(e);
      if (it == collect.end()) collect.emplace(e, std::make_pair(v, 1));
      else {
        it->second.first = std::min(it->second.first, v);
        it->second.second++;
      }
    }
  }
  ValuedPolynomial h;
  h.n_vars = f.n_vars;
  for (const auto& [exp, vc] : collect)
    h.terms.push_back({exp, vc.first, std::nullopt, vc.second > 1});
  return h;
}

std::pair<Rat, std::vector<int>> trop_eval(const ValuedPolynomial& f, const QVec& w) {
  Rat best;
  std::vector<int> arg;
  for (size_t i = 0; i < f.terms.size(); ++i) {
    Rat v = f.terms[i].val + dot_zq(f.terms[i].exp, w);
    if (arg.empty() || v < best) {
      best = v;
      arg.clear();
    }
    if (v == best) arg.push_back((int)i);
  }
  return {best, arg};
}

}  // namespace trop
