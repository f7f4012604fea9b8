#include "tropicast/rational.hpp"

namespace trop {

void fail(Err c, const std::string& msg) { throw TropError(c, msg); }

const char* err_name(Err c) {
  switch (c) {
    case Err::EmptyInput: return "EmptyInput";
    case Err::DimMismatch: return "DimMismatch";
    case Err::ZeroDirection: return "ZeroDirection";
    case Err::NotPrime: return "NotPrime";
    case Err::ZeroPolynomial: return "ZeroPolynomial";
    case Err::EmptyHypersurface: return "EmptyHypersurface";
    case Err::PointNotOnComplex: return "PointNotOnComplex";
    case Err::NotProper: return "NotProper";
    case Err::TieError: return "TieError";
    case Err::EmptySlice: return "EmptySlice";
    case Err::MixedFiberNotCertified: return "MixedFiberNotCertified";
    case Err::NotAFacet: return "NotAFacet";
    case Err::RankError: return "RankError";
    case Err::DegenerateProjection: return "DegenerateProjection";
    case Err::OverlapDegenerate: return "OverlapDegenerate";
    case Err::NotACaterpillar: return "NotACaterpillar";
    case Err::ConstructionFailed: return "ConstructionFailed";
    case Err::NotPlanar: return "NotPlanar";
    case Err::Unsupported: return "Unsupported";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) fail(Err::EmptyInput, "empty rational literal");
  for (char ch : s) {
    if (!(ch == '-' || ch == '+' || ch == '/' || (ch >= '0' && ch <= '9')))
      fail(Err::Internal, "malformed rational literal: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Err::Internal, "malformed rational literal: " + s);
  if (q.get_den() == 0) fail(Err::Internal, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

QVec to_q(const ZVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

ZVec to_z(const QVec& v) {
  ZVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) fail(Err::Internal, "expected integral coordinate");
    r[i] = v[i].get_num();
  }
  return r;
}

bool lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

bool lex_less_z(const ZVec& a, const ZVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

QVec vec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVec vec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVec vec_scale(const QVec& a, const Rat& s) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot_zq(const ZVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

Int dot_z(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

bool is_zero_z(const ZVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

ZVec zvec_add(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ZVec zvec_sub(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ZVec zvec_neg(const ZVec& a) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

}  // namespace trop
