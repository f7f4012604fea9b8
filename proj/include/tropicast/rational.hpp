#pragma once

// Exact rational scalars and small vector helpers used throughout the
// geometry kernel.  All coordinates are mpq_class (always canonical:
// reduced, positive denominator); lattice data is mpz_class.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using ZVec = std::vector<Int>;
using QMat = std::vector<QVec>;
using ZMat = std::vector<ZVec>;

enum class Err {
  EmptyInput,
  DimMismatch,
  ZeroDirection,
  NotPrime,
  ZeroPolynomial,
  EmptyHypersurface,
  PointNotOnComplex,
  NotProper,
  TieError,
  EmptySlice,
  MixedFiberNotCertified,
  NotAFacet,
  RankError,
  DegenerateProjection,
  OverlapDegenerate,
  NotACaterpillar,
  ConstructionFailed,
  NotPlanar,
  Unsupported,
  Internal,
};

class TropError : public std::runtime_error {
 public:
  Err code;
  TropError(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] void fail(Err c, const std::string& msg);
const char* err_name(Err c);

// Canonical rational from a numerator/denominator pair (mpq_class's own
// two-argument constructor skips canonicalization).
inline Rat frac(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// "a/b" or "a"; throws on malformed input or zero denominator.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& q);

QVec to_q(const ZVec& v);
// Requires every entry integral.
ZVec to_z(const QVec& v);

bool lex_less(const QVec& a, const QVec& b);
bool lex_less_z(const ZVec& a, const ZVec& b);

QVec vec_add(const QVec& a, const QVec& b);
QVec vec_sub(const QVec& a, const QVec& b);
QVec vec_scale(const QVec& a, const Rat& s);
Rat dot(const QVec& a, const QVec& b);
Rat dot_zq(const ZVec& a, const QVec& b);
Int dot_z(const ZVec& a, const ZVec& b);
bool is_zero(const QVec& a);
bool is_zero_z(const ZVec& a);

ZVec zvec_add(const ZVec& a, const ZVec& b);
ZVec zvec_sub(const ZVec& a, const ZVec& b);
ZVec zvec_neg(const ZVec& a);

}  // namespace trop
