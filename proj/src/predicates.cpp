// Adaptive-precision 2d orientation predicate.
//
// The determinant is first evaluated in plain doubles with a static error
// filter; only inputs that land inside the filter band fall through to
// exact expansion arithmetic (sums of non-overlapping doubles), refined in
// stages so the common near-miss exits early. The expansion identities
// require strict IEEE double semantics: this file must be compiled with
// FP contraction disabled, which the build enforces for the whole library.

#include <cmath>

#include "earmap/geom.hpp"

namespace earmap {
namespace {

constexpr double kEps = 1.1102230246251565e-16;  // 2^-53
constexpr double kResultErrBound = (3.0 + 8.0 * kEps) * kEps;
constexpr double kErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kErrBoundB = (2.0 + 12.0 * kEps) * kEps;
constexpr double kErrBoundC = (9.0 + 64.0 * kEps) * kEps * kEps;

struct Two {
  double lo;
  double hi;
};

// a + b with |a| >= |b|.
inline Two fast_two_sum(double a, double b) {
  const double x = a + b;
  const double bvirt = x - a;
  return {b - bvirt, x};
}

inline Two two_sum(double a, double b) {
  const double x = a + b;
  const double bvirt = x - a;
  const double avirt = x - bvirt;
  const double bround = b - bvirt;
  const double around = a - avirt;
  return {around + bround, x};
}

inline Two two_diff(double a, double b) {
  const double x = a - b;
  const double bvirt = a - x;
  const double avirt = x + bvirt;
  const double bround = bvirt - b;
  const double around = a - avirt;
  return {around + bround, x};
}

// Roundoff of x = fl(a - b) when it is known a priori to be representable.
inline double two_diff_tail(double a, double b, double x) {
  const double bvirt = a - x;
  const double avirt = x + bvirt;
  const double bround = bvirt - b;
  const double around = a - avirt;
  return around + bround;
}

inline Two two_prod(double a, double b) {
  const double x = a * b;
  return {std::fma(a, b, -x), x};
}

// (a1,a0) - (b1,b0) -> x[0..3], increasing magnitude.
inline void two_two_diff(double a1, double a0, double b1, double b0, double x[4]) {
  const Two d0 = two_diff(a0, b0);
  x[0] = d0.lo;
  const Two s0 = two_sum(a1, d0.hi);
  const Two d1 = two_diff(s0.lo, b1);
  x[1] = d1.lo;
  const Two s1 = two_sum(s0.hi, d1.hi);
  x[2] = s1.lo;
  x[3] = s1.hi;
}

// Merges two expansions, dropping zero components. Output h must have room
// for elen + flen doubles.
int fast_expansion_sum_zeroelim(int elen, const double* e, int flen, const double* f, double* h) {
  int eindex = 0;
  int findex = 0;
  int hindex = 0;
  double q;
  if ((f[0] > e[0]) == (f[0] > -e[0])) {
    q = e[eindex++];
  } else {
    q = f[findex++];
  }
  if (eindex < elen && findex < flen) {
    // First merge: |q| is no larger than the next component.
    Two s;
    if ((f[findex] > e[eindex]) == (f[findex] > -e[eindex])) {
      s = fast_two_sum(e[eindex++], q);
    } else {
      s = fast_two_sum(f[findex++], q);
    }
    q = s.hi;
    if (s.lo != 0.0) h[hindex++] = s.lo;
    while (eindex < elen && findex < flen) {
      if ((f[findex] > e[eindex]) == (f[findex] > -e[eindex])) {
        s = two_sum(q, e[eindex++]);
      } else {
        s = two_sum(q, f[findex++]);
      }
      q = s.hi;
      if (s.lo != 0.0) h[hindex++] = s.lo;
    }
  }
  while (eindex < elen) {
    const Two s = two_sum(q, e[eindex++]);
    q = s.hi;
    if (s.lo != 0.0) h[hindex++] = s.lo;
  }
  while (findex < flen) {
    const Two s = two_sum(q, f[findex++]);
    q = s.hi;
    if (s.lo != 0.0) h[hindex++] = s.lo;
  }
  if (q != 0.0 || hindex == 0) h[hindex++] = q;
  return hindex;
}

inline double estimate(int elen, const double* e) {
  double q = e[0];
  for (int i = 1; i < elen; ++i) q += e[i];
  return q;
}

double orient2d_adapt(const Point2& pa, const Point2& pb, const Point2& pc, double detsum) {
  const double acx = pa.x - pc.x;
  const double bcx = pb.x - pc.x;
  const double acy = pa.y - pc.y;
  const double bcy = pb.y - pc.y;

  const Two detleft = two_prod(acx, bcy);
  const Two detright = two_prod(acy, bcx);

  double b[4];
  two_two_diff(detleft.hi, detleft.lo, detright.hi, detright.lo, b);
  double det = estimate(4, b);
  double errbound = kErrBoundB * detsum;
  if (det >= errbound || -det >= errbound) return det;

  const double acxtail = two_diff_tail(pa.x, pc.x, acx);
  const double bcxtail = two_diff_tail(pb.x, pc.x, bcx);
  const double acytail = two_diff_tail(pa.y, pc.y, acy);
  const double bcytail = two_diff_tail(pb.y, pc.y, bcy);

  if (acxtail == 0.0 && acytail == 0.0 && bcxtail == 0.0 && bcytail == 0.0) return det;

  errbound = kErrBoundC * detsum + kResultErrBound * std::fabs(det);
  det += (acx * bcytail + bcy * acxtail) - (acy * bcxtail + bcx * acytail);
  if (det >= errbound || -det >= errbound) return det;

  double u[4];
  Two s = two_prod(acxtail, bcy);
  Two t = two_prod(acytail, bcx);
  two_two_diff(s.hi, s.lo, t.hi, t.lo, u);
  double c1[8];
  const int c1len = fast_expansion_sum_zeroelim(4, b, 4, u, c1);

  s = two_prod(acx, bcytail);
  t = two_prod(acy, bcxtail);
  two_two_diff(s.hi, s.lo, t.hi, t.lo, u);
  double c2[12];
  const int c2len = fast_expansion_sum_zeroelim(c1len, c1, 4, u, c2);

  s = two_prod(acxtail, bcytail);
  t = two_prod(acytail, bcxtail);
  two_two_diff(s.hi, s.lo, t.hi, t.lo, u);
  double d[16];
  const int dlen = fast_expansion_sum_zeroelim(c2len, c2, 4, u, d);

  return d[dlen - 1];
}

}  // namespace

namespace detail {

double orient2d_det(const Point2& pa, const Point2& pb, const Point2& pc) {
  const double detleft = (pa.x - pc.x) * (pb.y - pc.y);
  const double detright = (pa.y - pc.y) * (pb.x - pc.x);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return det;
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return det;
    detsum = -detleft - detright;
  } else {
    return det;
  }

  const double errbound = kErrBoundA * detsum;
  if (det >= errbound || -det >= errbound) return det;

  return orient2d_adapt(pa, pb, pc, detsum);
}

}  // namespace detail

Orientation orient2d(const Point2& a, const Point2& b, const Point2& c) {
  const double det = detail::orient2d_det(a, b, c);
  if (det > 0.0) return Orientation::CCW;
  if (det < 0.0) return Orientation::CW;
  return Orientation::Collinear;
}

}  // namespace earmap
