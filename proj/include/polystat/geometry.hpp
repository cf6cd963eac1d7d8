#pragma once

#include <string>

#include "rational.hpp"

namespace polystat {

struct Vec3 {
  Rat x, y, z;

  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(const Rat& s) { x *= s; y *= s; z *= s; return *this; }

  friend Vec3 operator+(Vec3 a, const Vec3& b) { a += b; return a; }
  friend Vec3 operator-(Vec3 a, const Vec3& b) { a -= b; return a; }
  friend Vec3 operator-(const Vec3& a) { return Vec3{-a.x, -a.y, -a.z}; }
  friend Vec3 operator*(const Rat& s, Vec3 a) { a *= s; return a; }
  friend Vec3 operator*(Vec3 a, const Rat& s) { a *= s; return a; }
  friend bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
};

inline Rat dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rat norm2(const Vec3& a) { return dot(a, a); }

// det of the 3x3 matrix with rows u, v, w.
inline Rat det3(const Vec3& u, const Vec3& v, const Vec3& w) {
  return dot(u, cross(v, w));
}

// Sign of det[b-a, c-a, d-a]: +1 if d sees triangle abc counterclockwise.
inline int orientation(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return det3(b - a, c - a, d - a).sign();
}

// Angles are never measured; they are classified by the sign of a dot
// product. Acute <=> positive, Right <=> zero, Obtuse <=> negative.
enum class AngleClass { Acute, Right, Obtuse };

// Arc length class on the unit sphere, same sign convention.
enum class ArcClass { Short, Quarter, Long };

inline AngleClass angle_class_from_sign(int s) {
  return s > 0 ? AngleClass::Acute : (s == 0 ? AngleClass::Right : AngleClass::Obtuse);
}

inline ArcClass arc_class_from_sign(int s) {
  return s > 0 ? ArcClass::Short : (s == 0 ? ArcClass::Quarter : ArcClass::Long);
}

inline const char* to_string(AngleClass c) {
  switch (c) {
    case AngleClass::Acute: return "Acute";
    case AngleClass::Right: return "Right";
    case AngleClass::Obtuse: return "Obtuse";
  }
  return "?";
}

inline const char* to_string(ArcClass c) {
  switch (c) {
    case ArcClass::Short: return "Short";
    case ArcClass::Quarter: return "Quarter";
    case ArcClass::Long: return "Long";
  }
  return "?";
}

// Class of the angle at `apex` spanned by p and q.
inline AngleClass angle_sign(const Vec3& apex, const Vec3& p, const Vec3& q) {
  Vec3 u = p - apex;
  Vec3 w = q - apex;
  if (u.is_zero() || w.is_zero())
    fail(Errc::degenerate_input, "angle with coincident apex and endpoint");
  return angle_class_from_sign(dot(u, w).sign());
}

// Oriented plane: x lies on it iff dot(normal, x) == offset. The halfspace
// dot(normal, x) <= offset is "below" (inside, for outward face normals).
struct Plane {
  Vec3 normal;
  Rat offset;

  Rat eval(const Vec3& p) const { return dot(normal, p) - offset; }
};

inline Plane plane_through(const Vec3& a, const Vec3& b, const Vec3& c) {
  Vec3 n = cross(b - a, c - a);
  if (n.is_zero()) fail(Errc::degenerate_input, "plane through collinear points");
  return Plane{n, dot(n, a)};
}

// Plane containing the line ab and perpendicular to `base`.
inline Plane plane_perpendicular_along(const Vec3& a, const Vec3& b, const Plane& base) {
  Vec3 n = cross(b - a, base.normal);
  if (n.is_zero())
    fail(Errc::degenerate_input, "perpendicular plane along a degenerate line");
  return Plane{n, dot(n, a)};
}

struct LinePlaneCut {
  Vec3 point;
  Rat t;  // point == a + t * (b - a)
};

inline LinePlaneCut intersect_line_plane(const Vec3& a, const Vec3& b, const Plane& pl) {
  Vec3 d = b - a;
  Rat denom = dot(pl.normal, d);
  if (denom.is_zero())
    fail(Errc::parallel_line, "line is parallel to the plane");
  Rat t = (pl.offset - dot(pl.normal, a)) / denom;
  return LinePlaneCut{a + t * d, t};
}

inline Vec3 project_point_to_plane(const Vec3& o, const Plane& pl) {
  Rat n2 = norm2(pl.normal);
  if (n2.is_zero()) fail(Errc::degenerate_input, "plane with zero normal");
  Rat t = (pl.offset - dot(pl.normal, o)) / n2;
  return o + t * pl.normal;
}

struct LineFoot {
  Vec3 foot;
  Rat t;  // foot == a + t * (b - a)
};

inline LineFoot project_point_to_line(const Vec3& o, const Vec3& a, const Vec3& b) {
  Vec3 d = b - a;
  Rat d2 = norm2(d);
  if (d2.is_zero()) fail(Errc::degenerate_input, "projection onto a degenerate line");
  Rat t = dot(o - a, d) / d2;
  return LineFoot{a + t * d, t};
}

// Squared distance from o to its orthogonal projection onto `pl`.
inline Rat point_plane_distance2(const Vec3& o, const Plane& pl) {
  Rat e = pl.eval(o);
  return e * e / norm2(pl.normal);
}

// Squared distance from o to the line through a and b.
inline Rat point_line_distance2(const Vec3& o, const Vec3& a, const Vec3& b) {
  LineFoot f = project_point_to_line(o, a, b);
  return norm2(o - f.foot);
}

}  // namespace polystat
