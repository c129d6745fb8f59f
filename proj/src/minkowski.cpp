#include "fano/minkowski.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fano {

std::optional<int> classify_a_triangle(const std::vector<Vec2>& verts) {
  std::vector<Vec2> v = verts;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() == 2) {
    return lattice_length(v[0], v[1]) == 1 ? std::optional<int>(-1)
                                           : std::nullopt;
  }
  if (v.size() != 3) return std::nullopt;
  Int area2 = std::abs(cross(v[1] - v[0], v[2] - v[0]));
  if (area2 == 0) return std::nullopt;
  std::array<Int, 3> len = {lattice_length(v[0], v[1]),
                            lattice_length(v[1], v[2]),
                            lattice_length(v[0], v[2])};
  std::sort(len.begin(), len.end());
  Int m = len[2];
  if (len[0] != 1 || len[1] != 1) return std::nullopt;
  // A_{m-1} iff no interior points: Pick gives area2 = m exactly then
  if (area2 != m) return std::nullopt;
  return static_cast<int>(m - 1);
}

namespace {

struct Shape {
  int kind;                     // -1 segment, n >= 0 triangle
  std::vector<Int> counts;      // per directed edge of F
  std::vector<Vec2> placement;  // anchored at the origin
};

// All A-triangle shapes whose edge directions occur among F's.
std::vector<Shape> candidate_shapes(const LatticePolygon& f) {
  int s = f.size();
  std::vector<Vec2> dir(s);
  std::vector<Int> len(s);
  for (int t = 0; t < s; ++t) {
    dir[t] = f.edge_dir(t);
    len[t] = f.edge_len(t);
  }
  std::vector<Shape> out;
  // A_{-1}: antipodal direction pairs
  for (int t1 = 0; t1 < s; ++t1)
    for (int t2 = t1 + 1; t2 < s; ++t2) {
      if (dir[t2] != Vec2{-dir[t1].x, -dir[t1].y}) continue;
      Shape sh;
      sh.kind = -1;
      sh.counts.assign(s, 0);
      sh.counts[t1] = sh.counts[t2] = 1;
      sh.placement = {{0, 0}, dir[t1]};
      out.push_back(std::move(sh));
    }
  // A_n: direction triples with a positive integer dependency a*d1+b*d2+c*d3=0
  for (int t1 = 0; t1 < s; ++t1)
    for (int t2 = t1 + 1; t2 < s; ++t2)
      for (int t3 = t2 + 1; t3 < s; ++t3) {
        Int a = cross(dir[t2], dir[t3]);
        Int b = cross(dir[t3], dir[t1]);
        Int c = cross(dir[t1], dir[t2]);
        if (a == 0 || b == 0 || c == 0) continue;
        if ((a > 0) != (b > 0) || (a > 0) != (c > 0)) continue;
        if (a < 0) { a = -a; b = -b; c = -c; }
        Int g = igcd(igcd(a, b), c);
        a /= g; b /= g; c /= g;
        // an A-triangle has edge lengths {1,1,m}; only scale 1 can work
        int ones = (a == 1) + (b == 1) + (c == 1);
        if (ones < 2) continue;
        if (a > len[t1] || b > len[t2] || c > len[t3]) continue;
        Vec2 p0{0, 0};
        Vec2 p1 = p0 + a * dir[t1];
        Vec2 p2 = p1 + b * dir[t2];
        if (p2 + c * dir[t3] != p0)
          throw invariant_error("candidate_shapes: closure");
        auto cls = classify_a_triangle({p0, p1, p2});
        if (!cls) continue;
        Shape sh;
        sh.kind = *cls;
        sh.counts.assign(s, 0);
        sh.counts[t1] = a;
        sh.counts[t2] = b;
        sh.counts[t3] = c;
        sh.placement = {p0, p1, p2};
        out.push_back(std::move(sh));
      }
  return out;
}

}  // namespace

LatticePolygon minkowski_sum(const std::vector<std::vector<Vec2>>& polys) {
  std::vector<Vec2> acc = {{0, 0}};
  for (const auto& p : polys) {
    std::vector<Vec2> next;
    for (auto u : acc)
      for (auto v : p) next.push_back(u + v);
    acc = hull2_allow_degenerate(next);
  }
  if (acc.size() < 3) throw input_error("minkowski_sum: degenerate sum");
  return convex_hull2(acc);
}

bool sums_to(const AdmissibleDecomposition& d, const LatticePolygon& f) {
  std::vector<std::vector<Vec2>> polys;
  for (const auto& s : d.summands) polys.push_back(s.verts);
  LatticePolygon sum = minkowski_sum(polys);
  if (sum.size() != f.size()) return false;
  Vec2 shift = f.verts[0] - sum.verts[0];
  for (int i = 0; i < f.size(); ++i)
    if (sum.verts[i] + shift != f.verts[i]) return false;
  return true;
}

std::vector<AdmissibleDecomposition> enumerate_admissible_decompositions(
    const LatticePolygon& f) {
  int s = f.size();
  if (s == 2) {
    // degenerate segment target: the unique split into unit segments
    AdmissibleDecomposition d;
    Vec2 dir = primitive(f.verts[1] - f.verts[0]);
    Int len = lattice_length(f.verts[0], f.verts[1]);
    for (Int i = 0; i < len; ++i) {
      ATriangle t;
      t.kind = -1;
      t.verts = {{0, 0}, dir};
      t.edge_counts = {1, 1};
      d.summands.push_back(std::move(t));
    }
    return {d};
  }
  std::vector<Int> rem(s);
  for (int t = 0; t < s; ++t) rem[t] = f.edge_len(t);
  auto shapes = candidate_shapes(f);

  std::vector<AdmissibleDecomposition> out;
  std::vector<int> chosen;  // shape indices, non-decreasing
  auto emit = [&]() {
    AdmissibleDecomposition d;
    for (int idx : chosen) {
      ATriangle t;
      t.kind = shapes[idx].kind;
      t.verts = shapes[idx].placement;
      t.edge_counts = shapes[idx].counts;
      d.summands.push_back(std::move(t));
    }
    if (!sums_to(d, f))
      throw invariant_error("decomposition does not re-sum to the target");
    // normalize the placement so the summands sum to F exactly
    std::vector<std::vector<Vec2>> polys;
    for (const auto& t : d.summands) polys.push_back(t.verts);
    Vec2 shift = f.verts[0] - minkowski_sum(polys).verts[0];
    for (auto& v : d.summands[0].verts) v = v + shift;
    out.push_back(std::move(d));
  };
  auto all_zero = [&]() {
    for (Int v : rem)
      if (v != 0) return false;
    return true;
  };
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (all_zero()) {
      emit();
      return;
    }
    if (idx >= shapes.size()) return;
    // max multiplicity of this shape given the remaining edge budget
    Int mmax = -1;
    for (int t = 0; t < s; ++t)
      if (shapes[idx].counts[t] > 0) {
        Int q = rem[t] / shapes[idx].counts[t];
        mmax = mmax < 0 ? q : std::min(mmax, q);
      }
    for (Int mult = mmax; mult >= 0; --mult) {
      for (int t = 0; t < s; ++t) rem[t] -= mult * shapes[idx].counts[t];
      bool ok = true;
      for (int t = 0; t < s && ok; ++t) ok = rem[t] >= 0;
      if (ok) {
        for (Int m = 0; m < mult; ++m) chosen.push_back(static_cast<int>(idx));
        rec(idx + 1);
        for (Int m = 0; m < mult; ++m) chosen.pop_back();
      }
      for (int t = 0; t < s; ++t) rem[t] += mult * shapes[idx].counts[t];
    }
  };
  rec(0);
  return out;
}

std::vector<Int> edge_face_profile(const AdmissibleDecomposition& d, int t) {
  std::vector<Int> prof;
  for (const auto& su : d.summands) prof.push_back(su.edge_counts[t]);
  return prof;
}

}  // namespace fano
