#include "cutoperad/geometry.hpp"

#include <algorithm>
#include <map>

namespace cutoperad {

namespace {

struct BoxOrder {
  bool operator()(const GeomBox& a, const GeomBox& b) const {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  }
};

void realizeRec(const Signature& sig, const SubdivisionPtr& s,
                std::vector<Rat> lo, std::vector<Rat> hi,
                std::vector<int> faceLo, std::vector<int> faceHi,
                const std::vector<int>* leafValues, int& leafPos,
                std::vector<GeomBox>& out) {
  if (s->isLeaf()) {
    int idx = leafValues ? (*leafValues)[leafPos] : leafPos + 1;
    ++leafPos;
    out.push_back(GeomBox{std::move(lo), std::move(hi), std::move(faceLo),
                          std::move(faceHi), idx});
    return;
  }
  int k = s->direction() - 1;
  int gen = s->generator();
  auto children = s->children();
  int m = static_cast<int>(children.size());
  Rat width = (hi[k] - lo[k]) / m;
  for (int j = 0; j < m; ++j) {
    std::vector<Rat> clo = lo, chi = hi;
    clo[k] = lo[k] + width * j;
    chi[k] = lo[k] + width * (j + 1);
    std::vector<int> cfl = faceLo, cfh = faceHi;
    cfl[k] = (j == 0) ? faceLo[k] : gen;
    cfh[k] = (j == m - 1) ? faceHi[k] : gen;
    realizeRec(sig, children[j], std::move(clo), std::move(chi),
               std::move(cfl), std::move(cfh), leafValues, leafPos, out);
  }
}

}  // namespace

GeomForm realizeWithPayload(const Signature& sig, const SubdivisionPtr& s,
                            const std::vector<int>& leafValues) {
  if (static_cast<int>(leafValues.size()) != s->arity())
    throw StructuralError("payload size differs from arity");
  GeomForm g;
  g.d = sig.dims();
  int pos = 0;
  realizeRec(sig, s, std::vector<Rat>(g.d, Rat(0)), std::vector<Rat>(g.d, Rat(1)),
             std::vector<int>(g.d, kBoundary), std::vector<int>(g.d, kBoundary),
             &leafValues, pos, g.boxes);
  std::sort(g.boxes.begin(), g.boxes.end(), BoxOrder{});
  return g;
}

GeomForm realizeShape(const Signature& sig, const SubdivisionPtr& s) {
  GeomForm g;
  g.d = sig.dims();
  int pos = 0;
  realizeRec(sig, s, std::vector<Rat>(g.d, Rat(0)), std::vector<Rat>(g.d, Rat(1)),
             std::vector<int>(g.d, kBoundary), std::vector<int>(g.d, kBoundary),
             nullptr, pos, g.boxes);
  std::sort(g.boxes.begin(), g.boxes.end(), BoxOrder{});
  return g;
}

GeomForm toGeom(const Signature& sig, const LabelledSubdivision& s) {
  validateNumbering(s);
  return realizeWithPayload(sig, s.shape, s.numbering);
}

bool geomEqual(const GeomForm& a, const GeomForm& b) {
  if (a.d != b.d || a.boxes.size() != b.boxes.size()) return false;
  for (size_t i = 0; i < a.boxes.size(); ++i) {
    const GeomBox& x = a.boxes[i];
    const GeomBox& y = b.boxes[i];
    if (x.index != y.index || x.lo != y.lo || x.hi != y.hi ||
        x.faceLo != y.faceLo || x.faceHi != y.faceHi)
      return false;
  }
  return true;
}

static std::string faceName(const Signature& sig, int f) {
  return f == kBoundary ? std::string("@") : sig.gen(f).name;
}

std::string serializeGeom(const Signature& sig, const GeomForm& g) {
  std::string out = "d" + std::to_string(g.d) + "{";
  for (const GeomBox& b : g.boxes) {
    out += "[";
    for (int k = 0; k < g.d; ++k) {
      if (k) out += ",";
      out += ratToString(b.lo[k]) + ":" + ratToString(b.hi[k]);
    }
    out += ";#" + std::to_string(b.index) + ";";
    for (int k = 0; k < g.d; ++k) {
      if (k) out += ",";
      out += faceName(sig, b.faceLo[k]) + "|" + faceName(sig, b.faceHi[k]);
    }
    out += "]";
  }
  out += "}";
  return out;
}

void validateGeom(const Signature& sig, const GeomForm& g) {
  if (g.d != sig.dims()) throw StructuralError("geometry dimension mismatch");
  if (g.boxes.empty()) throw StructuralError("empty geometry");
  Rat volume = 0;
  for (const GeomBox& b : g.boxes) {
    if (static_cast<int>(b.lo.size()) != g.d ||
        static_cast<int>(b.hi.size()) != g.d ||
        static_cast<int>(b.faceLo.size()) != g.d ||
        static_cast<int>(b.faceHi.size()) != g.d)
      throw StructuralError("box with wrong dimension");
    Rat v = 1;
    for (int k = 0; k < g.d; ++k) {
      if (b.lo[k] < 0 || b.hi[k] > 1 || b.lo[k] >= b.hi[k])
        throw StructuralError("box outside unit cube or degenerate");
      v *= b.hi[k] - b.lo[k];
      // boundary faces are exactly the faces at coordinate 0/1
      if ((b.lo[k] == 0) != (b.faceLo[k] == kBoundary))
        throw StructuralError("lower face label inconsistent with boundary");
      if ((b.hi[k] == 1) != (b.faceHi[k] == kBoundary))
        throw StructuralError("upper face label inconsistent with boundary");
    }
    volume += v;
  }
  if (volume != 1) throw StructuralError("boxes do not tile the unit cube");
  for (size_t i = 0; i < g.boxes.size(); ++i)
    for (size_t j = i + 1; j < g.boxes.size(); ++j) {
      const GeomBox& a = g.boxes[i];
      const GeomBox& b = g.boxes[j];
      bool disjoint = false;
      for (int k = 0; k < g.d; ++k)
        if (a.hi[k] <= b.lo[k] || b.hi[k] <= a.lo[k]) disjoint = true;
      if (!disjoint) throw StructuralError("boxes with overlapping interiors");
      if (a.index == b.index) throw StructuralError("duplicate box index");
      // shared positive-measure face pieces must agree on the label
      for (int k = 0; k < g.d; ++k) {
        for (int pass = 0; pass < 2; ++pass) {
          const GeomBox& x = pass ? b : a;
          const GeomBox& y = pass ? a : b;
          if (x.hi[k] != y.lo[k]) continue;
          bool touches = true;
          for (int l = 0; l < g.d; ++l) {
            if (l == k) continue;
            if (x.hi[l] <= y.lo[l] || y.hi[l] <= x.lo[l]) touches = false;
          }
          if (touches && x.faceHi[k] != y.faceLo[k])
            throw StructuralError("face label disagrees across a shared cut");
        }
      }
    }
}

// ---------------------------------------------------------------------------
// Admissibility and canonicalization.
//
// All recursion below works on "regions": axis-aligned sub-boxes of the unit
// cube together with the ids of the boxes they contain.  Validity of regions
// is memoized per top-level call.

namespace {

struct GeomContext {
  const Signature& sig;
  const GeomForm& g;
  std::map<std::vector<Rat>, bool> validMemo;

  std::vector<Rat> regionKey(const std::vector<Rat>& lo,
                             const std::vector<Rat>& hi) const {
    std::vector<Rat> key = lo;
    key.insert(key.end(), hi.begin(), hi.end());
    return key;
  }

  // The m-1 equal-spaced hyperplanes in direction k (0-based) of the region
  // are entirely covered by cuts labelled genId: no box interior crosses
  // them and every face piece on them carries genId.
  bool covered(const std::vector<int>& ids, const std::vector<Rat>& lo,
               const std::vector<Rat>& hi, int k, int genId, int m) const {
    Rat width = (hi[k] - lo[k]) / m;
    for (int id : ids) {
      const GeomBox& b = g.boxes[id];
      for (int j = 1; j < m; ++j) {
        Rat t = lo[k] + width * j;
        if (b.lo[k] < t && t < b.hi[k]) return false;
        if (b.hi[k] == t && b.faceHi[k] != genId) return false;
        if (b.lo[k] == t && b.faceLo[k] != genId) return false;
      }
    }
    return true;
  }

  // Partition the region's boxes into the m slabs; requires covered().
  std::vector<std::vector<int>> slabs(const std::vector<int>& ids,
                                      const std::vector<Rat>& lo,
                                      const std::vector<Rat>& hi, int k,
                                      int m) const {
    Rat width = (hi[k] - lo[k]) / m;
    std::vector<std::vector<int>> parts(m);
    for (int id : ids) {
      const GeomBox& b = g.boxes[id];
      // slab index from the box midpoint; exact arithmetic, no rounding
      Rat rel = (b.lo[k] + b.hi[k]) / 2 - lo[k];
      int j = 0;
      while (j + 1 < m && rel >= width * (j + 1)) ++j;
      parts[j].push_back(id);
    }
    return parts;
  }

  bool valid(const std::vector<int>& ids, const std::vector<Rat>& lo,
             const std::vector<Rat>& hi) {
    if (ids.size() == 1) return true;
    auto key = regionKey(lo, hi);
    auto it = validMemo.find(key);
    if (it != validMemo.end()) return it->second;
    bool ok = false;
    for (int k = 0; k < sig.dims() && !ok; ++k) {
      for (int genId : sig.generators(k + 1)) {
        int m = sig.gen(genId).arity;
        if (!covered(ids, lo, hi, k, genId, m)) continue;
        bool all = true;
        auto parts = slabs(ids, lo, hi, k, m);
        Rat width = (hi[k] - lo[k]) / m;
        for (int j = 0; j < m && all; ++j) {
          if (parts[j].empty()) { all = false; break; }
          std::vector<Rat> slo = lo, shi = hi;
          slo[k] = lo[k] + width * j;
          shi[k] = lo[k] + width * (j + 1);
          if (!valid(parts[j], slo, shi)) all = false;
        }
        if (all) { ok = true; break; }
      }
    }
    validMemo.emplace(std::move(key), ok);
    return ok;
  }

  std::vector<std::pair<int, int>> roots(const std::vector<int>& ids,
                                         const std::vector<Rat>& lo,
                                         const std::vector<Rat>& hi) {
    std::vector<std::pair<int, int>> out;
    if (ids.size() <= 1) return out;
    for (int k = 0; k < sig.dims(); ++k) {
      for (int genId : sig.generators(k + 1)) {
        int m = sig.gen(genId).arity;
        if (!covered(ids, lo, hi, k, genId, m)) continue;
        auto parts = slabs(ids, lo, hi, k, m);
        Rat width = (hi[k] - lo[k]) / m;
        bool all = true;
        for (int j = 0; j < m && all; ++j) {
          if (parts[j].empty()) { all = false; break; }
          std::vector<Rat> slo = lo, shi = hi;
          slo[k] = lo[k] + width * j;
          shi[k] = lo[k] + width * (j + 1);
          if (!valid(parts[j], slo, shi)) all = false;
        }
        if (all) out.emplace_back(k + 1, genId);
      }
    }
    return out;
  }

  SubdivisionPtr canonicalRec(const std::vector<int>& ids,
                              const std::vector<Rat>& lo,
                              const std::vector<Rat>& hi,
                              std::vector<int>& payload) {
    if (ids.size() == 1) {
      payload.push_back(g.boxes[ids[0]].index);
      return Subdivision::leaf();
    }
    auto rs = roots(ids, lo, hi);
    if (rs.empty())
      throw StructuralError("geometry is not a valid subdivision: " +
                            serializeGeom(sig, g));
    for (size_t i = 0; i + 1 < rs.size(); ++i)
      if (rs[i].first == rs[i + 1].first)
        throw DuplicateAdmissibleRoots(
            "two admissible root cuts in direction " +
                std::to_string(rs[i].first) + " (generators '" +
                sig.gen(rs[i].second).name + "', '" +
                sig.gen(rs[i + 1].second).name + "')",
            serializeGeom(sig, g));
    auto [dir, genId] = rs.front();  // minimum direction
    int k = dir - 1;
    int m = sig.gen(genId).arity;
    auto parts = slabs(ids, lo, hi, k, m);
    Rat width = (hi[k] - lo[k]) / m;
    std::vector<SubdivisionPtr> children;
    children.reserve(m);
    for (int j = 0; j < m; ++j) {
      std::vector<Rat> slo = lo, shi = hi;
      slo[k] = lo[k] + width * j;
      shi[k] = lo[k] + width * (j + 1);
      children.push_back(canonicalRec(parts[j], slo, shi, payload));
    }
    return Subdivision::cut(sig, genId, std::move(children));
  }
};

std::vector<int> allIds(const GeomForm& g) {
  std::vector<int> ids(g.boxes.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return ids;
}

}  // namespace

std::vector<std::pair<int, int>> admissibleRoots(const Signature& sig,
                                                 const GeomForm& g) {
  GeomContext ctx{sig, g};
  return ctx.roots(allIds(g), std::vector<Rat>(g.d, Rat(0)),
                   std::vector<Rat>(g.d, Rat(1)));
}

std::vector<std::pair<int, int>> admissibleRoots(const Signature& sig,
                                                 const SubdivisionPtr& s) {
  GeomForm g = realizeShape(sig, s);
  return admissibleRoots(sig, g);
}

CanonicalizedGeom canonicalizeGeom(const Signature& sig, const GeomForm& g) {
  GeomContext ctx{sig, g};
  CanonicalizedGeom out;
  out.leafPayload.reserve(g.boxes.size());
  out.shape = ctx.canonicalRec(allIds(g), std::vector<Rat>(g.d, Rat(0)),
                               std::vector<Rat>(g.d, Rat(1)), out.leafPayload);
  return out;
}

SubdivisionPtr canonicalize(const Signature& sig, const SubdivisionPtr& raw) {
  if (raw->isLeaf()) return raw;
  return canonicalizeGeom(sig, realizeShape(sig, raw)).shape;
}

LabelledSubdivision canonicalizeLabelled(const Signature& sig,
                                         const SubdivisionPtr& raw,
                                         const std::vector<int>& leafNumbers) {
  GeomForm g = realizeWithPayload(sig, raw, leafNumbers);
  CanonicalizedGeom c = canonicalizeGeom(sig, g);
  return LabelledSubdivision{c.shape, std::move(c.leafPayload)};
}

std::vector<LabelledSubdivision> splitAlongRoot(const Signature& sig,
                                                const LabelledSubdivision& s,
                                                int direction, int genId) {
  GeomForm g = realizeWithPayload(sig, s.shape, s.numbering);
  GeomContext ctx{sig, g};
  auto ids = allIds(g);
  std::vector<Rat> lo(g.d, Rat(0)), hi(g.d, Rat(1));
  int k = direction - 1;
  int m = sig.gen(genId).arity;
  if (ids.size() < 2 || !ctx.covered(ids, lo, hi, k, genId, m))
    throw StructuralError("split: root cut is not admissible");
  auto parts = ctx.slabs(ids, lo, hi, k, m);
  Rat width = (hi[k] - lo[k]) / m;
  std::vector<LabelledSubdivision> out;
  out.reserve(m);
  for (int j = 0; j < m; ++j) {
    if (parts[j].empty())
      throw StructuralError("split: empty slab");
    std::vector<Rat> slo = lo, shi = hi;
    slo[k] = lo[k] + width * j;
    shi[k] = lo[k] + width * (j + 1);
    LabelledSubdivision piece;
    piece.shape = ctx.canonicalRec(parts[j], slo, shi, piece.numbering);
    out.push_back(std::move(piece));
  }
  return out;
}

}  // namespace cutoperad
