#include "cutoperad/operad.hpp"

#include <algorithm>
#include <numeric>

namespace cutoperad {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  int n = static_cast<int>(images_.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v])
      throw StructuralError("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::rowsToColumns(int k, int l) {
  std::vector<int> im(k * l);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= l; ++j) im[(i - 1) * l + j - 1] = (j - 1) * k + i;
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 1; i <= size(); ++i) im[images_[i - 1] - 1] = i;
  return Permutation(std::move(im));
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size())
    throw StructuralError("permutation size mismatch in composition");
  std::vector<int> im(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i) im[i - 1] = sigma(tau(i));
  return Permutation(std::move(im));
}

bool operator==(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) return false;
  for (int i = 1; i <= a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

CutOperadElement identityElement() {
  return CutOperadElement{Subdivision::leaf(), {1}};
}

CutOperadElement generatorElement(const Signature& sig, int genId) {
  int m = sig.gen(genId).arity;
  std::vector<SubdivisionPtr> children(m, Subdivision::leaf());
  CutOperadElement e;
  e.shape = Subdivision::cut(sig, genId, std::move(children));
  e.numbering.resize(m);
  std::iota(e.numbering.begin(), e.numbering.end(), 1);
  return e;
}

CutOperadElement generatorElement(const Signature& sig,
                                  const std::string& name) {
  return generatorElement(sig, sig.idOf(name));
}

namespace {

SubdivisionPtr graftRec(const Signature& sig, const SubdivisionPtr& s,
                        int& pos, const std::vector<SubdivisionPtr>& atPos) {
  if (s->isLeaf()) return atPos[pos++];
  std::vector<SubdivisionPtr> cs;
  cs.reserve(s->children().size());
  for (const auto& c : s->children())
    cs.push_back(graftRec(sig, c, pos, atPos));
  return Subdivision::cut(sig, s->generator(), std::move(cs));
}

}  // namespace

CutOperadElement compose(const Signature& sig, const CutOperadElement& outer,
                         std::span<const CutOperadElement> inners) {
  validateNumbering(outer);
  int n = outer.arity();
  if (static_cast<int>(inners.size()) != n)
    throw ArityError("compose: expected " + std::to_string(n) +
                     " inner elements, got " + std::to_string(inners.size()));
  for (const auto& e : inners) validateNumbering(e);

  // block offsets in outer-number order
  std::vector<int> offset(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    offset[i] = offset[i - 1] + inners[i - 1].arity();

  std::vector<SubdivisionPtr> atPos(n);
  for (int p = 0; p < n; ++p) atPos[p] = inners[outer.numbering[p] - 1].shape;
  int pos = 0;
  SubdivisionPtr raw = graftRec(sig, outer.shape, pos, atPos);

  std::vector<int> rawNumbers;
  rawNumbers.reserve(offset[n]);
  for (int p = 0; p < n; ++p) {
    int i = outer.numbering[p];
    for (int q : inners[i - 1].numbering) rawNumbers.push_back(offset[i - 1] + q);
  }
  return canonicalizeLabelled(sig, raw, rawNumbers);
}

CutOperadElement partialCompose(const Signature& sig,
                                const CutOperadElement& outer, int position,
                                const CutOperadElement& inner) {
  int n = outer.arity();
  if (position < 1 || position > n)
    throw ArityError("partial composition index out of range");
  std::vector<CutOperadElement> inners(n, identityElement());
  inners[position - 1] = inner;
  return compose(sig, outer, inners);
}

CutOperadElement act(const CutOperadElement& e, const Permutation& sigma) {
  validateNumbering(e);
  if (sigma.size() != e.arity())
    throw ArityError("permutation size differs from element arity");
  Permutation inv = sigma.inverse();
  CutOperadElement out;
  out.shape = e.shape;
  out.numbering.reserve(e.numbering.size());
  for (int v : e.numbering) out.numbering.push_back(inv(v));
  return out;
}

bool elementsEqual(const CutOperadElement& a, const CutOperadElement& b) {
  return a.numbering == b.numbering && sameShape(a.shape, b.shape);
}

GeomForm substituteGeom(const Signature& sig, const CutOperadElement& outer,
                        std::span<const CutOperadElement> inners) {
  validateNumbering(outer);
  int n = outer.arity();
  if (static_cast<int>(inners.size()) != n)
    throw ArityError("substitute: arity mismatch");
  std::vector<int> offset(n + 1, 0);
  for (int i = 1; i <= n; ++i)
    offset[i] = offset[i - 1] + inners[i - 1].arity();

  GeomForm outerG = toGeom(sig, outer);
  GeomForm out;
  out.d = sig.dims();
  for (const GeomBox& ob : outerG.boxes) {
    const CutOperadElement& inner = inners[ob.index - 1];
    GeomForm innerG = toGeom(sig, inner);
    for (const GeomBox& ib : innerG.boxes) {
      GeomBox nb;
      nb.lo.resize(out.d);
      nb.hi.resize(out.d);
      nb.faceLo.resize(out.d);
      nb.faceHi.resize(out.d);
      for (int k = 0; k < out.d; ++k) {
        Rat w = ob.hi[k] - ob.lo[k];
        nb.lo[k] = ob.lo[k] + ib.lo[k] * w;
        nb.hi[k] = ob.lo[k] + ib.hi[k] * w;
        nb.faceLo[k] = ib.faceLo[k] == kBoundary ? ob.faceLo[k] : ib.faceLo[k];
        nb.faceHi[k] = ib.faceHi[k] == kBoundary ? ob.faceHi[k] : ib.faceHi[k];
      }
      nb.index = offset[ob.index - 1] + ib.index;
      out.boxes.push_back(std::move(nb));
    }
  }
  std::sort(out.boxes.begin(), out.boxes.end(),
            [](const GeomBox& a, const GeomBox& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.hi < b.hi;
            });
  return out;
}

}  // namespace cutoperad
