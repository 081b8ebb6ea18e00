#include "cutoperad/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace cutoperad {

namespace {

std::vector<int> gridDims(const Signature& sig,
                          const std::vector<BlackEntry>& black) {
  std::vector<int> dims;
  dims.reserve(black.size());
  for (const auto& b : black) dims.push_back(sig.gen(b.genId).arity);
  return dims;
}

int gridSize(const std::vector<int>& dims) {
  int total = 1;
  for (int d : dims) total *= d;
  return total;
}

// Offsets of each cell's leaf block inside the global numbering.
std::vector<int> cellOffsets(const ChainBasisElement& e) {
  std::vector<int> off(e.cells.size() + 1, 0);
  for (std::size_t c = 0; c < e.cells.size(); ++c)
    off[c + 1] = off[c] + e.cells[c]->arity();
  return off;
}

std::vector<int> decode(int linear, const std::vector<int>& dims) {
  std::vector<int> coord(dims.size());
  for (int j = static_cast<int>(dims.size()) - 1; j >= 0; --j) {
    coord[j] = linear % dims[j];
    linear /= dims[j];
  }
  return coord;
}

int encode(const std::vector<int>& coord, const std::vector<int>& dims) {
  int linear = 0;
  for (std::size_t j = 0; j < dims.size(); ++j)
    linear = linear * dims[j] + coord[j];
  return linear;
}

}  // namespace

std::string chainKey(const Signature& sig, const ChainBasisElement& e) {
  std::string key = "[";
  for (const auto& b : e.black) {
    key += std::to_string(b.direction) + ":" + sig.gen(b.genId).name + ",";
  }
  key += "|";
  for (const auto& c : e.cells) {
    key += serializeShape(sig, c);
    key += ";";
  }
  key += "|";
  for (int v : e.numbering) key += std::to_string(v) + ",";
  key += "]";
  return key;
}

void validateChainElement(const Signature& sig, const ChainBasisElement& e) {
  for (std::size_t j = 0; j < e.black.size(); ++j) {
    const auto& b = e.black[j];
    if (sig.gen(b.genId).direction != b.direction)
      throw StructuralError("black entry direction mismatch");
    if (j > 0 && e.black[j - 1].direction >= b.direction)
      throw StructuralError("black directions must strictly increase");
  }
  if (static_cast<int>(e.cells.size()) != gridSize(gridDims(sig, e.black)))
    throw StructuralError("cell count differs from the black grid size");
  int leaves = 0;
  for (const auto& c : e.cells) {
    if (!c) throw StructuralError("null cell");
    leaves += c->arity();
  }
  if (leaves != e.arity())
    throw StructuralError("numbering size differs from total leaf count");
  std::vector<char> seen(leaves + 1, 0);
  for (int v : e.numbering) {
    if (v < 1 || v > leaves || seen[v])
      throw StructuralError("chain numbering is not a bijection");
    seen[v] = 1;
  }
}

ChainVector combine(const Signature& sig, ChainVector terms) {
  std::map<std::string, ChainTerm> byKey;
  for (auto& t : terms) {
    std::string key = chainKey(sig, t.elem);
    auto it = byKey.find(key);
    if (it == byKey.end())
      byKey.emplace(std::move(key), std::move(t));
    else
      it->second.coeff += t.coeff;
  }
  ChainVector out;
  for (auto& [key, t] : byKey)
    if (t.coeff != 0) out.push_back(std::move(t));
  return out;
}

ChainVector addChains(const Signature& sig, const ChainVector& a,
                      const ChainVector& b) {
  ChainVector all = a;
  all.insert(all.end(), b.begin(), b.end());
  return combine(sig, std::move(all));
}

ChainVector scaleChain(const Rat& c, ChainVector v) {
  if (c == 0) return {};
  for (auto& t : v) t.coeff *= c;
  return v;
}

bool chainsEqual(const Signature& sig, const ChainVector& a,
                 const ChainVector& b) {
  ChainVector ca = combine(sig, a);
  ChainVector cb = combine(sig, b);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].coeff != cb[i].coeff) return false;
    if (chainKey(sig, ca[i].elem) != chainKey(sig, cb[i].elem)) return false;
  }
  return true;
}

std::vector<ChainBasisElement> chainBasis(const Signature& sig, int arity,
                                          int degree, ShapeEnumerator& shapes,
                                          std::size_t maxElements) {
  if (arity < 1) throw StructuralError("arity must be >= 1");
  if (degree < 0 || degree > sig.dims()) return {};

  std::vector<ChainBasisElement> out;

  // choose black data: `degree` strictly increasing directions, a generator
  // in each
  std::vector<BlackEntry> black;
  auto chooseBlack = [&](auto&& self, int fromDir) -> void {
    if (static_cast<int>(black.size()) == degree) {
      std::vector<int> dims = gridDims(sig, black);
      int cells = gridSize(dims);
      if (cells > arity) return;

      // compositions of `arity` into `cells` positive parts
      std::vector<int> parts(cells);
      auto chooseParts = [&](auto&& selfp, int pos, int rest) -> void {
        if (pos == cells - 1) {
          parts[pos] = rest;
          // all assignments of canonical shapes to the cells
          std::vector<std::size_t> idx(cells, 0), sizes(cells);
          for (int c = 0; c < cells; ++c) {
            sizes[c] = shapes.shapes(parts[c]).size();
            if (sizes[c] == 0) return;
          }
          for (;;) {
            std::vector<SubdivisionPtr> cellShapes(cells);
            for (int c = 0; c < cells; ++c)
              cellShapes[c] = shapes.shapes(parts[c])[idx[c]];
            // all numberings, lexicographic
            std::vector<int> perm(arity);
            for (int i = 0; i < arity; ++i) perm[i] = i + 1;
            do {
              if (out.size() >= maxElements)
                throw BudgetError("chain basis exceeds " +
                                  std::to_string(maxElements) + " elements");
              out.push_back(ChainBasisElement{black, cellShapes, perm});
            } while (std::next_permutation(perm.begin(), perm.end()));
            int c = cells - 1;
            while (c >= 0 && ++idx[c] == sizes[c]) idx[c--] = 0;
            if (c < 0) break;
          }
          return;
        }
        for (int v = 1; rest - v >= cells - 1 - pos; ++v) {
          parts[pos] = v;
          selfp(selfp, pos + 1, rest - v);
        }
      };
      if (arity >= cells) chooseParts(chooseParts, 0, arity);
      return;
    }
    for (int k = fromDir; k <= sig.dims(); ++k) {
      if (sig.dims() - k < degree - static_cast<int>(black.size()) - 1)
        break;
      for (int genId : sig.generators(k)) {
        black.push_back(BlackEntry{k, genId});
        self(self, k + 1);
        black.pop_back();
      }
    }
  };
  chooseBlack(chooseBlack, 1);
  return out;
}

ChainVector differential(const Signature& sig, const ChainBasisElement& e) {
  const int s = e.degree();
  if (s == 0) return {};
  std::vector<int> dims = gridDims(sig, e.black);
  std::vector<int> offsets = cellOffsets(e);

  ChainVector out;
  for (int p = 0; p < s; ++p) {
    ChainBasisElement w;
    w.black = e.black;
    w.black.erase(w.black.begin() + p);
    std::vector<int> newDims = dims;
    newDims.erase(newDims.begin() + p);
    int newCells = gridSize(newDims);

    w.cells.resize(newCells);
    for (int linear = 0; linear < newCells; ++linear) {
      std::vector<int> coord = decode(linear, newDims);
      std::vector<SubdivisionPtr> merged(dims[p]);
      std::vector<int> payload;
      std::vector<int> oldCoord = coord;
      oldCoord.insert(oldCoord.begin() + p, 0);
      for (int j = 0; j < dims[p]; ++j) {
        oldCoord[p] = j;
        int oldLinear = encode(oldCoord, dims);
        merged[j] = e.cells[oldLinear];
        for (int q = offsets[oldLinear]; q < offsets[oldLinear + 1]; ++q)
          payload.push_back(e.numbering[q]);
      }
      SubdivisionPtr raw =
          Subdivision::cut(sig, e.black[p].genId, std::move(merged));
      LabelledSubdivision c = canonicalizeLabelled(sig, raw, payload);
      w.cells[linear] = c.shape;
      w.numbering.insert(w.numbering.end(), c.numbering.begin(),
                         c.numbering.end());
    }
    out.push_back(ChainTerm{p % 2 == 0 ? Rat(1) : Rat(-1), std::move(w)});
  }
  return combine(sig, std::move(out));
}

std::vector<std::pair<int, int>> cutThroughData(const Signature& sig,
                                                const ChainBasisElement& e) {
  // admissible roots of every cell, intersected
  std::uint64_t common = ~std::uint64_t(0);
  for (const auto& cell : e.cells) {
    std::uint64_t mask = 0;
    for (auto [dir, genId] : admissibleRoots(sig, cell))
      mask |= std::uint64_t(1) << genId;
    common &= mask;
    if (common == 0) break;
  }
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= sig.dims(); ++k) {
    bool isBlack = false;
    for (const auto& b : e.black)
      if (b.direction == k) isBlack = true;
    if (isBlack) continue;
    int found = -1;
    for (int genId : sig.generators(k)) {
      if (!(common & (std::uint64_t(1) << genId))) continue;
      if (found >= 0)
        throw DuplicateAdmissibleRoots(
            "two cut-through systems in direction " + std::to_string(k),
            chainKey(sig, e));
      found = genId;
    }
    if (found >= 0) out.emplace_back(k, found);
  }
  return out;
}

ChainVector homotopy(const Signature& sig, const ChainBasisElement& e) {
  std::vector<int> dims = gridDims(sig, e.black);
  std::vector<int> offsets = cellOffsets(e);
  int oldCells = gridSize(dims);

  ChainVector out;
  for (auto [k, genId] : cutThroughData(sig, e)) {
    int q = 0;
    while (q < e.degree() && e.black[q].direction < k) ++q;
    int m = sig.gen(genId).arity;

    // split every cell along the new black system, numbers travelling
    std::vector<std::vector<LabelledSubdivision>> slabs(oldCells);
    for (int c = 0; c < oldCells; ++c) {
      LabelledSubdivision piece;
      piece.shape = e.cells[c];
      piece.numbering.assign(e.numbering.begin() + offsets[c],
                             e.numbering.begin() + offsets[c + 1]);
      slabs[c] = splitAlongRoot(sig, piece, k, genId);
    }

    ChainBasisElement b;
    b.black = e.black;
    b.black.insert(b.black.begin() + q, BlackEntry{k, genId});
    std::vector<int> newDims = dims;
    newDims.insert(newDims.begin() + q, m);
    int newCells = gridSize(newDims);
    b.cells.resize(newCells);
    for (int linear = 0; linear < newCells; ++linear) {
      std::vector<int> coord = decode(linear, newDims);
      int slab = coord[q];
      std::vector<int> oldCoord = coord;
      oldCoord.erase(oldCoord.begin() + q);
      const LabelledSubdivision& piece = slabs[encode(oldCoord, dims)][slab];
      b.cells[linear] = piece.shape;
      b.numbering.insert(b.numbering.end(), piece.numbering.begin(),
                         piece.numbering.end());
    }
    out.push_back(ChainTerm{q % 2 == 0 ? Rat(1) : Rat(-1), std::move(b)});
  }
  return combine(sig, std::move(out));
}

ChainVector applyDifferential(const Signature& sig, const ChainVector& v) {
  ChainVector out;
  for (const auto& t : v)
    for (auto& u : differential(sig, t.elem))
      out.push_back(ChainTerm{t.coeff * u.coeff, std::move(u.elem)});
  return combine(sig, std::move(out));
}

ChainVector applyHomotopy(const Signature& sig, const ChainVector& v) {
  ChainVector out;
  for (const auto& t : v)
    for (auto& u : homotopy(sig, t.elem))
      out.push_back(ChainTerm{t.coeff * u.coeff, std::move(u.elem)});
  return combine(sig, std::move(out));
}

namespace {

// Exact rank of a sparse rational matrix given by columns.
class SparseRank {
 public:
  using Column = std::vector<std::pair<std::size_t, Rat>>;  // sorted by row

  // reduce a column against the pivots; if nonzero remains, keep as pivot
  void addColumn(Column col) {
    for (;;) {
      if (col.empty()) return;
      std::size_t lead = col.front().first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        Rat inv = Rat(1) / col.front().second;
        for (auto& [r, v] : col) v *= inv;
        pivots_.emplace(lead, std::move(col));
        ++rank_;
        return;
      }
      const Column& pivot = it->second;
      Rat factor = col.front().second;  // pivot lead is 1
      Column next;
      next.reserve(col.size() + pivot.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < pivot.size()) {
        if (j == pivot.size() ||
            (i < col.size() && col[i].first < pivot[j].first)) {
          next.push_back(col[i++]);
        } else if (i == col.size() || pivot[j].first < col[i].first) {
          next.emplace_back(pivot[j].first, -factor * pivot[j].second);
          ++j;
        } else {
          Rat v = col[i].second - factor * pivot[j].second;
          if (v != 0) next.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      col = std::move(next);
    }
  }

  std::size_t rank() const { return rank_; }

 private:
  std::unordered_map<std::size_t, Column> pivots_;
  std::size_t rank_ = 0;
};

}  // namespace

ResolutionReport homologyRanks(const Signature& sig, int arity,
                               ShapeEnumerator& shapes,
                               std::size_t maxElements) {
  ResolutionReport report;
  report.arity = arity;
  report.minimal = true;

  int d = sig.dims();
  std::vector<std::vector<ChainBasisElement>> bases(d + 1);
  std::vector<std::unordered_map<std::string, std::size_t>> index(d + 1);
  for (int s = 0; s <= d; ++s) {
    bases[s] = chainBasis(sig, arity, s, shapes, maxElements);
    for (std::size_t i = 0; i < bases[s].size(); ++i)
      index[s].emplace(chainKey(sig, bases[s][i]), i);
  }

  std::vector<std::size_t> rank(d + 2, 0);
  for (int s = 1; s <= d; ++s) {
    SparseRank elim;
    for (const auto& e : bases[s]) {
      SparseRank::Column col;
      for (const auto& t : differential(sig, e)) {
        auto it = index[s - 1].find(chainKey(sig, t.elem));
        if (it == index[s - 1].end())
          throw StructuralError("differential image is not a basis element");
        col.emplace_back(it->second, t.coeff);
        // minimality: the image must carry at least one white cut
        bool hasWhite = false;
        for (const auto& c : t.elem.cells)
          if (!c->isLeaf()) hasWhite = true;
        if (!hasWhite) report.minimal = false;
      }
      std::sort(col.begin(), col.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      elim.addColumn(std::move(col));
    }
    rank[s] = elim.rank();
  }

  report.pass = report.minimal;
  for (int s = 0; s <= d; ++s) {
    RankRow row;
    row.degree = s;
    row.dim = bases[s].size();
    row.rankD = rank[s];
    std::size_t expected = (arity == 1 && s == 0) ? 1 : 0;
    row.homology = row.dim - rank[s] - rank[s + 1];
    if (row.homology != expected) {
      report.pass = false;
      if (report.failure.empty())
        report.failure = "homology dimension " + std::to_string(row.homology) +
                         " in degree " + std::to_string(s) + " (expected " +
                         std::to_string(expected) + ")";
    }
    report.rows.push_back(row);
  }
  if (!report.minimal && report.failure.empty())
    report.failure = "differential image with no white cut";
  return report;
}

}  // namespace cutoperad
