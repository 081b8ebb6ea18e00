#include "cutoperad/svg_render.hpp"

#include "cutoperad/geometry.hpp"

namespace cutoperad {

namespace {

constexpr int kSide = 400;
constexpr int kMargin = 20;

// exact rational -> fixed 4-decimal string (coordinates are nonnegative)
std::string fixed4(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int scaled = (num * 20000 + den) / (2 * den);  // round half up
  Int whole = scaled / 10000;
  Int frac = scaled % 10000;
  std::string f = frac.str();
  f.insert(0, 4 - f.size(), '0');
  while (f.size() > 1 && f.back() == '0') f.pop_back();
  if (f == "0") return whole.str();
  return whole.str() + "." + f;
}

std::string px(const Rat& x) { return fixed4(Rat(kMargin) + x * kSide); }
std::string py(const Rat& y) { return fixed4(Rat(kMargin) + (1 - y) * kSide); }

struct Style {
  std::string color;
  std::string dash;
};

Style styleOf(int genId) {
  static const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c",
                                 "#9467bd", "#ff7f0e", "#8c564b"};
  static const char* dashes[] = {"", "7,4", "2,4", "9,3,2,3"};
  Style s;
  s.color = colors[genId % 6];
  s.dash = dashes[(genId / 6) % 4];
  return s;
}

std::string line(const std::string& x1, const std::string& y1,
                 const std::string& x2, const std::string& y2,
                 const Style& st, int width) {
  std::string out = "<line x1=\"" + x1 + "\" y1=\"" + y1 + "\" x2=\"" + x2 +
                    "\" y2=\"" + y2 + "\" stroke=\"" + st.color +
                    "\" stroke-width=\"" + std::to_string(width) + "\"";
  if (!st.dash.empty()) out += " stroke-dasharray=\"" + st.dash + "\"";
  out += "/>\n";
  return out;
}

}  // namespace

std::string renderSvg(const Signature& sig, const CutOperadElement& e) {
  if (sig.dims() != 2)
    throw StructuralError("render: only d = 2 is supported");
  GeomForm g = toGeom(sig, e);

  int legendRows = sig.generatorCount();
  int height = 2 * kMargin + kSide + 10 + 20 * legendRows;
  int width = 2 * kMargin + kSide;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + std::to_string(kMargin) + "\" y=\"" +
         std::to_string(kMargin) + "\" width=\"" + std::to_string(kSide) +
         "\" height=\"" + std::to_string(kSide) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";

  // interior cut segments, drawn from the lower side of each shared face
  for (const GeomBox& b : g.boxes) {
    if (b.faceHi[0] != kBoundary) {
      Style st = styleOf(b.faceHi[0]);
      svg += line(px(b.hi[0]), py(b.lo[1]), px(b.hi[0]), py(b.hi[1]), st, 2);
    }
    if (b.faceHi[1] != kBoundary) {
      Style st = styleOf(b.faceHi[1]);
      svg += line(px(b.lo[0]), py(b.hi[1]), px(b.hi[0]), py(b.hi[1]), st, 2);
    }
  }

  for (const GeomBox& b : g.boxes) {
    Rat cx = (b.lo[0] + b.hi[0]) / 2;
    Rat cy = (b.lo[1] + b.hi[1]) / 2;
    svg += "<text x=\"" + px(cx) + "\" y=\"" + py(cy) +
           "\" font-family=\"sans-serif\" font-size=\"15\" "
           "text-anchor=\"middle\" dominant-baseline=\"middle\">" +
           std::to_string(b.index) + "</text>\n";
  }

  int ly = 2 * kMargin + kSide + 4;
  for (int id = 0; id < sig.generatorCount(); ++id) {
    const GeneratorInfo& info = sig.gen(id);
    Style st = styleOf(id);
    std::string y = std::to_string(ly + 20 * id + 10);
    svg += line(std::to_string(kMargin), y, std::to_string(kMargin + 34), y,
                st, 2);
    svg += "<text x=\"" + std::to_string(kMargin + 42) + "\" y=\"" +
           std::to_string(ly + 20 * id + 14) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" + info.name +
           " (direction " + std::to_string(info.direction) + ", arity " +
           std::to_string(info.arity) + ")</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace cutoperad
