// cutop: command line front end for the cut operad library.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage or input
// error, 3 budget exhaustion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cutoperad/assass.hpp"
#include "cutoperad/enumeration.hpp"
#include "cutoperad/homology.hpp"
#include "cutoperad/io_json.hpp"
#include "cutoperad/series.hpp"
#include "cutoperad/svg_render.hpp"
#include "cutoperad/terms.hpp"

using namespace cutoperad;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::uint64_t defaultBudget() {
  if (const char* env = std::getenv("CUTOP_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw StructuralError("CUTOP_BUDGET is not a number");
    }
  }
  return 10'000'000;
}

Signature loadSignature(const std::string& path) {
  if (path.empty()) return Signature::binary2d();
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open signature file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return signatureFromJson(buf.str());
}

std::vector<Rat> parseCoeffArray(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw StructuralError("expected a JSON array");
  std::vector<Rat> out;
  for (const auto& v : j) {
    if (v.is_number_integer())
      out.emplace_back(v.get<long long>());
    else if (v.is_string())
      out.push_back(ratFromString(v.get<std::string>()));
    else
      throw StructuralError("coefficients are integers or \"p/q\" strings");
  }
  return out;
}

json coeffArray(const IntSeries& s) {
  json arr = json::array();
  for (int n = 1; n <= s.order(); ++n) arr.push_back(ratToString(s.at(n)));
  return arr;
}

void writeOut(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot open output file '" + path + "'");
  out << content;
}

json countTableJson(const CountTable& t) {
  json rows = json::array();
  for (const auto& r : t.rows)
    rows.push_back({{"arity", r.arity},
                    {"shapes", r.shapes.str()},
                    {"elements", r.elements.str()}});
  return rows;
}

std::string countTableCsv(const CountTable& t) {
  std::string out = "arity,shapes,elements\n";
  for (const auto& r : t.rows)
    out += std::to_string(r.arity) + "," + r.shapes.str() + "," +
           r.elements.str() + "\n";
  return out;
}

struct Options {
  std::string sigPath;
  int threads = 1;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cutop: labelled guillotine subdivisions of the d-cube --\n"
               "enumeration, normal forms, series identities, resolution\n"
               "verification and interchange rewriting search"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--sig", opt.sigPath,
                 "signature JSON file (default: one binary generator per "
                 "direction in d=2: h, v)");
  app.add_option("--threads", opt.threads, "parallelism cap")
      ->default_val(1);
  app.add_option("--seed", opt.seed, "random seed for sampling subcommands")
      ->default_val(0);
  app.add_option("-o,--output", opt.output, "output file (default stdout)");

  // count
  auto* cmdCount = app.add_subcommand("count", "count shapes and elements");
  int countMax = 8;
  bool bruteForce = false, doCrosscheck = false;
  std::uint64_t nodeBudget = 0;
  cmdCount->add_option("--max", countMax, "maximum arity")->required();
  cmdCount->add_flag("--brute-force", bruteForce,
                     "count by exhaustive enumeration instead of the "
                     "functional equation");
  cmdCount->add_flag("--crosscheck", doCrosscheck,
                     "run both pipelines and compare");
  cmdCount->add_option("--budget", nodeBudget, "enumeration node budget");
  cmdCount->add_option("--format", opt.format, "json or csv");

  // enumerate
  auto* cmdEnum = app.add_subcommand("enumerate", "list canonical shapes");
  int enumArity = 1;
  std::string emit = "jsonl";
  cmdEnum->add_option("--arity", enumArity, "arity")->required();
  cmdEnum->add_option("--emit", emit, "jsonl or json");
  cmdEnum->add_option("--budget", nodeBudget, "enumeration node budget");

  // normalize
  auto* cmdNorm = app.add_subcommand("normalize", "canonical form of a term");
  std::string termA, termB;
  cmdNorm->add_option("term", termA, "term S-expression")->required();

  // eq
  auto* cmdEq = app.add_subcommand("eq", "equality in the tensor product");
  cmdEq->add_option("term1", termA, "first term")->required();
  cmdEq->add_option("term2", termB, "second term")->required();

  // compose
  auto* cmdCompose =
      app.add_subcommand("compose", "operadic composition of terms");
  std::vector<std::string> composeTerms;
  cmdCompose->add_option("terms", composeTerms, "outer term, then the inners")
      ->required();

  // series
  auto* cmdSeries = app.add_subcommand("series", "exact series utilities");
  cmdSeries->require_subcommand(1);
  auto* cmdInvert = cmdSeries->add_subcommand(
      "invert", "compositional inverse of a power series");
  std::string coeffsText, coeffsA, coeffsB, elementsText;
  cmdInvert->add_option("--coeffs", coeffsText, "JSON array c_1..c_N")
      ->required();
  auto* cmdDirichlet =
      cmdSeries->add_subcommand("dirichlet", "Dirichlet product");
  cmdDirichlet->add_option("--a", coeffsA, "JSON array a_1..a_N")->required();
  cmdDirichlet->add_option("--b", coeffsB, "JSON array b_1..b_N")->required();
  auto* cmdEuler = cmdSeries->add_subcommand(
      "euler-check", "Euler-characteristic identities for a signature "
                     "against a dimension table");
  int eulerMax = 0;
  cmdEuler->add_option("--elements", elementsText,
                       "JSON array of operad dimensions elements(1..N)")
      ->required();
  cmdEuler->add_option("--max", eulerMax,
                       "truncation order (default: table length)");

  // verify-resolution
  auto* cmdVerify = app.add_subcommand(
      "verify-resolution",
      "check the minimal free-right-module resolution at small arities");
  int maxArity = 4;
  bool emitRanks = false;
  cmdVerify->add_option("--max-arity", maxArity, "verify arities 1..N")
      ->required();
  cmdVerify->add_flag("--ranks", emitRanks, "include dimension/rank tables");

  // assass
  auto* cmdAssass =
      app.add_subcommand("assass", "two interchanging associative products");
  cmdAssass->require_subcommand(1);
  auto* cmdSearch = cmdAssass->add_subcommand(
      "search", "bidirectional breadth-first reachability by interchange "
                "moves");
  std::string srcText, dstText, cacheFile = ".cutop-assass-cache.json";
  std::uint64_t stateBudget = 0;
  bool noCache = false;
  cmdSearch->add_option("--src", srcText, "source term")->required();
  cmdSearch->add_option("--dst", dstText, "target term")->required();
  cmdSearch->add_option("--budget", stateBudget, "stored-state budget");
  cmdSearch->add_option("--cache", cacheFile, "result cache file");
  cmdSearch->add_flag("--no-cache", noCache, "disable the result cache");

  // render
  auto* cmdRender = app.add_subcommand("render", "SVG drawing of a 2-D term");
  cmdRender->add_option("term", termA, "term S-expression")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    Signature sig = loadSignature(opt.sigPath);
    if (nodeBudget == 0) nodeBudget = defaultBudget();
    if (stateBudget == 0) stateBudget = defaultBudget();
    EnumerationOptions eopts{nodeBudget, opt.threads};

    if (*cmdCount) {
      if (doCrosscheck) {
        CrosscheckReport r = crosscheck(sig, countMax, eopts);
        json report = {{"pass", r.pass}, {"table", countTableJson(r.table)}};
        if (!r.pass) {
          report["firstMismatchArity"] = r.firstMismatchArity;
          report["enumerated"] = r.enumerated.str();
          report["predicted"] = r.predicted.str();
        }
        writeOut(opt.output, report.dump(1) + "\n");
        std::cerr << (r.pass ? "crosscheck: PASS" : "crosscheck: FAIL")
                  << " (n <= " << countMax << ")\n";
        return r.pass ? kExitPass : kExitFail;
      }
      CountTable t = bruteForce ? countByEnumeration(sig, countMax, eopts)
                                : countByRecurrence(sig, countMax);
      writeOut(opt.output, opt.format == "csv"
                               ? countTableCsv(t)
                               : countTableJson(t).dump(1) + "\n");
      return kExitPass;
    }

    if (*cmdEnum) {
      auto shapes = enumerateShapes(sig, enumArity, eopts);
      std::string out;
      json arr = json::array();
      for (const auto& s : shapes) {
        LabelledSubdivision l{s, {}};
        l.numbering.resize(s->arity());
        for (int i = 0; i < s->arity(); ++i) l.numbering[i] = i + 1;
        if (emit == "json")
          arr.push_back(json::parse(labelledToJson(sig, l)));
        else
          out += labelledToJson(sig, l) + "\n";
      }
      if (emit == "json") out = arr.dump(1) + "\n";
      writeOut(opt.output, out);
      return kExitPass;
    }

    if (*cmdNorm) {
      TermPtr t = parseTerm(sig, termA);
      writeOut(opt.output,
               printTerm(sig, canonicalTerm(sig, evaluate(sig, t))) + "\n");
      return kExitPass;
    }

    if (*cmdEq) {
      TermPtr a = parseTerm(sig, termA);
      TermPtr b = parseTerm(sig, termB);
      bool equal = equivalent(sig, a, b);
      writeOut(opt.output, equal ? "equal\n" : "unequal\n");
      return equal ? kExitPass : kExitFail;
    }

    if (*cmdCompose) {
      if (composeTerms.size() < 2)
        throw StructuralError("compose needs an outer term and inner terms");
      CutOperadElement outer = evaluate(sig, parseTerm(sig, composeTerms[0]));
      std::vector<CutOperadElement> inners;
      for (size_t i = 1; i < composeTerms.size(); ++i)
        inners.push_back(evaluate(sig, parseTerm(sig, composeTerms[i])));
      CutOperadElement result = compose(sig, outer, inners);
      writeOut(opt.output, printTerm(sig, canonicalTerm(sig, result)) + "\n");
      return kExitPass;
    }

    if (*cmdInvert) {
      std::vector<Rat> cs = parseCoeffArray(coeffsText);
      IntSeries g(static_cast<int>(cs.size()));
      for (size_t i = 0; i < cs.size(); ++i)
        g.set(static_cast<int>(i) + 1, cs[i]);
      writeOut(opt.output, coeffArray(seriesInverse(g)).dump() + "\n");
      return kExitPass;
    }

    if (*cmdDirichlet) {
      std::vector<Rat> as = parseCoeffArray(coeffsA);
      std::vector<Rat> bs = parseCoeffArray(coeffsB);
      if (as.size() != bs.size())
        throw StructuralError("dirichlet: arrays must have equal length");
      DirichletCoeffs a(static_cast<int>(as.size())),
          b(static_cast<int>(bs.size()));
      for (size_t i = 0; i < as.size(); ++i) {
        a.set(static_cast<int>(i) + 1, as[i]);
        b.set(static_cast<int>(i) + 1, bs[i]);
      }
      DirichletCoeffs p = dirichletProduct(a, b);
      json arr = json::array();
      for (int n = 1; n <= p.order(); ++n) arr.push_back(ratToString(p.at(n)));
      writeOut(opt.output, arr.dump() + "\n");
      return kExitPass;
    }

    if (*cmdEuler) {
      std::vector<Rat> es = parseCoeffArray(elementsText);
      std::vector<Int> elements;
      for (const Rat& r : es) {
        if (boost::multiprecision::denominator(r) != 1)
          throw StructuralError("elements must be integers");
        elements.push_back(boost::multiprecision::numerator(r));
      }
      int order = eulerMax > 0 ? eulerMax : static_cast<int>(elements.size());
      EulerReport r = eulerCheck(sig, elements, order);
      json rows = json::array();
      for (const auto& row : r.rows)
        rows.push_back({{"arity", row.arity},
                        {"alternatingSum", ratToString(row.alternatingSum)},
                        {"pass", row.pass}});
      json report = {{"pass", r.pass},
                     {"inverseBothWays", r.inverseBothWays},
                     {"rows", rows}};
      if (!r.pass) report["failure"] = r.failure;
      writeOut(opt.output, report.dump(1) + "\n");
      std::cerr << (r.pass ? "euler-check: PASS" : "euler-check: FAIL")
                << " (n <= " << order << ")\n";
      return r.pass ? kExitPass : kExitFail;
    }

    if (*cmdVerify) {
      ShapeEnumerator shapes(sig, eopts);
      bool pass = true;
      json arities = json::array();
      for (int n = 1; n <= maxArity; ++n) {
        ResolutionReport r = homologyRanks(sig, n, shapes);
        pass = pass && r.pass;
        json entry = {{"arity", n}, {"pass", r.pass}, {"minimal", r.minimal}};
        if (!r.pass) entry["failure"] = r.failure;
        if (emitRanks) {
          json rows = json::array();
          for (const auto& row : r.rows)
            rows.push_back({{"degree", row.degree},
                            {"dim", row.dim},
                            {"rankD", row.rankD},
                            {"homology", row.homology}});
          entry["table"] = rows;
        }
        arities.push_back(std::move(entry));
        std::cerr << "arity " << n << ": " << (r.pass ? "PASS" : "FAIL")
                  << "\n";
      }
      json report = {{"pass", pass}, {"arities", arities}};
      writeOut(opt.output, report.dump(1) + "\n");
      return pass ? kExitPass : kExitFail;
    }

    if (*cmdSearch) {
      AATermPtr src = parseAA(srcText);
      AATermPtr dst = parseAA(dstText);
      AASearchOptions sopts;
      sopts.stateBudget = stateBudget;
      sopts.cacheFile = noCache ? "" : cacheFile;
      AASearchResult r = aaReachable(src, dst, sopts);
      bool found = r.status == AASearchResult::Status::Found;
      json report = {{"status", found ? "found" : "inconclusive"},
                     {"statesStored", r.statesStored},
                     {"fromCache", r.fromCache}};
      if (found) report["path"] = r.path;
      if (!r.note.empty()) report["note"] = r.note;
      writeOut(opt.output, report.dump(1) + "\n");
      std::cerr << (found ? "search: FOUND, path length " +
                                std::to_string(r.path.size() - 1)
                          : "search: INCONCLUSIVE (" + r.note + ")")
                << ", states stored: " << r.statesStored << "\n";
      return found ? kExitPass : kExitBudget;
    }

    if (*cmdRender) {
      TermPtr t = parseTerm(sig, termA);
      writeOut(opt.output, renderSvg(sig, evaluate(sig, t)));
      return kExitPass;
    }

    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
