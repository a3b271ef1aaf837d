#include "bms/characters.hpp"
#include "bms/io.hpp"
#include "bms/singular.hpp"
#include "bms/subsingular.hpp"
#include "bms/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace bms;

struct GlobalOpts {
  std::string mode = "full";
  std::string format = "text";
  uint64_t seed = 2024;
  std::string cL, cM, hL;

  AlgebraMode algebraMode() const {
    return mode == "w22" ? AlgebraMode::W22 : AlgebraMode::Full;
  }

  // Weight with optional rational specializations applied; hL may instead be
  // pinned by the caller before this is used.
  HighestWeight weight() const {
    HighestWeight w = HighestWeight::symbolic();
    if (!cL.empty()) w.cL = Scalar(parseRational(cL));
    if (!cM.empty()) {
      mpq_class v = parseRational(cM);
      if (v == 0) throw CLI::ValidationError("--cM must be nonzero");
      w.cM = Scalar(v);
    }
    if (!hL.empty()) w.hL = Scalar(parseRational(hL));
    return w;
  }
};

void addGlobals(CLI::App* app, GlobalOpts& g) {
  app->add_option("--mode", g.mode, "algebra: full or w22")
      ->check(CLI::IsMember({"full", "w22"}));
  app->add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app->add_option("--seed", g.seed, "seed for generic rational draws");
  app->add_option("--cL", g.cL, "rational specialization of cL (num/den)");
  app->add_option("--cM", g.cM, "rational specialization of cM (num/den)");
  app->add_option("--hL", g.hL, "rational specialization of hL (num/den)");
}

void printVector(const ModuleVector& v, const GlobalOpts& g) {
  if (g.format == "json")
    std::cout << toJson(v).dump(2) << "\n";
  else
    std::cout << toText(v) << "\n";
}

int runSingular(const GlobalOpts& g, int p, int k) {
  VermaModule module = VermaModule::atLevelP(p, g.algebraMode(), g.weight());
  bool useS = (p % 2 == 0) || g.algebraMode() == AlgebraMode::W22;
  ModuleVector v = powerVector(useS ? SingularOp::S : SingularOp::R, k, module);
  printVector(v, g);
  return 0;
}

int runSubsingular(const GlobalOpts& g, int p, int r) {
  HighestWeight w = g.weight();
  w.hL = hPrFor(p, r, g.algebraMode(), w.cL);
  VermaModule module = VermaModule::atLevelP(p, g.algebraMode(), w);
  ModuleVector v = buildTpr(r, module);
  if (g.format == "json") {
    nlohmann::json out;
    out["hL"] = w.hL.str();
    out["vector"] = toJson(v);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << toText(v) << "\n";
    std::cout << "hL = " << w.hL.str() << "\n";
  }
  return 0;
}

int runKernel(const GlobalOpts& g, int p, int level2, bool quotient) {
  HighestWeight w = g.weight();
  VermaModule module = VermaModule::atLevelP(p, g.algebraMode(), w);
  if (!quotient) {
    SingularReport rep = singularSpace(level2, module);
    if (g.format == "json") {
      nlohmann::json out;
      out["level2"] = level2;
      out["dim"] = rep.space.dim();
      out["matchesClosedForm"] = rep.matchesClosedForm;
      out["basis"] = nlohmann::json::array();
      for (const auto& v : rep.space.vectors) out["basis"].push_back(toJson(v));
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "singular space at level2=" << level2 << ": dim " << rep.space.dim()
                << (rep.matchesClosedForm ? " (matches closed form)" : "") << "\n";
      for (const auto& v : rep.space.vectors) std::cout << "  " << toText(v) << "\n";
    }
  } else {
    QuotientContext ctx(module);
    SubspaceBasis basis = subsingularSpace(level2, module, ctx);
    if (g.format == "json") {
      nlohmann::json out;
      out["level2"] = level2;
      out["dim"] = basis.dim();
      out["basis"] = nlohmann::json::array();
      for (const auto& v : basis.vectors) out["basis"].push_back(toJson(v));
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "subsingular space at level2=" << level2 << ": dim " << basis.dim() << "\n";
      for (const auto& v : basis.vectors) std::cout << "  " << toText(v) << "\n";
    }
  }
  return 0;
}

int runChar(const GlobalOpts& g, int p, std::optional<int> r, int cutoff2) {
  Scalar offset = Scalar::variable(Var::hL);
  bool specialized = !g.cL.empty() && !g.cM.empty();
  HighestWeight w = g.weight();
  if (r) {
    offset = hPrFor(p, *r, g.algebraMode(), w.cL);
    w.hL = offset;
  } else if (!g.hL.empty()) {
    offset = w.hL;
  }
  QSeries formula = irreducibleCharacter(p, r, cutoff2, offset);
  if (g.format == "json") {
    nlohmann::json out;
    out["formula"] = toJson(formula);
    if (specialized && (r || !g.hL.empty())) {
      VermaModule module = VermaModule::atLevelP(p, g.algebraMode(), w);
      out["computed"] = toJson(computedGradedDims(module, r, cutoff2));
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "char L = " << toText(formula) << "\n";
    if (specialized && (r || !g.hL.empty())) {
      VermaModule module = VermaModule::atLevelP(p, g.algebraMode(), w);
      QSeries dims = computedGradedDims(module, r, cutoff2);
      std::cout << "computed  " << toText(dims) << "\n";
      std::cout << (dims.sameCoeffs(formula, cutoff2) ? "agreement up to cutoff"
                                                      : "MISMATCH")
                << "\n";
    }
  }
  return 0;
}

int runHpr(const GlobalOpts& g, int p, int r) {
  if (g.format == "json") {
    nlohmann::json out;
    out["h_pr"] = hPr(p, r).str();
    out["h_pr_w22"] = hPrW22(p, r).str();
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "h_{" << p << "," << r << "}      = " << hPr(p, r).str() << "\n";
    std::cout << "h'_{" << p << "," << r << "} (W22) = " << hPrW22(p, r).str() << "\n";
  }
  return 0;
}

int runVerify(const GlobalOpts& g, const std::string& suite, int maxLevel2) {
  auto items = runVerifySuite(suite, maxLevel2, g.seed);
  std::sort(items.begin(), items.end(),
            [](const VerifyItem& a, const VerifyItem& b) { return a.name < b.name; });
  bool allPassed = true;
  if (g.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& item : items) {
      out.push_back({{"name", item.name}, {"passed", item.passed}});
      allPassed = allPassed && item.passed;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& item : items) {
      std::cout << (item.passed ? "[PASS] " : "[FAIL] ") << item.name << "\n";
      allPassed = allPassed && item.passed;
    }
  }
  return allPassed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact singular/subsingular vectors, characters, and composition-series "
               "identities for Verma modules over the N=1 BMS superalgebra and W(2,2)"};
  app.require_subcommand(1);
  GlobalOpts g;

  int p = 1, k = 1, r = 1, level2 = 2, maxLevel = 0;
  int levels = -1, levels2 = -1;
  std::string suite;
  std::string hLArg;

  auto* singularCmd = app.add_subcommand("singular", "print S^k 1 (even p) or R^k 1 (odd p)");
  addGlobals(singularCmd, g);
  singularCmd->add_option("--p", p, "level parameter p")->required()->check(CLI::PositiveNumber);
  singularCmd->add_option("--k", k, "power k >= 1")->required()->check(CLI::PositiveNumber);

  auto* subCmd = app.add_subcommand("subsingular", "print T_{p,r} 1 and the required hL");
  addGlobals(subCmd, g);
  subCmd->add_option("--p", p, "level parameter p")->required()->check(CLI::PositiveNumber);
  subCmd->add_option("--r", r, "depth r >= 1")->required()->check(CLI::PositiveNumber);

  auto* kernelCmd = app.add_subcommand("kernel", "singular (or quotient subsingular) space");
  addGlobals(kernelCmd, g);
  kernelCmd->add_option("--p", p, "level parameter p")->required()->check(CLI::PositiveNumber);
  kernelCmd->add_option("--level2", level2, "doubled level")->required()
      ->check(CLI::PositiveNumber);

  auto* charCmd = app.add_subcommand("char", "irreducible character series");
  addGlobals(charCmd, g);
  int rOpt = 0;
  charCmd->add_option("--p", p, "level parameter p")->required()->check(CLI::PositiveNumber);
  charCmd->add_option("--r", rOpt, "atypical depth r (omit for typical)");
  charCmd->add_option("--levels", levels, "cutoff in whole levels");
  charCmd->add_option("--levels2", levels2, "cutoff in doubled levels");

  auto* verifyCmd = app.add_subcommand("verify", "run a named verification suite");
  addGlobals(verifyCmd, g);
  verifyCmd->add_option("--suite", suite, "paper-examples | properties | characters | composition")
      ->required();
  verifyCmd->add_option("--max-level", maxLevel, "doubled level cap for property sweeps");

  auto* hprCmd = app.add_subcommand("hpr", "print h_{p,r} and h'_{p,r}");
  addGlobals(hprCmd, g);
  hprCmd->add_option("--p", p, "level parameter p")->required()->check(CLI::PositiveNumber);
  hprCmd->add_option("--r", r, "depth r >= 1")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (singularCmd->parsed()) return runSingular(g, p, k);
    if (subCmd->parsed()) return runSubsingular(g, p, r);
    if (kernelCmd->parsed()) return runKernel(g, p, level2, !g.hL.empty());
    if (charCmd->parsed()) {
      int cutoff2 = levels2 >= 0 ? levels2 : (levels >= 0 ? 2 * levels : 8);
      return runChar(g, p, rOpt > 0 ? std::optional<int>(rOpt) : std::nullopt, cutoff2);
    }
    if (verifyCmd->parsed()) return runVerify(g, suite, maxLevel);
    if (hprCmd->parsed()) return runHpr(g, p, r);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
