#include "kmp/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "kmp/catalog.hpp"
#include "kmp/error.hpp"
#include "kmp/ratfit.hpp"
#include "kmp/reference.hpp"
#include "kmp/weyl_enum.hpp"

namespace kmp {

namespace {

constexpr int kPaperSeriesOrder = 25;
constexpr int kFactorizationOrder = 12;
constexpr int kCosetFitOrder = 22;

EnumOptions enum_options(const VerifyOptions& v) {
  EnumOptions o;
  o.threads = v.threads;
  return o;
}

void finish(CaseReport& rep) {
  rep.passed = !rep.checks.empty() && std::all_of(rep.checks.begin(), rep.checks.end(), [](bool b) { return b; });
}

CaseReport paper_series(const VerifyOptions& v) {
  CaseReport rep;
  rep.inputs = "paperH, rho, orders 0..25, frontier strategy";
  const auto g = poincare_series(paper_h(), kPaperSeriesOrder, enum_options(v));
  for (int k = 0; k <= kPaperSeriesOrder; ++k) {
    rep.checks.push_back(g.series.coeff(k) == reference::kHyperbolicGrowth[static_cast<std::size_t>(k)]);
  }
  return rep;
}

// Per-order check of P(H) = P_J * (coset series) together with the coset
// series matching the closed form num/den.
CaseReport coset_case(const SubsetJ& j, const IntPolynomial& num, const IntPolynomial& den,
                      const VerifyOptions& v) {
  CaseReport rep;
  const auto fr = factorization_report(paper_h(), j, kFactorizationOrder, enum_options(v));
  const TruncatedSeries closed = mul(num, inverse(den, kFactorizationOrder), kFactorizationOrder);
  for (int k = 0; k <= kFactorizationOrder; ++k) {
    rep.checks.push_back(fr.check.per_order[static_cast<std::size_t>(k)] && fr.cosets.coeff(k) == closed.coeff(k));
  }
  rep.notes.push_back("parabolic factor: " + fr.parabolic_source);
  return rep;
}

bool listed_words_match(const VerifyOptions& v, std::vector<std::string>& notes) {
  const CartanMatrix h = paper_h();
  const SubsetJ j = SubsetJ::make({1, 2, 3, 4}, 6);
  EnumOptions o = enum_options(v);
  o.max_level = 6;
  o.collect_elements = true;
  const WeightVector mu = parabolic_seed(h, j);
  const auto levels = orbit_bfs(h, mu, o);

  // A reference word v (no left descents in J) corresponds to the orbit point v^{-1}(mu).
  std::vector<std::set<WeightVector>> listed(7);
  for (const auto& w : reference::a4_coset_words()) {
    listed[w.length()].insert(apply_word(h, w.reversed(), mu));
  }
  bool ok = true;
  for (std::size_t k = 0; k <= 6; ++k) {
    std::set<WeightVector> enumerated;
    for (const auto& rec : levels.elements[k]) enumerated.insert(rec.image);
    if (enumerated != listed[k]) {
      ok = false;
      notes.push_back("reference representatives differ from enumeration at length " + std::to_string(k));
    }
  }
  return ok;
}

CaseReport a4_r1(const VerifyOptions& v) {
  const SubsetJ j = SubsetJ::make({1, 2, 3, 4}, 6);
  CaseReport rep = coset_case(j, reference::a4_coset_numerator(), reference::coset_denominator(), v);
  rep.inputs = "paperH, J={1,2,3,4}, order 12";

  const auto cosets = coset_series(paper_h(), j, 6, enum_options(v)).series;
  bool counts_ok = true;
  for (int k = 0; k <= 6; ++k) counts_ok = counts_ok && cosets.coeff(k) == reference::kA4CosetCounts[static_cast<std::size_t>(k)];
  rep.checks.push_back(counts_ok);
  rep.checks.push_back(finite_poincare(FiniteType::parse("A4")) == reference::a4_poincare());
  rep.checks.push_back(listed_words_match(v, rep.notes));

  // Denominator recovered from the coset series with the numerator held fixed.
  const auto long_series = coset_series(paper_h(), j, kCosetFitOrder, enum_options(v)).series;
  const auto fit = recover_denominator(long_series, reference::a4_coset_numerator(), 20);
  rep.checks.push_back(fit.denominator == reference::coset_denominator() && satisfies(fit, long_series, kCosetFitOrder));
  return rep;
}

CaseReport d5_r2(const VerifyOptions& v) {
  const SubsetJ j = SubsetJ::make({1, 2, 3, 4, 5}, 6);
  CaseReport rep = coset_case(j, reference::d5_coset_numerator(), reference::coset_denominator(), v);
  rep.inputs = "paperH, J={1,2,3,4,5}, order 12";

  // Blind recovery: numerator degree <= 1, denominator degree <= 20.
  const auto series = coset_series(paper_h(), j, kCosetFitOrder, enum_options(v)).series;
  const auto fit = recover_rational(series, 1, 20);
  rep.checks.push_back(fit.numerator == reference::d5_coset_numerator() &&
                       fit.denominator == reference::coset_denominator() && satisfies(fit, series, kCosetFitOrder));
  rep.notes.push_back("recovered slack: " + std::to_string(fit.slack));
  return rep;
}

CaseReport affd4_r3(const VerifyOptions& v) {
  const SubsetJ j = SubsetJ::make({2, 3, 4, 5, 6}, 6);
  CaseReport rep = coset_case(j, reference::affd4_coset_numerator(), reference::affd4_coset_denominator(), v);
  rep.inputs = "paperH, J={2,3,4,5,6}, order 12";
  return rep;
}

CaseReport b5_quotient(const VerifyOptions& v) {
  CaseReport rep;
  rep.inputs = "paperH growth series orders 0..25, numerator P(B5), denominator degree <= 24";
  const auto s = poincare_series(paper_h(), kPaperSeriesOrder, enum_options(v)).series;
  const IntPolynomial pb5 = finite_poincare(FiniteType::parse("B5"));
  const auto fit = recover_denominator(s, pb5, 24);
  const IntPolynomial expected = reference::b5_quotient_denominator();
  for (int k = 0; k <= 24; ++k) rep.checks.push_back(fit.denominator.coeff(k) == expected.coeff(k));
  rep.checks.push_back(fit.denominator.degree() == 24);
  rep.checks.push_back(fit.slack == 1);
  rep.checks.push_back(fit.numerator == pb5 && satisfies(fit, s, kPaperSeriesOrder));
  rep.notes.push_back("slack: " + std::to_string(fit.slack));
  return rep;
}

std::vector<std::string> catalog_types() {
  return {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "G2", "F4"};
}

CaseReport finite_catalog(const VerifyOptions& v) {
  CaseReport rep;
  rep.inputs = "A1-A5, B2-B5, C3-C5, D4, D5, G2, F4: full enumeration against the product formula";
  for (const auto& name : catalog_types()) {
    const FiniteType t = FiniteType::parse(name);
    EnumOptions o = enum_options(v);
    o.max_level = -1;
    const auto levels = orbit_bfs(cartan_matrix(t), weyl_vector(cartan_matrix(t)), o);
    const IntPolynomial formula = finite_poincare(t);
    const IntPolynomial bfs(std::vector<Coeff>(levels.counts.begin(), levels.counts.end()));
    std::int64_t degree_product = 1;
    for (int d : degrees(t).degrees) degree_product *= d;
    const bool ok = levels.terminated && bfs == formula && formula.eval(1) == group_order(t) &&
                    levels.total() == group_order(t) && degree_product == group_order(t);
    rep.checks.push_back(ok);
    if (!ok) rep.notes.push_back(name + " mismatch");
  }
  rep.notes.push_back("|W(A4)| = " + std::to_string(group_order(FiniteType::parse("A4"))));
  return rep;
}

bool same_orbit(const CartanMatrix& a, int max_level, const VerifyOptions& v) {
  EnumOptions o = enum_options(v);
  o.max_level = max_level;
  o.collect_elements = true;
  o.strategy = Strategy::FrontierSign;
  const auto f = orbit_bfs(a, weyl_vector(a), o);
  o.strategy = Strategy::GlobalDedup;
  const auto g = orbit_bfs(a, weyl_vector(a), o);
  if (f.counts != g.counts || f.terminated != g.terminated || f.elements.size() != g.elements.size()) return false;
  for (std::size_t k = 0; k < f.elements.size(); ++k) {
    const auto& x = f.elements[k];
    const auto& y = g.elements[k];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].image != y[i].image || x[i].word != y[i].word) return false;
    }
  }
  return true;
}

CaseReport strategy_xcheck(const VerifyOptions& v) {
  CaseReport rep;
  rep.inputs = "paperH to order 12; every finite built-in fully";
  rep.checks.push_back(same_orbit(paper_h(), kFactorizationOrder, v));
  for (const auto& name : builtin_names()) {
    if (name == "paperH" || name.rfind("aff", 0) == 0) continue;
    const bool ok = same_orbit(builtin_algebra(name), -1, v);
    rep.checks.push_back(ok);
    if (!ok) rep.notes.push_back(name + " strategies disagree");
  }
  return rep;
}

using CaseFn = std::function<CaseReport(const VerifyOptions&)>;

const std::map<std::string, CaseFn, std::less<>>& registry() {
  static const std::map<std::string, CaseFn, std::less<>> cases{
      {"paper-series", paper_series}, {"a4-r1", a4_r1},
      {"d5-r2", d5_r2},               {"affd4-r3", affd4_r3},
      {"b5-quotient", b5_quotient},   {"finite-catalog", finite_catalog},
      {"strategy-xcheck", strategy_xcheck},
  };
  return cases;
}

}  // namespace

const std::vector<std::string>& case_names() {
  static const std::vector<std::string> names{"paper-series", "a4-r1",          "d5-r2",          "affd4-r3",
                                              "b5-quotient",  "finite-catalog", "strategy-xcheck"};
  return names;
}

CaseReport run_case(std::string_view name, const VerifyOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorCode::UnknownCase, std::string(name));
  const auto start = std::chrono::steady_clock::now();
  CaseReport rep = it->second(options);
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.name = std::string(name);
  finish(rep);
  return rep;
}

io::Json report_to_json(const CaseReport& report, bool with_timing) {
  io::Json j;
  j["case"] = report.name;
  j["inputs"] = report.inputs;
  j["checks"] = report.checks;
  j["passed"] = report.passed;
  if (!report.notes.empty()) j["notes"] = report.notes;
  if (with_timing) j["wall_seconds"] = report.wall_seconds;
  return j;
}

}  // namespace kmp
