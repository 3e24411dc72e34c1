// Command-line front end: growth series, coset series, rational fits and the
// verification cases, with JSON on stdout (or --out).

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kmp/catalog.hpp"
#include "kmp/error.hpp"
#include "kmp/io.hpp"
#include "kmp/kernels.hpp"
#include "kmp/ratfit.hpp"
#include "kmp/verify.hpp"
#include "kmp/weyl_enum.hpp"

namespace {

using kmp::io::Json;

struct Common {
  std::string out;
  bool pretty = false;
  int threads = 1;
  std::string kernel = "auto";
  std::size_t max_frontier = 0;
};

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw kmp::Error(kmp::ErrorCode::ParseError, "bad index '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

kmp::Strategy parse_strategy(const std::string& s) {
  return s == "global" ? kmp::Strategy::GlobalDedup : kmp::Strategy::FrontierSign;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw kmp::Error(kmp::ErrorCode::ParseError, "cannot write " + c.out);
  f << text;
}

std::string series_table(const kmp::TruncatedSeries& s) {
  std::ostringstream os;
  os << std::setw(6) << "k" << "  " << "count\n";
  for (int k = 0; k <= s.order(); ++k) os << std::setw(6) << k << "  " << s.coeff(k) << '\n';
  return os.str();
}

kmp::EnumOptions enum_options(const Common& c, const std::string& strategy) {
  kmp::EnumOptions o;
  o.strategy = parse_strategy(strategy);
  o.threads = c.threads;
  o.max_frontier = c.max_frontier;
  return o;
}

int run_poincare(const Common& c, const std::string& algebra, int max_degree, const std::string& strategy,
                 const std::string& method, const std::string& dump) {
  const kmp::CartanMatrix a = kmp::io::load_algebra(algebra);
  kmp::TruncatedSeries series{0};
  bool complete = false;

  if (method == "bfs") {
    kmp::EnumOptions o = enum_options(c, strategy);
    o.max_level = max_degree;
    o.collect_elements = !dump.empty();
    const auto levels = kmp::orbit_bfs(a, kmp::weyl_vector(a), o);
    const int order = max_degree >= 0 ? max_degree : static_cast<int>(levels.counts.size()) - 1;
    series = kmp::TruncatedSeries(order);
    for (int k = 0; k <= order && k < static_cast<int>(levels.counts.size()); ++k) {
      series.coeff(k) = levels.counts[static_cast<std::size_t>(k)];
    }
    complete = levels.terminated;
    if (!dump.empty()) {
      std::ofstream f(dump);
      if (!f) throw kmp::Error(kmp::ErrorCode::ParseError, "cannot write " + dump);
      kmp::io::write_elements(f, levels);
    }
  } else {
    const auto kind = kmp::recognize(a);
    if (method == "formula") {
      if (!kind || kind->affine) {
        throw kmp::Error(kmp::ErrorCode::UnknownAlgebra, "--method formula needs a finite type");
      }
      const auto p = kmp::finite_poincare(kind->type);
      series = kmp::TruncatedSeries::from_polynomial(p, max_degree >= 0 ? max_degree : p.degree());
      complete = true;
    } else {
      if (!kind || !kind->affine) {
        throw kmp::Error(kmp::ErrorCode::UnknownAlgebra, "--method bott needs an untwisted affine type");
      }
      if (max_degree < 0) throw kmp::Error(kmp::ErrorCode::ParseError, "--method bott needs --max-degree");
      series = kmp::bott_series(kind->type, max_degree);
    }
  }

  if (c.pretty) {
    emit(c, series_table(series));
    return 0;
  }
  Json j;
  j["algebra"] = a.name();
  j["method"] = method;
  j["coeffs"] = series.coeffs();
  j["order"] = series.order();
  j["complete"] = complete;
  emit(c, j.dump(2) + "\n");
  return 0;
}

int run_cosets(const Common& c, const std::string& algebra, const std::string& subset, int max_degree,
               const std::string& strategy, bool list_words) {
  const kmp::CartanMatrix a = kmp::io::load_algebra(algebra);
  const kmp::SubsetJ j = kmp::SubsetJ::make(parse_index_list(subset), a.rank());
  kmp::EnumOptions o = enum_options(c, strategy);
  o.max_level = max_degree;
  o.collect_elements = list_words;
  const auto levels = kmp::orbit_bfs(a, kmp::parabolic_seed(a, j), o);
  const int order = max_degree >= 0 ? max_degree : static_cast<int>(levels.counts.size()) - 1;
  kmp::TruncatedSeries series(order);
  for (int k = 0; k <= order && k < static_cast<int>(levels.counts.size()); ++k) {
    series.coeff(k) = levels.counts[static_cast<std::size_t>(k)];
  }

  if (c.pretty) {
    std::string text = series_table(series);
    for (std::size_t k = 0; k < levels.elements.size(); ++k) {
      for (const auto& rec : levels.elements[k]) text += rec.word.to_string() + "\n";
    }
    emit(c, text);
    return 0;
  }
  Json out;
  out["algebra"] = a.name();
  out["subset"] = j.indices();
  out["coeffs"] = series.coeffs();
  out["order"] = series.order();
  out["complete"] = levels.terminated;
  if (list_words) {
    Json words = Json::array();
    for (const auto& level : levels.elements) {
      Json lw = Json::array();
      for (const auto& rec : level) lw.push_back(rec.word.letters);
      words.push_back(lw);
    }
    out["words"] = words;
  }
  emit(c, out.dump(2) + "\n");
  return 0;
}

kmp::IntPolynomial load_numerator(const std::string& spec) {
  try {
    return kmp::finite_poincare(kmp::FiniteType::parse(spec));
  } catch (const kmp::Error& e) {
    if (e.code() != kmp::ErrorCode::UnknownAlgebra) throw;
  }
  return kmp::io::polynomial_from_json(kmp::io::read_json_file(spec));
}

int run_fit(const Common& c, const std::string& series_path, const std::string& numerator, int dmax,
            int dnum_max, int dden_max) {
  const auto s = kmp::io::series_from_json(kmp::io::read_json_file(series_path));
  kmp::RationalFit fit;
  if (!numerator.empty()) {
    if (dmax < 0) throw kmp::Error(kmp::ErrorCode::ParseError, "--numerator needs --dmax");
    fit = kmp::recover_denominator(s, load_numerator(numerator), dmax);
  } else {
    if (dnum_max < 0 || dden_max < 0) {
      throw kmp::Error(kmp::ErrorCode::ParseError, "give --numerator/--dmax or --dnum-max/--dden-max");
    }
    fit = kmp::recover_rational(s, dnum_max, dden_max);
  }
  if (c.pretty) {
    emit(c, "numerator:   " + kmp::to_string(fit.numerator) + "\ndenominator: " + kmp::to_string(fit.denominator) +
                "\nverified to order " + std::to_string(fit.verified_to) + ", slack " + std::to_string(fit.slack) +
                "\n");
    return 0;
  }
  emit(c, kmp::io::fit_to_json(fit).dump(2) + "\n");
  return 0;
}

int run_verify(const Common& c, const std::string& which, bool timing) {
  std::vector<std::string> names;
  if (which == "all") {
    names = kmp::case_names();
  } else {
    names.push_back(which);
  }
  kmp::VerifyOptions vo;
  vo.threads = c.threads;
  std::string text;
  bool all_ok = true;
  for (const auto& n : names) {
    const auto rep = kmp::run_case(n, vo);
    all_ok = all_ok && rep.passed;
    if (c.pretty) {
      text += std::string(rep.passed ? "PASS  " : "FAIL  ") + rep.name + "  (" + rep.inputs + ")\n";
    } else {
      text += kmp::report_to_json(rep, timing).dump() + "\n";
    }
  }
  emit(c, text);
  return all_ok ? 0 : 1;
}

int run_sub(const Common& c, const std::string& algebra, const std::string& subset) {
  const kmp::CartanMatrix a = kmp::io::load_algebra(algebra);
  const kmp::SubsetJ j = kmp::SubsetJ::make(parse_index_list(subset), a.rank());
  const auto sub = kmp::sub_gcm(a, j).with_name(a.name() + "[" + subset + "]");
  emit(c, kmp::io::algebra_to_json(sub).dump(2) + "\n");
  return 0;
}

int run_relabel(const Common& c, const std::string& algebra, const std::string& order) {
  const kmp::CartanMatrix a = kmp::io::load_algebra(algebra);
  const auto idx = parse_index_list(order);
  if (static_cast<int>(idx.size()) != a.rank()) {
    throw kmp::Error(kmp::ErrorCode::InvalidSubset, "--order must list every generator exactly once");
  }
  kmp::SubsetJ::make(idx, a.rank());  // rejects duplicates
  const auto r = kmp::relabel(a, idx).with_name(a.name() + "<" + order + ">");
  emit(c, kmp::io::algebra_to_json(r).dump(2) + "\n");
  return 0;
}

bool usage_error(kmp::ErrorCode code) {
  switch (code) {
    case kmp::ErrorCode::UnknownAlgebra:
    case kmp::ErrorCode::ParseError:
    case kmp::ErrorCode::UnknownCase:
    case kmp::ErrorCode::InvalidSubset:
    case kmp::ErrorCode::InvalidRankForFamily:
      return true;
    default:
      return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth series of Kac-Moody Weyl groups"};
  app.require_subcommand(1);

  Common common;
  app.add_option("--out", common.out, "Write the result to this file instead of stdout");
  app.add_flag("--pretty", common.pretty, "Human-readable output instead of JSON");
  app.add_option("--threads", common.threads, "Worker threads for level expansion")->check(CLI::Range(1, 256));
  app.add_option("--kernel", common.kernel, "Reflection kernel")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  app.add_option("--max-frontier", common.max_frontier,
                 "Cap on candidate images per level (default: derived from an 8 GiB budget)");

  std::string algebra;
  int max_degree = -1;
  std::string strategy = "frontier";
  std::string method = "bfs";
  std::string dump;
  auto* poincare = app.add_subcommand("poincare", "Length-graded growth series of W");
  poincare->add_option("--algebra", algebra, "Built-in name or algebra JSON file")->required();
  poincare->add_option("--max-degree", max_degree, "Truncation order (default: until exhausted)");
  poincare->add_option("--strategy", strategy)->check(CLI::IsMember({"frontier", "global"}));
  poincare->add_option("--method", method)->check(CLI::IsMember({"bfs", "formula", "bott"}));
  poincare->add_option("--dump-elements", dump, "Write every element as JSON Lines");

  std::string subset;
  bool list_words = false;
  auto* cosets = app.add_subcommand("cosets", "Growth series of minimal coset representatives");
  cosets->add_option("--algebra", algebra)->required();
  cosets->add_option("--subset", subset, "Comma-separated generator indices of J")->required();
  cosets->add_option("--max-degree", max_degree);
  cosets->add_option("--strategy", strategy)->check(CLI::IsMember({"frontier", "global"}));
  cosets->add_flag("--list-words", list_words, "Include canonical reduced words per length");

  std::string series_path;
  std::string numerator;
  int dmax = -1;
  int dnum_max = -1;
  int dden_max = -1;
  auto* fit = app.add_subcommand("fit", "Recover a rational function from a series file");
  fit->add_option("--series", series_path)->required();
  auto* num_opt = fit->add_option("--numerator", numerator, "Finite type name or polynomial JSON file");
  auto* dmax_opt = fit->add_option("--dmax", dmax, "Denominator degree bound with a fixed numerator");
  auto* dnum_opt = fit->add_option("--dnum-max", dnum_max);
  auto* dden_opt = fit->add_option("--dden-max", dden_max);
  dmax_opt->needs(num_opt);
  num_opt->excludes(dnum_opt)->excludes(dden_opt);

  std::string which = "all";
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run named verification cases");
  verify->add_option("--case", which, "Case name or 'all'");
  verify->add_flag("--timing", timing, "Include wall-clock seconds in each report");

  auto* sub = app.add_subcommand("sub", "Principal sub-matrix on a generator subset");
  sub->add_option("--algebra", algebra)->required();
  sub->add_option("--subset", subset)->required();

  std::string order;
  auto* relabel = app.add_subcommand("relabel", "Renumber the generators");
  relabel->add_option("--algebra", algebra)->required();
  relabel->add_option("--order", order, "New order as a permutation of 1..rank")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (common.kernel == "scalar") {
      kmp::kernels::select(kmp::kernels::Isa::Scalar);
    } else if (common.kernel == "avx2" && !kmp::kernels::select(kmp::kernels::Isa::Avx2)) {
      std::cerr << "avx2 kernel unavailable on this CPU\n";
      return 2;
    }

    if (*poincare) return run_poincare(common, algebra, max_degree, strategy, method, dump);
    if (*cosets) return run_cosets(common, algebra, subset, max_degree, strategy, list_words);
    if (*fit) return run_fit(common, series_path, numerator, dmax, dnum_max, dden_max);
    if (*verify) return run_verify(common, which, timing);
    if (*sub) return run_sub(common, algebra, subset);
    if (*relabel) return run_relabel(common, algebra, order);
  } catch (const kmp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
