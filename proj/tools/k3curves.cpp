#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "k3/classifier.hpp"
#include "k3/oracle.hpp"
#include "k3/record.hpp"
#include "k3/special.hpp"

namespace {

using k3::Int;

constexpr int kExitOk = 0;
constexpr int kExitError = 2;       // domain violation or malformed flags
constexpr int kExitNotExists = 3;   // classification verdict, for scripting

void print_text(const k3::OutputRecord& rec) {
  std::cout << "(n, d, g) = (" << rec.n << ", " << rec.d << ", " << rec.g
            << ")  mode = " << rec.mode << "\n"
            << "lambda          = " << rec.lambda << "\n"
            << "case            = " << rec.theorem_case << "\n"
            << "exists          = " << (rec.exists ? "true" : "false") << "\n";
  std::cout << "exceptions      = ";
  if (rec.exceptions.empty()) {
    std::cout << "(none)\n";
  } else {
    for (size_t i = 0; i < rec.exceptions.size(); ++i)
      std::cout << (i ? "," : "") << rec.exceptions[i];
    std::cout << "\n";
  }
  std::cout << "picard          = rank " << rec.picard_rank;
  if (rec.picard_rank == 1) {
    std::cout << ", witnesses";
    if (rec.picard_witnesses.empty()) std::cout << " (none)";
    for (const auto& w : rec.picard_witnesses) std::cout << ' ' << w;
  } else {
    std::cout << ", basis H, C";
  }
  std::cout << "\n"
            << "quadrics        = " << rec.quadrics << "\n"
            << "birational_only = " << (rec.birational_only ? "true" : "false")
            << "\n";
}

int run_classify(Int n, Int d, Int g, bool birational,
                 const std::string& format) {
  const k3::CurveQuery q(n, d, g,
                         birational ? k3::Mode::Birational
                                    : k3::Mode::Embedded);
  const auto res = k3::classify(q);
  const auto rec = k3::make_record(q, res);
  if (format == "json")
    std::cout << k3::to_json(rec).dump() << "\n";
  else
    print_text(rec);
  return res.exists ? kExitOk : kExitNotExists;
}

int run_table(Int n, Int d_max, Int g_max, const std::string& format,
              const std::string& mode, bool only_exists, bool force) {
  const k3::Mode m =
      mode == "birational" ? k3::Mode::Birational : k3::Mode::Embedded;
  if (d_max < 0 || g_max < 0) {
    std::cerr << "error: --d-max and --g-max must be >= 0\n";
    return kExitError;
  }
  const Int records = k3::checked_mul(d_max, k3::checked_add(g_max, 1));
  if (records > 10'000'000 && !force) {
    std::cerr << "error: table of " << records
              << " records exceeds the 1e7 guard; pass --force to override\n";
    return kExitError;
  }
  if (format == "csv") std::cout << k3::csv_header() << "\n";
  for (Int d = 1; d <= d_max; ++d) {
    for (Int g = 0; g <= g_max; ++g) {
      const k3::CurveQuery q(n, d, g, m);
      const auto res = k3::classify(q);
      if (only_exists && !res.exists) continue;
      const auto rec = k3::make_record(q, res);
      if (format == "csv")
        std::cout << k3::to_csv_row(rec) << "\n";
      else
        std::cout << k3::to_json(rec).dump() << "\n";
    }
  }
  return kExitOk;
}

int run_nonspecial(Int n, Int d, Int g, Int k) {
  const bool value = k3::nonspecial(n, d, g, k);
  const Int lhs1 = d;
  const Int rhs1 = k3::checked_mul(2, k3::checked_mul(n, k));
  const Int lhs2 = k3::checked_mul(d, k);
  const Int rhs2 =
      k3::checked_add(k3::checked_mul(n, k3::checked_mul(k, k)), g);
  std::cout << "nonspecial(n=" << n << ", d=" << d << ", g=" << g
            << ", k=" << k << ") = " << (value ? "true" : "false") << "\n"
            << "  d <= 2nk      : " << lhs1 << " <= " << rhs1 << " : "
            << (lhs1 <= rhs1 ? "true" : "false") << "\n"
            << "  dk > nk^2 + g : " << lhs2 << " > " << rhs2 << " : "
            << (lhs2 > rhs2 ? "true" : "false") << "\n";
  if (n >= 2) {
    const auto res = k3::classify(k3::CurveQuery(n, d, g));
    if (!res.exists)
      std::cerr << "warning: (n, d, g) = (" << n << ", " << d << ", " << g
                << ") is not realized by any surface/curve pair; the "
                   "inequality is still evaluable\n";
  }
  return kExitOk;
}

int run_ci(const std::string& family, Int d_max, Int g_max,
           const std::string& format, bool only_exists) {
  k3::CiFamily f;
  if (family == "quartic")
    f = k3::CiFamily::QuarticP3;
  else if (family == "23")
    f = k3::CiFamily::Type23P4;
  else
    f = k3::CiFamily::Type222P5;
  if (d_max < 0 || g_max < 0) {
    std::cerr << "error: --d-max and --g-max must be >= 0\n";
    return kExitError;
  }
  const Int n = k3::ci_half_degree(f);
  if (format == "csv") std::cout << k3::csv_header_ci() << "\n";
  for (Int d = 1; d <= d_max; ++d) {
    for (Int g = 0; g <= g_max; ++g) {
      const auto ci = k3::ci_classify(f, d, g);
      if (only_exists && !ci.exists) continue;
      const k3::CurveQuery q(n, d, g);
      auto rec = k3::make_record(q, ci.classification);
      rec.exists = ci.exists;  // existence on the family itself
      rec.ci_hypersurface_degree = ci.hypersurface_degree;
      if (format == "csv")
        std::cout << k3::to_csv_row_ci(rec) << "\n";
      else
        std::cout << k3::to_json(rec).dump() << "\n";
    }
  }
  return kExitOk;
}

void print_sweep(const char* name, const k3::SweepReport& rep) {
  std::cout << name << ": n_max=" << rep.n_max << " d_max=" << rep.d_max
            << " triples=" << rep.triples_checked
            << " comparisons=" << rep.comparisons
            << " mismatches=" << rep.mismatches.size() << "\n";
  constexpr size_t kMaxShown = 25;
  for (size_t i = 0; i < rep.mismatches.size() && i < kMaxShown; ++i) {
    const auto& mm = rep.mismatches[i];
    std::cout << "  mismatch (n=" << mm.n << ", d=" << mm.d << ", g=" << mm.g
              << ") " << mm.check << ": expected " << mm.expected << ", got "
              << mm.actual << "\n";
  }
  if (rep.mismatches.size() > kMaxShown)
    std::cout << "  ... " << (rep.mismatches.size() - kMaxShown) << " more\n";
}

int run_selftest(Int n_max, Int d_max) {
  const auto solver = k3::sweep_solver(n_max, d_max);
  print_sweep("sweep_solver", solver);
  const auto theorem = k3::sweep_theorem(n_max, d_max);
  print_sweep("sweep_theorem", theorem);
  const bool ok = solver.passed() && theorem.passed();
  std::cout << "selftest: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "k3curves: existence of smooth curves of degree d and genus g on "
      "projective K3 surfaces of degree 2n in P^(n+1)"};
  app.require_subcommand(1);

  Int n = 0, d = 0, g = 0, k = 1, d_max = 0, g_max = 0;
  Int n_max = 12, sweep_d_max = 40;
  bool birational = false, only_exists = false, force = false;
  std::string formatctl = "text", formattbl = "csv", mode = "embedded";
  std::string family;

  auto* cls = app.add_subcommand("classify", "classify a single (n, d, g)");
  cls->add_option("--n", n, "half the surface degree (H^2 = 2n)")->required();
  cls->add_option("--d", d, "curve degree")->required();
  cls->add_option("--g", g, "curve genus")->required();
  cls->add_flag("--birational", birational,
                "accept birational projective models");
  cls->add_option("--format", formatctl, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* tbl = app.add_subcommand("table", "classification table over a box");
  tbl->add_option("--n", n, "half the surface degree")->required();
  tbl->add_option("--d-max", d_max, "largest degree (rows run d = 1..d-max)")
      ->required();
  tbl->add_option("--g-max", g_max, "largest genus (rows run g = 0..g-max)")
      ->required();
  tbl->add_option("--format", formattbl, "csv or json-lines")
      ->check(CLI::IsMember({"csv", "json-lines"}));
  tbl->add_option("--mode", mode, "embedded or birational")
      ->check(CLI::IsMember({"embedded", "birational"}));
  tbl->add_flag("--only-exists", only_exists, "keep only existing pairs");
  tbl->add_flag("--force", force, "override the 1e7 record guard");

  auto* nsp = app.add_subcommand("nonspecial",
                                 "is O_C(k) non-special for (n, d, g)?");
  nsp->add_option("--n", n, "")->required();
  nsp->add_option("--d", d, "")->required();
  nsp->add_option("--g", g, "")->required();
  nsp->add_option("--k", k, "twist degree, k >= 1")->required();

  auto* ci = app.add_subcommand(
      "ci", "table for a complete intersection family");
  ci->add_option("--family", family, "quartic, 23 or 222")
      ->required()
      ->check(CLI::IsMember({"quartic", "23", "222"}));
  ci->add_option("--d-max", d_max, "")->required();
  ci->add_option("--g-max", g_max, "")->required();
  ci->add_option("--format", formattbl, "csv or json-lines")
      ->check(CLI::IsMember({"csv", "json-lines"}));
  ci->add_flag("--only-exists", only_exists, "keep only existing pairs");

  auto* st = app.add_subcommand("selftest",
                                "exhaustive solver and classifier sweeps");
  st->add_option("--n-max", n_max, "default 12");
  st->add_option("--d-max", sweep_d_max, "default 40");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (cls->parsed()) return run_classify(n, d, g, birational, formatctl);
    if (tbl->parsed())
      return run_table(n, d_max, g_max, formattbl, mode, only_exists, force);
    if (nsp->parsed()) return run_nonspecial(n, d, g, k);
    if (ci->parsed())
      return run_ci(family, d_max, g_max, formattbl, only_exists);
    if (st->parsed()) return run_selftest(n_max, sweep_d_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
