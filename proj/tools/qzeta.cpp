// Command-line surface: compute any formula, run verification suites and
// brute-force oracles, emit JSON / CSV / text.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>

#include "qzeta/io.hpp"
#include "qzeta/oracle.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/verify.hpp"
#include "qzeta/zeta.hpp"

namespace {

using namespace qzeta;

OrderFamily parse_family(const std::string& s, int m) {
  if (s == "ramified") return {Family::Ramified, m};
  if (s == "split") return {Family::Split, m};
  if (s == "inert") return {Family::Inert, m};
  throw CLI::ValidationError("--family must be ramified, split or inert");
}

SumFamily parse_sum_family(const std::string& s, int m) {
  if (s == "ag") return {SumFamily::AG, m};
  if (s == "br") return {SumFamily::Br, m};
  throw CLI::ValidationError("--family must be ag or br");
}

long long default_guard() {
  if (const char* env = std::getenv("QZETA_GUARD")) return std::atoll(env);
  return 10'000'000;
}

struct Emit {
  std::string var = "q";      // q | qinv
  std::string format = "text";  // text | json

  template <typename V>
  V convert(const V& value) const {
    if (var == "q") return value;
    if (var == "qinv") return value.substitute(Var::Q, Laurent::q(-1));
    throw CLI::ValidationError("--var must be q or qinv");
  }

  void value(const Laurent& p) const {
    Laurent out = convert(p);
    if (format == "json")
      std::cout << to_json(out).dump(2) << "\n";
    else
      std::cout << out.to_string() << "\n";
  }
  void value(const Fraction& f) const {
    Fraction out = convert(f);
    if (format == "json")
      std::cout << to_json(out).dump(2) << "\n";
    else if (out.den().empty())
      std::cout << out.num().to_string() << "\n";
    else
      std::cout << "(" << out.num().to_string() << ") / ("
                << out.den_expanded().to_string() << ")\n";
  }
};

int run_compute(const std::string& target, const std::string& family, int m,
                std::int64_t n, const std::string& rs, std::int64_t order,
                const std::string& ss, const std::string& lam,
                const std::string& mu, const std::string& sign,
                const std::string& form, const std::vector<int>& exps,
                const Emit& emit) {
  auto scalar_r = [&rs]() -> std::int64_t {
    auto v = parse_tuple(rs);
    if (v.size() != 1)
      throw CLI::ValidationError("--r must be a single integer here");
    return v[0];
  };
  if (target == "g-skew") {
    emit.value(g_skew(parse_tuple(rs), parse_tuple(ss)));
  } else if (target == "hall-g") {
    emit.value(hall_g(parse_partition(lam), parse_partition(mu)));
  } else if (target == "ag-multisum") {
    emit.value(ag_multisum(m, n));
  } else if (target == "br-multisum") {
    emit.value(br_multisum(m, n, sign == "-t" ? -1 : +1));
  } else if (target == "singlesum") {
    emit.value(singlesum(parse_sum_family(family, m), n));
  } else if (target == "infinite-sum") {
    emit.value(infinite_sum(parse_sum_family(family, m), order).poly);
  } else if (target == "product-side") {
    emit.value(product_side(parse_sum_family(family, m), order).poly);
  } else if (target == "saturation") {
    emit.value(saturation_zeta(parse_family(family, m), n));
  } else if (target == "rtilde") {
    emit.value(rtilde_zeta(parse_family(family, m), n));
  } else if (target == "solomon") {
    emit.value(solomon_zeta(exps, n));
  } else if (target == "coh-inert-m1") {
    emit.value(coh_finitized({Family::Inert, 1}, n));
  } else if (target == "closed-form") {
    ClosedForm cf = closed_form_coh(parse_family(family, m), n);
    if (cf.conjectural) std::cout << "# status: conjectural\n";
    emit.value(cf.value);
  } else if (target == "nuhat0") {
    emit.value(nuhat_zero(parse_family(family, m), n,
                          form == "alternative" ? NuhatForm::Alternative
                                                : NuhatForm::Theorem));
  } else if (target == "nuhat-inert-m1") {
    OrderFamily fam{Family::Inert, 1};
    emit.value(normalize_nuhat(coh_finitized(fam, n), fam, n));
  } else if (target == "inert-count") {
    emit.value(inert_m1_count(n, scalar_r(),
                              form == "alternating" ? CountForm::Alternating
                                                    : CountForm::Closed));
  } else {
    throw CLI::ValidationError("unknown compute target: " + target);
  }
  return 0;
}

int run_oracle(const std::string& target, int q, std::int64_t n, std::int64_t r,
               std::int64_t K, const std::string& family, int m,
               const std::string& lam, const std::string& mu,
               long long guard_limit, const std::string& format,
               bool no_timestamp) {
  EnumGuard guard{guard_limit};
  const bool timing = !no_timestamp;
  auto t0 = std::chrono::steady_clock::now();
  auto ms = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  };
  const bool csv = format == "csv";
  if (csv) std::cout << oracle_csv_header() << "\n";

  if (target == "sat") {
    OrderFamily fam = parse_family(family, m);
    FieldSpec field = fam.kind == Family::Inert ? FieldSpec::quadratic(q)
                                                : FieldSpec::prime(q);
    auto counts = saturation_zeta_oracle(fam, n, field, guard);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (!csv && counts[j] == 0) continue;
      std::string row = oracle_csv_row(
          "sat",
          {{"family", family}, {"m", std::to_string(m)}, {"q", std::to_string(q)},
           {"n", std::to_string(n)}},
          (std::int64_t)j, counts[j], ms(), timing);
      if (csv)
        std::cout << row << "\n";
      else
        std::cout << "t^" << j << ": " << counts[j] << "\n";
    }
  } else if (target == "sat-count") {
    long long c =
        saturating_subspace_count_oracle(FieldSpec::quadratic(q), n, r, guard);
    if (csv)
      std::cout << oracle_csv_row("sat-count",
                                  {{"q", std::to_string(q)},
                                   {"n", std::to_string(n)},
                                   {"r", std::to_string(r)}},
                                  r, c, ms(), timing)
                << "\n";
    else
      std::cout << c << "\n";
  } else if (target == "quot") {
    auto counts = quot_zeta_oracle_inert_m1(FieldSpec::quadratic(q), n, K, guard);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (csv)
        std::cout << oracle_csv_row("quot",
                                    {{"q", std::to_string(q)},
                                     {"n", std::to_string(n)},
                                     {"K", std::to_string(K)}},
                                    (std::int64_t)j, counts[j], ms(), timing)
                  << "\n";
      else
        std::cout << "t^" << j << ": " << counts[j] << "\n";
    }
  } else if (target == "hall") {
    long long c = hall_count_oracle(parse_partition(lam), parse_partition(mu),
                                    FieldSpec::prime(q), guard);
    if (csv)
      std::cout << oracle_csv_row(
                       "hall",
                       {{"lambda", lam}, {"mu", mu}, {"q", std::to_string(q)}},
                       0, c, ms(), timing)
                << "\n";
    else
      std::cout << c << "\n";
  } else if (target == "moebius") {
    ModuleSpec mod = module_for_partition(parse_partition(lam), q);
    for (const auto& w : enumerate_submodules(mod, guard)) {
      ModuleSpec quo = quotient_module(mod, w);
      Partition cotype = module_type(quo.full(), quo, 0);
      EnumGuard inner{guard_limit};
      long long value = moebius_oracle(mod, w, inner);
      if (csv)
        std::cout << oracle_csv_row("moebius",
                                    {{"lambda", lam},
                                     {"q", std::to_string(q)},
                                     {"cotype", cotype.to_string()}},
                                    w.dim(), value, ms(), timing)
                  << "\n";
      else
        std::cout << "dim=" << w.dim() << " cotype=" << cotype.to_string()
                  << " mu=" << value << "\n";
    }
  } else if (target == "submodules") {
    auto subs = enumerate_submodules(module_for_partition(parse_partition(lam), q),
                                     guard);
    if (csv)
      std::cout << oracle_csv_row("submodules",
                                  {{"lambda", lam}, {"q", std::to_string(q)}}, 0,
                                  (long long)subs.size(), ms(), timing)
                << "\n";
    else
      std::cout << subs.size() << "\n";
  } else {
    throw CLI::ValidationError("unknown oracle target: " + target);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qzeta: exact q-series and lattice zeta function engine"};
  app.require_subcommand(1);

  std::string target, family = "inert", form = "theorem";
  std::string sign = "+t", rs = "0", ss = "0", lam, mu;
  int m = 1, q = 2;
  std::int64_t n = 0, K = 2, order = 20;
  std::vector<int> exps = {1};
  Emit emit;
  bool no_timestamp = false;

  auto* compute = app.add_subcommand("compute", "evaluate a formula exactly");
  compute->add_option("target", target,
                      "g-skew | hall-g | ag-multisum | br-multisum | singlesum |"
                      " infinite-sum | product-side | saturation | rtilde |"
                      " solomon | coh-inert-m1 | closed-form | nuhat0 |"
                      " nuhat-inert-m1 | inert-count")
      ->required();
  compute->add_option("--family", family, "ramified|split|inert or ag|br");
  compute->add_option("--m", m);
  compute->add_option("--n", n);
  compute->add_option("--r", rs, "integer (or comma tuple for g-skew)");
  compute->add_option("--s", ss, "integer or comma tuple (g-skew)");
  compute->add_option("--order", order, "series truncation order");
  compute->add_option("--lambda", lam, "partition, e.g. 3,2,1");
  compute->add_option("--mu", mu, "partition");
  compute->add_option("--sign", sign, "+t or -t (br-multisum)");
  compute->add_option("--form", form, "theorem|alternative or closed|alternating");
  compute->add_option("--exps", exps, "residue exponents (solomon)");
  compute->add_option("--var", emit.var, "output variable: q (native) or qinv");
  compute->add_option("--format", emit.format, "text|json");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites;
  Ranges ranges;
  ranges.guard = default_guard();
  std::string vformat = "text";
  verify->add_option("suite", suites, "suite names, or 'all'")->required();
  verify->add_option("--m-max", ranges.m_max);
  verify->add_option("--n-max", ranges.n_max);
  verify->add_option("--order", ranges.order);
  verify->add_option("--primes", ranges.primes);
  verify->add_option("--guard", ranges.guard);
  verify->add_option("--workers", ranges.workers, "parallel parameter points");
  verify->add_option("--format", vformat, "text|json");
  verify->add_flag("--no-timestamp", no_timestamp,
                   "omit wall-clock fields (byte-stable output)");

  auto* oracle = app.add_subcommand("oracle", "run a brute-force enumeration");
  std::string oformat = "text";
  long long guard_limit = default_guard();
  oracle->add_option("target", target,
                     "sat | sat-count | quot | hall | moebius | submodules")
      ->required();
  oracle->add_option("--family", family);
  oracle->add_option("--m", m);
  oracle->add_option("--q", q);
  oracle->add_option("--n", n);
  oracle->add_option("--r", rs, "codimension");
  oracle->add_option("--K", K);
  oracle->add_option("--lambda", lam);
  oracle->add_option("--mu", mu);
  oracle->add_option("--guard", guard_limit);
  oracle->add_option("--format", oformat, "text|csv");
  oracle->add_flag("--no-timestamp", no_timestamp);

  auto* table = app.add_subcommand("table", "print a value table");
  table->add_option("target", target, "nuhat0 | inert-count")->required();
  table->add_option("--m-max", m);
  table->add_option("--n-max", n);

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed())
      return run_compute(target, family, m, n, rs, order, ss, lam, mu, sign,
                         form, exps, emit);
    if (verify->parsed()) {
      if (suites.size() == 1 && suites[0] == "all") {
        suites.clear();
        for (const auto& s : suite_names())
          if (s != "oracle-all") suites.push_back(s);
      }
      std::vector<SuiteReport> reports;
      for (const auto& s : suites) reports.push_back(run_suite(s, ranges));
      if (vformat == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& rep : reports)
          out.push_back(to_json(rep, !no_timestamp));
        std::cout << out.dump(2) << "\n";
      } else {
        for (const auto& rep : reports)
          std::cout << report_text(rep, !no_timestamp);
      }
      return (int)combined_status(reports);
    }
    if (oracle->parsed()) {
      auto rv = parse_tuple(rs);
      std::int64_t r = rv.empty() ? 0 : rv[0];
      return run_oracle(target, q, n, r, K, family, m, lam, mu, guard_limit,
                        oformat, no_timestamp);
    }
    if (table->parsed()) {
      if (target == "nuhat0") {
        int mm = m < 1 ? 1 : m;
        std::int64_t nn = n < 1 ? 3 : n;
        for (Family k : {Family::Ramified, Family::Split, Family::Inert})
          for (int mi = 1; mi <= mm; ++mi)
            for (std::int64_t ni = 0; ni <= nn; ++ni) {
              OrderFamily fam{k, mi};
              std::cout << fam.name() << " m=" << mi << " n=" << ni << "  "
                        << nuhat_zero(fam, ni, NuhatForm::Theorem).to_string()
                        << "\n";
            }
      } else if (target == "inert-count") {
        std::int64_t nn = n < 1 ? 3 : n;
        for (std::int64_t ni = 0; ni <= nn; ++ni)
          for (std::int64_t ri = 0; ri <= 2 * ni; ++ri)
            std::cout << "n=" << ni << " r=" << ri << "  "
                      << inert_m1_count(ni, ri, CountForm::Closed).to_string()
                      << "\n";
      } else {
        throw CLI::ValidationError("unknown table target: " + target);
      }
      return 0;
    }
  } catch (const ResourceError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
