#include "qzeta/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "qzeta/oracle.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/zeta.hpp"

namespace qzeta {

int SuiteReport::failures() const {
  int n = 0;
  for (const auto& r : results) n += r.pass ? 0 : 1;
  return n;
}

ExitStatus combined_status(std::span<const SuiteReport> reports) {
  bool theorem_fail = false, conj_fail = false, skipped = false;
  for (const auto& r : reports) {
    if (r.failures() > 0) {
      if (r.tag == CheckTag::Theorem) theorem_fail = true;
      else conj_fail = true;
    }
    skipped |= !r.skipped.empty();
  }
  if (theorem_fail) return ExitStatus::TheoremFailure;
  if (conj_fail) return ExitStatus::ConjectureFalsified;
  if (skipped) return ExitStatus::ResourceSkip;
  return ExitStatus::AllPass;
}

std::pair<bool, std::string> check_identity(const Fraction& lhs,
                                            const Fraction& rhs) {
  Laurent diff = lhs.num() * rhs.den_expanded() - rhs.num() * lhs.den_expanded();
  if (diff.is_zero()) return {true, ""};
  const auto& [e, c] = *diff.terms().begin();
  return {false, Laurent::monomial(c, e.eq, e.et).to_string()};
}

std::vector<std::pair<std::int64_t, bool>> stabilization_check(
    const std::map<std::int64_t, Fraction>& series_at,
    const std::function<std::int64_t(std::int64_t)>& degree_rule) {
  std::vector<std::pair<std::int64_t, bool>> out;
  for (const auto& [n, frac] : series_at) {
    auto next = series_at.find(n + 1);
    if (next == series_at.end()) continue;
    const std::int64_t d = degree_rule(n);
    TSeries a = frac.t_series(d);
    TSeries b = next->second.t_series(d);
    bool pass = true;
    for (std::int64_t j = 0; j <= d && pass; ++j) {
      Laurent diff = a.coeff(j) - b.coeff(j);
      if (!diff.is_zero() && diff.max_q_degree() > -(n + 1)) pass = false;
    }
    out.emplace_back(n, pass);
  }
  return out;
}

namespace {

// One independently runnable parameter point.  Tasks only write into their
// own sink, so a suite can fan out across workers; sinks are merged in task
// order and results sorted by point, making reports identical for every
// worker count.
struct TaskSink {
  std::vector<CheckResult> results;
  std::vector<std::string> skipped;

  void add(std::string point, bool pass, std::string witness = "") {
    results.push_back({std::move(point), pass, pass ? "" : std::move(witness)});
  }

  void add_eq(std::string point, const Laurent& a, const Laurent& b) {
    Laurent diff = a - b;
    if (diff.is_zero()) {
      add(std::move(point), true);
      return;
    }
    const auto& [e, c] = *diff.terms().begin();
    add(std::move(point), false, Laurent::monomial(c, e.eq, e.et).to_string());
  }

  template <typename Fn>
  void guarded(const std::string& point, Fn&& fn) {
    try {
      fn();
    } catch (const ResourceError& e) {
      skipped.push_back(point + ": " + e.what());
    }
  }
};

using Task = std::function<void(TaskSink&)>;

struct Suite {
  CheckTag tag;
  std::vector<std::string> ops;
  void (*build)(const Ranges&, std::vector<Task>&);
};

std::string fmt_point(std::initializer_list<std::pair<const char*, std::int64_t>> kv,
                      const std::string& prefix = "") {
  std::ostringstream os;
  os << prefix;
  bool first = prefix.empty();
  for (const auto& [k, v] : kv) {
    if (!first) os << " ";
    first = false;
    os << k << "=" << v;
  }
  return os.str();
}

std::int64_t pick(std::int64_t requested, std::int64_t fallback) {
  return requested < 0 ? fallback : requested;
}

Rat to_rat(long long v) { return Rat(Int((long)v)); }

const Laurent kQInv = Laurent::q(-1);

// ---- s = 0 evaluations ---------------------------------------------------

void build_split_s0(const Ranges& rg, std::vector<Task>& tasks) {
  for (int m = 1; m <= pick(rg.m_max, 3); ++m)
    for (std::int64_t n = 0; n <= pick(rg.n_max, 5); ++n)
      tasks.push_back([m, n](TaskSink& out) {
        out.add_eq(fmt_point({{"m", m}, {"n", n}}),
                   nuhat_zero({Family::Split, m}, n, NuhatForm::Theorem),
                   Laurent(1));
      });
}

void build_ramified_s0(const Ranges& rg, std::vector<Task>& tasks) {
  for (int m = 1; m <= pick(rg.m_max, 3); ++m)
    for (std::int64_t n = 0; n <= pick(rg.n_max, 5); ++n)
      tasks.push_back([m, n](TaskSink& out) {
        Laurent rhs = singlesum({SumFamily::AG, m}, n).substitute(Var::Q, kQInv);
        out.add_eq(fmt_point({{"m", m}, {"n", n}}),
                   nuhat_zero({Family::Ramified, m}, n, NuhatForm::Theorem),
                   rhs);
      });
}

void build_conj_s0(const Ranges& rg, std::vector<Task>& tasks) {
  // the (-q^-1;q^-1)_n prefactor is already folded into the Bressoud
  // single sum, which carries it to stay polynomial
  for (int m = 1; m <= pick(rg.m_max, 3); ++m)
    for (std::int64_t n = 0; n <= pick(rg.n_max, 5); ++n)
      tasks.push_back([m, n](TaskSink& out) {
        Laurent rhs = singlesum({SumFamily::Br, m}, n).substitute(Var::Q, kQInv);
        out.add_eq(fmt_point({{"m", m}, {"n", n}}),
                   nuhat_zero({Family::Inert, m}, n, NuhatForm::Theorem), rhs);
      });
}

void build_prop42(const Ranges& rg, std::vector<Task>& tasks) {
  for (Family k : {Family::Ramified, Family::Split, Family::Inert})
    for (int m = 1; m <= pick(rg.m_max, 3); ++m)
      for (std::int64_t n = 0; n <= pick(rg.n_max, 5); ++n)
        tasks.push_back([k, m, n](TaskSink& out) {
          OrderFamily fam{k, m};
          out.add_eq(fmt_point({{"m", m}, {"n", n}}, fam.name()),
                     nuhat_zero(fam, n, NuhatForm::Theorem),
                     nuhat_zero(fam, n, NuhatForm::Alternative));
        });
}

// ---- m = 1 inert, all s ---------------------------------------------------

void build_conj_m1(const Ranges& rg, std::vector<Task>& tasks) {
  for (std::int64_t n = 0; n <= pick(rg.n_max, 6); ++n)
    tasks.push_back([n](TaskSink& out) {
      OrderFamily fam{Family::Inert, 1};
      auto [pass, witness] =
          check_identity(coh_finitized(fam, n), closed_form_coh(fam, n).value);
      out.add(fmt_point({{"n", n}}), pass, witness);
    });
}

void build_prop51(const Ranges& rg, std::vector<Task>& tasks) {
  for (std::int64_t n = 0; n <= pick(rg.n_max, 6); ++n)
    tasks.push_back([n](TaskSink& out) {
      for (std::int64_t r = 0; r <= 2 * n; ++r)
        out.add_eq(fmt_point({{"n", n}, {"r", r}}),
                   inert_m1_count(n, r, CountForm::Closed),
                   inert_m1_count(n, r, CountForm::Alternating));
    });
  for (int p : rg.primes)
    for (std::int64_t n = 0; n <= std::min<std::int64_t>(pick(rg.n_max, 6), 2);
         ++n)
      for (std::int64_t r = 0; r <= 2 * n; ++r)
        tasks.push_back([p, n, r, guard_limit = rg.guard](TaskSink& out) {
          std::string pt = fmt_point({{"q", p}, {"n", n}, {"r", r}}, "oracle");
          out.guarded(pt, [&] {
            EnumGuard guard{guard_limit};
            long long count = saturating_subspace_count_oracle(
                FieldSpec::quadratic(p), n, r, guard);
            Rat predicted = inert_m1_count(n, r, CountForm::Closed).eval(p, 1);
            out.add(pt, predicted == to_rat(count),
                    "oracle=" + std::to_string(count));
          });
        });
}

// ---- structural laws -------------------------------------------------------

void build_tlrn(const Ranges& rg, std::vector<Task>& tasks) {
  for (Family k : {Family::Ramified, Family::Split, Family::Inert})
    for (int m = 1; m <= pick(rg.m_max, 3); ++m)
      for (std::int64_t n = 0; n <= pick(rg.n_max, 4); ++n)
        tasks.push_back([k, m, n](TaskSink& out) {
          OrderFamily fam{k, m};
          Laurent sat = saturation_zeta(fam, n);
          out.add_eq(fmt_point({{"m", m}, {"n", n}}, fam.name() + "-engine"),
                     sat, rtilde_numerator(fam, n));
          auto exps = fam.residue_exponents();
          auto [pass, witness] = check_identity(
              rtilde_zeta(fam, n), solomon_zeta(exps, n) * Fraction(sat));
          out.add(fmt_point({{"m", m}, {"n", n}}, fam.name() + "-compose"),
                  pass, witness);
        });
}

void build_nakayama(const Ranges& rg, std::vector<Task>& tasks) {
  for (std::int64_t n = 0; n <= pick(rg.n_max, 4); ++n)
    tasks.push_back([n](TaskSink& out) {
      OrderFamily fam{Family::Inert, 1};
      std::map<std::int64_t, Fraction> sub;
      for (std::int64_t r = 0; r <= n; ++r) sub.emplace(r, rtilde_zeta(fam, r));
      // the maximal ideal of the m=1 inert order is its normalization, so
      // the local recursion rebuilds the full lattice zeta; shift s -> s+n
      Fraction composed = nakayama_compose(sub, n)
                              .substitute(Var::T, Laurent::monomial(1, -n, 1));
      auto [pass, witness] = check_identity(composed, coh_finitized(fam, n));
      out.add(fmt_point({{"n", n}}), pass, witness);
    });
}

void build_reflection(const Ranges& rg, std::vector<Task>& tasks) {
  for (std::int64_t n = 0; n <= pick(rg.n_max, 4); ++n)
    tasks.push_back([n](TaskSink& out) {
      OrderFamily fam{Family::Inert, 1};
      Laurent nu = normalize_nuhat(coh_finitized(fam, n), fam, n);
      ReflectionResult res = reflection_check(nu, n, fam.conductor_exponent());
      out.add(fmt_point({{"n", n}, {"d", 1}}), res.ok, res.witness);
    });
}

void build_stabilize(const Ranges& rg, std::vector<Task>& tasks) {
  for (std::int64_t n = 1; n <= pick(rg.n_max, 6); ++n)
    tasks.push_back([n](TaskSink& out) {
      OrderFamily fam{Family::Inert, 1};
      std::map<std::int64_t, Fraction> series;
      series.emplace(n, coh_finitized(fam, n));
      series.emplace(n + 1, coh_finitized(fam, n + 1));
      auto res =
          stabilization_check(series, [](std::int64_t nn) { return nn; });
      for (auto [nn, pass] : res)
        out.add(fmt_point({{"n", nn}}), pass,
                "prefix drifted above the q^-(n+1) layer");
    });
}

// ---- classical q-series ----------------------------------------------------

void build_corollary_rr(const Ranges& rg, std::vector<Task>& tasks) {
  const std::int64_t order = pick(rg.order, 50);
  for (auto kind : {SumFamily::AG, SumFamily::Br})
    for (int m = 1; m <= pick(rg.m_max, 3); ++m)
      tasks.push_back([kind, m, order](TaskSink& out) {
        SumFamily fam{kind, m};
        out.add_eq(fmt_point({{"m", m}, {"order", order}},
                             kind == SumFamily::AG ? "AG" : "Br"),
                   infinite_sum(fam, order).poly, product_side(fam, order).poly);
      });
}

void build_classical(const Ranges& rg, std::vector<Task>& tasks) {
  for (int m = 1; m <= pick(rg.m_max, 3); ++m) {
    for (std::int64_t n = 0; n <= pick(rg.n_max, 6); ++n)
      tasks.push_back([m, n](TaskSink& out) {
        const Laurent one(1);
        out.add_eq(fmt_point({{"m", m}, {"n", n}}, "AG-t1"),
                   ag_multisum(m, n).substitute(Var::T, one),
                   singlesum({SumFamily::AG, m}, n));
        Fraction lhs = br_multisum(m, n, +1).substitute(Var::T, one);
        std::vector<PochFactor> den;
        if (n > 0) den.emplace_back(Laurent::monomial(-1, 1, 0), 1, n);
        Fraction rhs(singlesum({SumFamily::Br, m}, n), std::move(den));
        auto [pass, witness] = check_identity(lhs, rhs);
        out.add(fmt_point({{"m", m}, {"n", n}}, "Br-t1"), pass, witness);
      });
    for (std::int64_t n = 0; n <= pick(rg.n_max, 8); ++n)
      tasks.push_back([m, n](TaskSink& out) {
        // Br_n(q,-1) = 1/(q;q)_n
        Fraction lhs = br_multisum(m, n, -1).substitute(Var::T, Laurent(1));
        std::vector<PochFactor> den;
        if (n > 0) den.emplace_back(Laurent::q(1), 1, n);
        Fraction rhs(Laurent(1), std::move(den));
        auto [pass, witness] = check_identity(lhs, rhs);
        out.add(fmt_point({{"m", m}, {"n", n}}, "Br-at-minus1"), pass, witness);
      });
  }
}

// ---- oracle pairings --------------------------------------------------------

void build_oracle_sat(const Ranges& rg, std::vector<Task>& tasks) {
  struct Case {
    Family kind;
    int m;
  };
  for (Case c : {Case{Family::Ramified, 1}, Case{Family::Ramified, 2},
                 Case{Family::Split, 1}, Case{Family::Split, 2},
                 Case{Family::Inert, 1}, Case{Family::Inert, 2}})
    for (int p : rg.primes)
      for (std::int64_t n = 0; n <= std::min<std::int64_t>(pick(rg.n_max, 2), 2);
           ++n)
        tasks.push_back([c, p, n, guard_limit = rg.guard](TaskSink& out) {
          OrderFamily fam{c.kind, c.m};
          std::string pt = fmt_point({{"m", c.m}, {"q", p}, {"n", n}}, fam.name());
          out.guarded(pt, [&] {
            FieldSpec field = c.kind == Family::Inert ? FieldSpec::quadratic(p)
                                                      : FieldSpec::prime(p);
            EnumGuard guard{guard_limit};
            auto counts = saturation_zeta_oracle(fam, n, field, guard);
            Laurent sym = saturation_zeta(fam, n);
            bool pass = true;
            std::string witness;
            for (std::size_t j = 0; j < counts.size() && pass; ++j) {
              Rat predicted = sym.t_coefficient((std::int64_t)j).eval(p, 1);
              if (predicted != to_rat(counts[j])) {
                pass = false;
                witness = "t^" + std::to_string(j) +
                          ": oracle=" + std::to_string(counts[j]);
              }
            }
            out.add(pt, pass, witness);
          });
        });
}

void build_oracle_quot(const Ranges& rg, std::vector<Task>& tasks) {
  struct Case {
    int p;
    std::int64_t n, K;
  };
  for (Case c : {Case{2, 1, 3}, Case{3, 1, 2}})
    tasks.push_back([c, guard_limit = rg.guard](TaskSink& out) {
      std::string pt = fmt_point({{"q", c.p}, {"n", c.n}, {"K", c.K}});
      out.guarded(pt, [&] {
        OrderFamily fam{Family::Inert, 1};
        // de-shift t -> q^n t turns the finitized Coh zeta back into the
        // lattice zeta of R^n
        Fraction deshifted = coh_finitized(fam, c.n).substitute(
            Var::T, Laurent::monomial(1, c.n, 1));
        TSeries expected = deshifted.t_series(c.K + 1);
        EnumGuard g1{guard_limit}, g2{guard_limit};
        auto counts =
            quot_zeta_oracle_inert_m1(FieldSpec::quadratic(c.p), c.n, c.K, g1);
        auto recheck = quot_zeta_oracle_inert_m1(FieldSpec::quadratic(c.p), c.n,
                                                 c.K + 1, g2);
        bool pass = true;
        std::string witness;
        for (std::int64_t j = 0; j <= c.K && pass; ++j) {
          Rat predicted = expected.coeff(j).eval(c.p, 1);
          long long got = counts[(std::size_t)j];
          if (got != recheck[(std::size_t)j]) {
            pass = false;
            witness =
                "truncation level K is not stable at t^" + std::to_string(j);
          } else if (predicted != to_rat(got)) {
            pass = false;
            witness = "t^" + std::to_string(j) + ": oracle=" + std::to_string(got);
          }
        }
        out.add(pt, pass, witness);
      });
    });
}

void build_oracle_hall(const Ranges& rg, std::vector<Task>& tasks) {
  // Hall counts against the closed form, for all shapes in the 3x3 box
  for (int p : rg.primes)
    for (const auto& lambda : subpartitions(Partition::rectangle(3, 3)))
      tasks.push_back([p, lambda, guard_limit = rg.guard](TaskSink& out) {
        std::string pt = fmt_point({{"q", p}}, "hall lambda=" + lambda.to_string());
        out.guarded(pt, [&] {
          EnumGuard guard{guard_limit};
          auto refined = hall_refined_oracle(lambda, FieldSpec::prime(p), guard);
          std::map<Partition, long long> by_type;
          for (const auto& [key, cnt] : refined) by_type[key.first] += cnt;
          bool pass = true;
          std::string witness;
          for (const auto& mu : subpartitions(lambda)) {
            long long got = by_type.count(mu) ? by_type.at(mu) : 0;
            Rat predicted = hall_g(lambda, mu).eval(p, 1);
            if (predicted != to_rat(got)) {
              pass = false;
              witness = "mu=" + mu.to_string() + " oracle=" + std::to_string(got);
              break;
            }
          }
          out.add(pt, pass, witness);
        });
      });

  // Moebius values vanish except on cotype (1^r), where they alternate
  for (const auto& lambda : subpartitions(Partition::rectangle(4, 4))) {
    if (lambda.empty() || lambda.size() > 4) continue;
    tasks.push_back([lambda, guard_limit = rg.guard](TaskSink& out) {
      const int p = 2;
      std::string pt = "moebius q=2 lambda=" + lambda.to_string();
      out.guarded(pt, [&] {
        EnumGuard guard{guard_limit};
        ModuleSpec mod = module_for_partition(lambda, p);
        bool pass = true;
        std::string witness;
        for (const auto& w : enumerate_submodules(mod, guard)) {
          ModuleSpec quo = quotient_module(mod, w);
          Partition cotype = module_type(quo.full(), quo, 0);
          long long expected = 0;
          if (cotype == Partition::rectangle(1, cotype.length())) {
            std::int64_t r = cotype.length();
            expected = (r % 2 == 0 ? 1 : -1);
            for (std::int64_t i = 0; i < r * (r - 1) / 2; ++i) expected *= p;
          }
          EnumGuard inner{guard_limit};
          long long got = moebius_oracle(mod, w, inner);
          if (got != expected) {
            pass = false;
            witness =
                "cotype=" + cotype.to_string() + " mu=" + std::to_string(got);
            break;
          }
        }
        out.add(pt, pass, witness);
      });
    });
  }

  // rectangle shapes: cotype is the complement of the type
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      tasks.push_back([m, n, guard_limit = rg.guard](TaskSink& out) {
        const int p = 2;
        std::string pt = fmt_point({{"m", m}, {"n", n}, {"q", p}}, "rectangular");
        out.guarded(pt, [&] {
          EnumGuard guard{guard_limit};
          auto refined = hall_refined_oracle(Partition::rectangle(m, n),
                                             FieldSpec::prime(p), guard);
          bool pass = true;
          std::string witness;
          for (const auto& [key, cnt] : refined) {
            if (key.second != key.first.complement_in(m, n)) {
              pass = false;
              witness = "type=" + key.first.to_string() +
                        " cotype=" + key.second.to_string();
              break;
            }
          }
          out.add(pt, pass, witness);
        });
      });
}

const std::map<std::string, Suite>& registry() {
  static const std::map<std::string, Suite> reg = {
      {"split-s0", {CheckTag::Theorem, {"nuhat_zero"}, build_split_s0}},
      {"ramified-s0",
       {CheckTag::Theorem, {"nuhat_zero", "singlesum"}, build_ramified_s0}},
      {"conj-s0",
       {CheckTag::Conjectural, {"nuhat_zero", "singlesum"}, build_conj_s0}},
      {"prop42", {CheckTag::Theorem, {"nuhat_zero"}, build_prop42}},
      {"conj-m1",
       {CheckTag::Conjectural,
        {"coh_finitized", "closed_form_coh", "br_multisum", "check_identity"},
        build_conj_m1}},
      {"prop51",
       {CheckTag::Theorem,
        {"inert_m1_count", "saturating_subspace_count_oracle"},
        build_prop51}},
      {"tlrn",
       {CheckTag::Theorem,
        {"saturation_zeta", "rtilde_zeta", "solomon_zeta", "g_skew"},
        build_tlrn}},
      {"nakayama",
       {CheckTag::Theorem, {"nakayama_compose", "rtilde_zeta"}, build_nakayama}},
      {"reflection",
       {CheckTag::Theorem,
        {"normalize_nuhat", "reflection_check", "coh_finitized"},
        build_reflection}},
      {"stabilize",
       {CheckTag::Theorem, {"stabilization_check", "coh_finitized"},
        build_stabilize}},
      {"corollary-rr",
       {CheckTag::Theorem, {"infinite_sum", "product_side"}, build_corollary_rr}},
      {"classical",
       {CheckTag::Theorem,
        {"ag_multisum", "br_multisum", "singlesum", "substitute"},
        build_classical}},
      {"oracle-sat",
       {CheckTag::Theorem,
        {"saturation_zeta", "saturation_zeta_oracle", "enumerate_submodules"},
        build_oracle_sat}},
      {"oracle-quot",
       {CheckTag::Theorem,
        {"quot_zeta_oracle_inert_m1", "coh_finitized"},
        build_oracle_quot}},
      {"oracle-hall",
       {CheckTag::Theorem,
        {"hall_g", "hall_count_oracle", "moebius_oracle", "module_type",
         "enumerate_submodules"},
        build_oracle_hall}},
  };
  return reg;
}

// Execute tasks with the requested worker count; sinks are indexed by task,
// so the merged report does not depend on scheduling.
void run_tasks(const std::vector<Task>& tasks, int workers, SuiteReport& rep) {
  std::vector<TaskSink> sinks(tasks.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) tasks[i](sinks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < tasks.size();
           i = next.fetch_add(1))
        tasks[i](sinks[i]);
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(workers, (int)tasks.size());
    for (int w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& sink : sinks) {
    for (auto& r : sink.results) rep.results.push_back(std::move(r));
    for (auto& s : sink.skipped) rep.skipped.push_back(std::move(s));
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [k, v] : registry()) names.push_back(k);
  names.push_back("oracle-all");
  return names;
}

CheckTag suite_tag(const std::string& name) {
  if (name == "oracle-all") return CheckTag::Theorem;
  return registry().at(name).tag;
}

std::vector<std::string> suite_ops(const std::string& name) {
  if (name == "oracle-all") {
    std::vector<std::string> ops;
    for (const char* sub : {"oracle-sat", "oracle-quot", "oracle-hall", "prop51"})
      for (const auto& op : registry().at(sub).ops) ops.push_back(op);
    return ops;
  }
  return registry().at(name).ops;
}

SuiteReport run_suite(const std::string& name, const Ranges& ranges) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = name;
  if (name == "oracle-all") {
    rep.tag = CheckTag::Theorem;
    for (const char* sub : {"oracle-sat", "oracle-quot", "oracle-hall"}) {
      SuiteReport part = run_suite(sub, ranges);
      for (auto& r : part.results) {
        r.point = std::string(sub) + ": " + r.point;
        rep.results.push_back(std::move(r));
      }
      for (auto& s : part.skipped)
        rep.skipped.push_back(std::string(sub) + ": " + s);
    }
  } else {
    auto it = registry().find(name);
    if (it == registry().end()) {
      std::string known;
      for (const auto& s : suite_names()) known += " " + s;
      throw std::invalid_argument("unknown suite: " + name + " (available:" +
                                  known + ")");
    }
    rep.tag = it->second.tag;
    std::vector<Task> tasks;
    it->second.build(ranges, tasks);
    run_tasks(tasks, ranges.workers, rep);
  }
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.point < b.point;
                   });
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace qzeta
