#include "suite.hpp"

#include <chrono>
#include <cstdio>

#include "supergroup/conjecture.hpp"
#include "supergroup/errors.hpp"
#include "supergroup/grassmann.hpp"
#include "supergroup/integrals.hpp"
#include "supergroup/sampling.hpp"
#include "supergroup/young.hpp"

namespace supergroup::tools {

namespace {

// Small random rationals from the counter hash, numerators in [-range, range], denominators in [1, den_max].
BigRational hashed_rational(std::uint64_t seed, std::uint64_t stream, std::uint64_t index, long range, long den_max) {
  const std::uint64_t h = counter_hash(seed, stream, index, 0);
  const long num = static_cast<long>(h % static_cast<std::uint64_t>(2 * range + 1)) - range;
  const long den = 1 + static_cast<long>((h >> 32) % static_cast<std::uint64_t>(den_max));
  return make_rational(num, den);
}

std::vector<BigRational> hashed_rationals(std::uint64_t seed, std::uint64_t stream, long count, long range, long den_max) {
  std::vector<BigRational> out;
  for (long i = 0; i < count; ++i) out.push_back(hashed_rational(seed, stream, static_cast<std::uint64_t>(i), range, den_max));
  return out;
}

BigComplex decimal(const char* format, double value, Bits bits) {
  char text[32];
  std::snprintf(text, sizeof text, format, value);
  return BigComplex(Real::parse(text, bits));
}

CriterionResult hook_length(const SuiteOptions&) {
  CriterionResult r;
  long diagrams = 0;
  long failures = 0;
  for (long boxes = 0; boxes <= 12; ++boxes) {
    const BigInt f = factorial(boxes);
    for (const Partition& t : partitions_of(boxes)) {
      ++diagrams;
      if (sigma_coefficient(t) * BigRational(hook_product(t)) != BigRational(f)) ++failures;
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(diagrams) + " diagrams, " + std::to_string(failures) + " failures";
  r.data = {{"diagrams", diagrams}, {"failures", failures}};
  return r;
}

CriterionResult sigma_decomposition(const SuiteOptions&) {
  CriterionResult r;
  long diagrams = 0;
  long failures = 0;
  for (long m = 1; m <= 3; ++m) {
    for (long n = 1; n <= 3; ++n) {
      for (long boxes = 0; boxes <= 10; ++boxes) {
        for (const Partition& t : partitions_of(boxes)) {
          if (!is_covariant(t, m, n)) continue;
          const auto sd = decompose_superdiagram(t, m, n);
          if (!sd) continue;
          ++diagrams;
          const BigRational lhs = sigma_coefficient(t) / BigRational(factorial(t.size()));
          const BigRational rhs = sigma_coefficient(sd->p) / BigRational(factorial(sd->p.size())) *
                                  sigma_coefficient(sd->q) / BigRational(factorial(sd->q.size())) *
                                  sigma_decomposition_factor(*sd);
          if (lhs != rhs) ++failures;
        }
      }
    }
  }
  r.pass = failures == 0 && diagrams > 0;
  r.detail = std::to_string(diagrams) + " super diagrams, " + std::to_string(failures) + " failures";
  r.data = {{"diagrams", diagrams}, {"failures", failures}};
  return r;
}

CriterionResult supercharacter_consistency(const SuiteOptions& o) {
  CriterionResult r;
  long checks = 0;
  long failures = 0;
  for (long m = 1; m <= 2; ++m) {
    for (long n = 1; n <= 2; ++n) {
      for (long set = 0; set < 5; ++set) {
        const std::uint64_t stream = 300 + static_cast<std::uint64_t>(100 * m + 10 * n + set);
        const auto values = hashed_rationals(o.seed, stream, m + n, 20, 9);
        const std::vector<BigRational> bos(values.begin(), values.begin() + m);
        const std::vector<BigRational> ferm(values.begin() + m, values.end());
        for (long boxes = 0; boxes <= 6; ++boxes) {
          for (const Partition& t : partitions_of(boxes)) {
            if (!is_covariant(t, m, n)) continue;
            const auto sd = decompose_superdiagram(t, m, n);
            if (!sd) continue;
            ++checks;
            if (supercharacter_amu(*sd, bos, ferm) != super_schur_tableaux(t, bos, ferm)) ++failures;
          }
        }
      }
    }
  }
  r.pass = failures == 0 && checks > 0;
  r.detail = std::to_string(checks) + " diagram/eigenvalue pairs, " + std::to_string(failures) + " failures";
  r.data = {{"checks", checks}, {"failures", failures}};
  return r;
}

CriterionResult supertrace_power(const SuiteOptions& o) {
  CriterionResult r;
  long checks = 0;
  long failures = 0;
  Json groups = Json::array();
  for (long m = 0; m <= 2; ++m) {
    for (long n = 0; n <= 2; ++n) {
      if (m + n == 0) continue;
      const auto values = hashed_rationals(o.seed, 400 + static_cast<std::uint64_t>(10 * m + n), m + n, 20, 9);
      const std::vector<BigRational> bos(values.begin(), values.begin() + m);
      const std::vector<BigRational> ferm(values.begin() + m, values.end());
      bool ok = true;
      for (const auto& c : character_expansion_check(6, bos, ferm)) {
        ++checks;
        if (!c.equal) {
          ++failures;
          ok = false;
        }
      }
      groups.push_back({{"m", m}, {"n", n}, {"equal", ok}});
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(checks) + " (m|n, boxes) identities, " + std::to_string(failures) + " failures";
  r.data = {{"groups", groups}, {"failures", failures}};
  return r;
}

CriterionResult conjecture(const SuiteOptions& o) {
  CriterionResult r;
  r.pass = true;
  const Real cap(BigRational(1, BigInt("10000000000000000000000000000000000000000")), o.prec.bits);
  Real worst(o.prec.bits);
  Json runs = Json::array();
  for (long N = 2; N <= 8; ++N) {
    for (long m = 1; m <= N; ++m) {
      ConjectureConfig config;
      config.N = N;
      config.m = m;
      config.samples = 10;
      config.radius = 2;
      config.seed = o.seed;
      config.K = 64;
      config.jobs = o.jobs;
      const ConjectureReport report = verify_conjecture(config, o.prec);
      const bool ok = report.pass && report.max_rel_diff < cap;
      if (!ok) r.pass = false;
      if (report.max_rel_diff > worst) worst = report.max_rel_diff;
      runs.push_back({{"N", N},
                      {"m", m},
                      {"max_rel_diff", report.max_rel_diff.to_string(6)},
                      {"tolerance", report.tolerance.to_string(6)},
                      {"pass", ok}});
    }
  }
  r.detail = "worst relative difference " + worst.to_string(6) + " over " + std::to_string(runs.size()) + " (N, m) runs";
  r.data = {{"runs", runs}};
  return r;
}

CriterionResult lr_relation(const SuiteOptions& o) {
  CriterionResult r;
  long cells = 0;
  long nonzero = 0;
  Json groups = Json::array();
  for (const auto& [m, n] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {2, 2}}) {
    const auto sweep = lr_sweep(8, m, n, o.jobs);
    long bad = 0;
    for (const auto& c : sweep) bad += sgn(c.residual) != 0 ? 1 : 0;
    cells += static_cast<long>(sweep.size());
    nonzero += bad;
    groups.push_back({{"m", m}, {"n", n}, {"pairs", sweep.size()}, {"nonzero_residuals", bad}});
  }
  r.pass = nonzero == 0;
  r.detail = std::to_string(cells) + " (p, q) pairs, " + std::to_string(nonzero) + " non-zero residuals";
  r.data = {{"groups", groups}};
  return r;
}

CriterionResult partial_coefficients(const SuiteOptions&) {
  CriterionResult r;
  long checks = 0;
  long failures = 0;
  for (long N = 2; N <= 4; ++N) {
    for (long m = 1; m < N; ++m) {
      for (long km = m - 1; km <= 4; ++km) {
        for (long kn = N - m - 1; kn <= 4; ++kn) {
          ++checks;
          if (!partial_coefficient_check(km, kn, m, N).equal) ++failures;
        }
      }
    }
  }
  r.pass = failures == 0;
  r.detail = std::to_string(checks) + " index patterns, " + std::to_string(failures) + " failures";
  r.data = {{"checks", checks}, {"failures", failures}};
  return r;
}

CriterionResult brute_force(const SuiteOptions& o, long m, long points) {
  CriterionResult r;
  const Bits bits = o.prec.bits;
  const Real tol = ldexp(Real(1, bits), -200);
  Real worst(bits);
  Json rel = Json::array();
  long done = 0;
  for (std::uint64_t attempt = 0; done < points; ++attempt) {
    BruteForceLsInput in;
    in.m = m;
    in.n = 1;
    in.beta = BigComplex(BigRational(1, 2), bits);
    const std::uint64_t stream = 800 + static_cast<std::uint64_t>(m) * 1000 + attempt;
    const auto v = hashed_rationals(o.seed, stream, 4 * (m + 1), 20, 8);
    for (long i = 0; i < m + 1; ++i) {
      in.a.emplace_back(v[4 * i], v[4 * i + 1], bits);
      in.b.emplace_back(v[4 * i + 2], v[4 * i + 3], bits);
    }
    SuperEigenvalues ev{{}, {in.a[m] * in.b[m]}, in.beta};
    for (long i = 0; i < m; ++i) ev.bosonic.push_back(in.a[i] * in.b[i]);
    bool degenerate = false;
    for (std::size_t i = 0; i < ev.bosonic.size(); ++i) {
      if (ev.bosonic[i] == ev.fermionic[0] || ev.bosonic[i].is_zero()) degenerate = true;
      for (std::size_t j = i + 1; j < ev.bosonic.size(); ++j) degenerate = degenerate || ev.bosonic[i] == ev.bosonic[j];
    }
    if (degenerate) continue;
    const Real d = relative_difference(brute_force_ls(in, o.prec), ls_closed_form(ev, o.prec).value);
    if (d > worst) worst = d;
    rel.push_back(d.to_string(6));
    ++done;
  }
  r.pass = worst <= tol;
  r.detail = std::to_string(points) + " points, worst relative difference " + worst.to_string(6);
  r.data = {{"relative_differences", rel}};
  return r;
}

// Relative distance of the split evaluation from the confluent value at eps = 1e-4, 1e-6, 1e-8.
std::vector<Real> confluent_probe(const std::function<IntegralResult(const BigComplex&)>& split, const BigComplex& exact,
                                  Bits bits) {
  std::vector<Real> rel;
  for (double eps : {1e-4, 1e-6, 1e-8}) rel.push_back(relative_difference(split(decimal("%.0e", eps, bits)).value, exact));
  return rel;
}

CriterionResult confluent_limits(const SuiteOptions& o) {
  CriterionResult r;
  const Bits bits = o.prec.bits;
  const BigComplex beta(BigRational(1, 2), bits);
  const BigComplex x(make_rational(5, 4), make_rational(1, 3), bits);
  const BigComplex fermion(-2, bits);

  const SuperEigenvalues ls_case{{x, x}, {fermion}, beta};
  const BigComplex ls_exact = ls_closed_form(ls_case, o.prec).value;
  const auto ls_rel = confluent_probe(
      [&](const BigComplex& eps) { return ls_closed_form({{x, x + eps}, {fermion}, beta}, o.prec); }, ls_exact, bits);

  const SuperEigenvalues mu{{BigComplex(make_rational(1, 3), bits), BigComplex(2, bits)}, {BigComplex(-1, bits)}, beta};
  const BigComplex bk_exact = bk_closed_form(ls_case, mu, o.prec).value;
  const auto bk_rel = confluent_probe(
      [&](const BigComplex& eps) { return bk_closed_form({{x, x + eps}, {fermion}, beta}, mu, o.prec); }, bk_exact, bits);

  r.pass = true;
  Json data = Json::object();
  for (const auto& [label, rel] : {std::pair{"ls", ls_rel}, std::pair{"bk", bk_rel}}) {
    const double r4 = rel[0].to_double();
    const double r6 = rel[1].to_double();
    const double r8 = rel[2].to_double();
    const bool ok = r6 <= 100 * 1e-6 && r4 / r6 > 30 && r4 / r6 < 300 && r6 / r8 > 30 && r6 / r8 < 300;
    if (!ok) r.pass = false;
    data[label] = {{"eps_1e-4", rel[0].to_string(6)}, {"eps_1e-6", rel[1].to_string(6)}, {"eps_1e-8", rel[2].to_string(6)},
                   {"pass", ok}};
    r.detail += std::string(r.detail.empty() ? "" : "; ") + label + " rel(1e-6) = " + rel[1].to_string(3);
  }
  r.data = data;
  return r;
}

CriterionResult bk_factorization(const SuiteOptions& o) {
  CriterionResult r;
  const Bits bits = o.prec.bits;
  const BigComplex beta(BigRational(1, 2), bits);
  const Real rounding = ldexp(Real(1, bits), -(static_cast<long>(bits) - 16));
  Json sets = Json::array();
  r.pass = true;
  long done = 0;
  for (std::uint64_t attempt = 0; done < 3; ++attempt) {
    const auto v = hashed_rationals(o.seed, 1100 + attempt, 4, 6, 4);
    if (v[0] == v[1] || v[2] == v[3]) continue;
    const SuperEigenvalues lambda{{BigComplex(v[0], bits)}, {BigComplex(v[1], bits)}, beta};
    const SuperEigenvalues mu{{BigComplex(v[2], bits)}, {BigComplex(v[3], bits)}, beta};
    const ExpansionResult ex = bk_character_expansion(lambda, mu, 20, o.prec);
    const BigComplex closed = bk_closed_form(lambda, mu, o.prec).value;
    const Real diff = (ex.value - closed).abs();
    const bool ok = ex.tail_bound.sign() >= 0 && diff <= ex.tail_bound + rounding * closed.abs();
    if (!ok) r.pass = false;
    sets.push_back({{"lambda", {to_json(v[0]), to_json(v[1])}},
                    {"mu", {to_json(v[2]), to_json(v[3])}},
                    {"difference", diff.to_string(6)},
                    {"tail_bound", ex.tail_bound.to_string(6)},
                    {"pass", ok}});
    ++done;
  }
  r.detail = "3 eigenvalue sets at 20 boxes";
  r.data = {{"sets", sets}};
  return r;
}

CriterionResult factorial_determinant(const SuiteOptions& o) {
  CriterionResult r;
  long failures = 0;
  for (long i = 0; i < 50; ++i) {
    const long N = 1 + i % 6;
    if (!theorem3_check(random_partition(o.seed, static_cast<std::uint64_t>(i), N, 8), N)) ++failures;
  }
  r.pass = failures == 0;
  r.detail = "50 random partitions, " + std::to_string(failures) + " failures";
  r.data = {{"partitions", 50}, {"failures", failures}};
  return r;
}

// Recomputes the job-parallel criteria with a different worker count and compares the payloads.
CriterionResult determinism(const SuiteOptions& o) {
  CriterionResult r;
  SuiteOptions serial = o;
  serial.jobs = 1;
  SuiteOptions parallel = o;
  parallel.jobs = o.jobs > 1 ? o.jobs : 4;
  bool same = true;
  Json data = Json::array();
  for (int id : {5, 6}) {
    const std::string a = criterion_json(run_criterion(id, serial)).dump();
    const std::string b = criterion_json(run_criterion(id, parallel)).dump();
    same = same && a == b;
    data.push_back({{"criterion", id}, {"identical", a == b}});
  }
  r.pass = same;
  r.detail = "criteria 5 and 6 at jobs=1 and jobs=" + std::to_string(parallel.jobs) + (same ? ": identical" : ": differ");
  r.data = {{"comparisons", data}};
  return r;
}

struct CriterionSpec {
  std::string name;
  std::string tolerance;
  double time_limit;
  std::function<CriterionResult(const SuiteOptions&)> run;
};

const std::vector<CriterionSpec>& specs() {
  static const std::vector<CriterionSpec> table = {
      {"hook-length identity, |t| <= 12", "exact", 10, hook_length},
      {"sigma decomposition, m,n <= 3, |t| <= 10", "exact", 30, sigma_decomposition},
      {"supercharacter = signed tableaux sum, m,n <= 2, |t| <= 6", "exact", 60, supercharacter_consistency},
      {"str(A)^b = sum sigma_t xi_t(A), m,n <= 2, b <= 6", "exact", 120, supertrace_power},
      {"J_0 = J_m for N = 2..8, all m, 10 samples, r = 2, K = 64",
       "rel <= 2 tail/|J_0| + 2^-(bits-64) and < 1e-40", 600, conjecture},
      {"Littlewood-Richardson relation, |p|+|q| <= 8", "residual exactly 0", 300, lr_relation},
      {"special coefficients of J_0 / cross product, N <= 4, k <= 4", "exact", 60, partial_coefficients},
      {"U(1|1) Berezin integration vs closed form, 10 points", "rel <= 2^-200", 60,
       [](const SuiteOptions& o) { return brute_force(o, 1, 10); }},
      {"U(2|1) Berezin integration vs closed form, 5 points", "rel <= 2^-200", 120,
       [](const SuiteOptions& o) { return brute_force(o, 2, 5); }},
      {"confluent limits, LS and BK (2|1)", "rel(1e-6) <= 1e-4, step ratios in (30, 300)", 60, confluent_limits},
      {"BK (1|1) character expansion, 20 boxes", "|diff| <= tail bound + 2^-(bits-16)|I|", 120, bk_factorization},
      {"factorial determinant identity, 50 partitions, N <= 6", "exact", 10, factorial_determinant},
      {"results independent of the worker count", "byte-identical", 600, determinism},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.push_back(s.name);
    return out;
  }();
  return names;
}

CriterionResult run_criterion(int id, const SuiteOptions& options) {
  const CriterionSpec& spec = specs().at(static_cast<std::size_t>(id - 1));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = spec.run(options);
  } catch (const TruncationCapExceeded& e) {
    r = CriterionResult{};
    r.truncation = true;
    r.detail = std::string("truncation cap exceeded: ") + e.what();
  } catch (const std::exception& e) {
    r = CriterionResult{};
    r.detail = std::string("error: ") + e.what();
  }
  r.id = id;
  r.name = spec.name;
  r.tolerance = spec.tolerance;
  r.time_limit = spec.time_limit;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options, const std::function<void(const CriterionResult&)>& progress) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= static_cast<int>(specs().size()); ++id) {
    out.push_back(run_criterion(id, options));
    if (progress) progress(out.back());
  }
  return out;
}

Json criterion_json(const CriterionResult& r) {
  return Json{{"id", r.id},         {"name", r.name},     {"tolerance", r.tolerance}, {"pass", r.pass},
              {"truncation", r.truncation}, {"detail", r.detail}, {"data", r.data}};
}

}  // namespace supergroup::tools
