// Copyright 2026 The lorflats Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lorflats/lorentzian.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <thread>

#include "lorflats/error.hpp"

namespace lorflats {

std::string to_string(const InertiaTriple& t) {
  return "(" + std::to_string(t.n_plus) + ", " + std::to_string(t.n_zero) + ", " +
         std::to_string(t.n_minus) + ")";
}

InertiaTriple inertia(const SymMatrix& a) {
  const UniPoly p = characteristic_polynomial(a);
  const auto& c = p.coefficients();  // constant term first
  InertiaTriple out;
  while (out.n_zero < c.size() && c[out.n_zero] == 0) ++out.n_zero;
  // Every root is real, so the sign changes count the positive roots exactly.
  int previous = 0;
  for (std::size_t i = c.size(); i-- > out.n_zero;) {
    const int s = sign(c[i]);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++out.n_plus;
    previous = s;
  }
  out.n_minus = a.size() - out.n_plus - out.n_zero;
  return out;
}

InertiaTriple inertia(const std::vector<Row>& rows) { return inertia(SymMatrix::from_rows(rows)); }

namespace {

// Some index not reachable from 0 through strictly positive entries.
std::optional<std::size_t> unreachable_from_first(const SymMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return std::nullopt;
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  seen[0] = 1;
  while (!frontier.empty()) {
    const std::size_t u = frontier.front();
    frontier.pop();
    for (std::size_t v = 0; v < n; ++v) {
      if (!seen[v] && v != u && a(u, v) > 0) {
        seen[v] = 1;
        frontier.push(v);
      }
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) return v;
  }
  return std::nullopt;
}

}  // namespace

Check check_irreducible_nonneg_offdiag(const SymMatrix& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a(i, j) < 0) {
        return Check::fail("entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                           to_string(a(i, j)) + " is negative");
      }
    }
  }
  if (auto v = unreachable_from_first(a)) {
    return Check::fail("indices 0 and " + std::to_string(*v) + " are not connected");
  }
  return Check::pass();
}

std::vector<DirectionTuple> sample_direction_tuples(const CoordsPtr& coords, int length, int count,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<DirectionTuple> out;
  const auto n = static_cast<std::size_t>(std::max(length, 0));
  for (int c = 0; c < count; ++c) {
    DirectionTuple tuple;
    tuple.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      tuple.push_back(c == 0 ? interior_point(coords) : random_strictly_submodular(coords, rng));
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

namespace {

// Quadratic obtained by contracting f along the directions in [from, to).
MultiPoly contract(MultiPoly f, const DirectionTuple& tuple, std::size_t from, std::size_t to) {
  for (std::size_t j = to; j-- > from;) f = dir_derivative(f, tuple[j]);
  return f;
}

Rational bilinear(const SymMatrix& h, std::span<const Rational> x, std::span<const Rational> y) {
  Rational total = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (y[j] != 0 && h(i, j) != 0) total += x[i] * h(i, j) * y[j];
    }
  }
  return total;
}

void validate_tuples(const std::vector<DirectionTuple>& samples, Subset k, Subset l,
                     std::size_t length) {
  for (std::size_t s = 0; s < samples.size(); ++s) {
    if (samples[s].size() != length) {
      throw Error(ErrorCode::InvalidParams, "sample " + std::to_string(s) + " has " +
                                                std::to_string(samples[s].size()) +
                                                " directions, expected " + std::to_string(length));
    }
    for (std::size_t i = 0; i < samples[s].size(); ++i) {
      const IntervalVector& v = samples[s][i];
      if (v.coords().lower() != k || v.coords().upper() != l) {
        throw Error(ErrorCode::DirectionNotInCone,
                    "sample " + std::to_string(s) + " direction " + std::to_string(i) +
                        " lives on another interval");
      }
      if (!is_strictly_submodular(v)) {
        throw Error(ErrorCode::DirectionNotInCone, "sample " + std::to_string(s) + " direction " +
                                                       std::to_string(i) +
                                                       " is not strictly submodular");
      }
    }
  }
}

template <typename Fn>
void run_indexed(std::size_t count, int jobs, Fn&& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

SampleResult check_tuple(const MultiPoly& f, const DirectionTuple& tuple) {
  SampleResult out;
  if (f.is_zero()) {
    out.passed = true;
    return out;
  }
  const auto d = static_cast<std::size_t>(f.degree());
  if (tuple.size() != d) {
    throw Error(ErrorCode::DimensionMismatch, "tuple has " + std::to_string(tuple.size()) +
                                                  " directions for degree " + std::to_string(d));
  }
  if (d < 2) {
    out.contraction = contract(f, tuple, 0, d).coefficient(Monomial());
  } else {
    const SymMatrix h = hessian_of_quadratic(contract(f, tuple, 2, d));
    out.contraction = bilinear(h, direction_on_variables(f.variables(), tuple[0]),
                               direction_on_variables(f.variables(), tuple[1]));
    out.hessian = inertia(h);
  }
  if (out.contraction <= 0) {
    out.witness = "(P) contraction " + to_string(out.contraction) + " is not positive";
  } else if (out.hessian && out.hessian->n_plus != 1) {
    out.witness = "(H) inertia " + to_string(*out.hessian) + " needs exactly one positive";
  } else {
    out.passed = true;
  }
  return out;
}

LorentzianCertificate certify_C_lorentzian(PolCache& cache, Subset k, Subset l,
                                           std::vector<DirectionTuple> samples,
                                           std::uint64_t seed, int jobs) {
  const MultiPoly& f = cache.pol(k, l);
  LorentzianCertificate cert;
  cert.lower = k;
  cert.upper = l;
  cert.degree = f.degree();
  cert.seed = seed;
  validate_tuples(samples, k, l, static_cast<std::size_t>(cert.degree));
  cert.samples = std::move(samples);
  cert.results.resize(cert.samples.size());
  run_indexed(cert.samples.size(), jobs,
              [&](std::size_t i) { cert.results[i] = check_tuple(f, cert.samples[i]); });
  cert.verdict = std::all_of(cert.results.begin(), cert.results.end(),
                             [](const SampleResult& r) { return r.passed; });
  return cert;
}

LorentzianCertificate certify_sampled(PolCache& cache, Subset k, Subset l, int count,
                                      std::uint64_t seed, int jobs) {
  const int d = cache.pol(k, l).degree();
  const CoordsPtr coords = IntervalCoords::make(k, l);
  return certify_C_lorentzian(cache, k, l, sample_direction_tuples(coords, d, count, seed), seed,
                              jobs);
}

void require_certified(const LorentzianCertificate& cert) {
  for (std::size_t i = 0; i < cert.results.size(); ++i) {
    if (!cert.results[i].passed) {
      throw Error(ErrorCode::CertificationFailure,
                  "sample " + std::to_string(i) + ": " + cert.results[i].witness);
    }
  }
}

bool has_m_convex_support(const MultiPoly& f) {
  const std::size_t n = f.num_variables();
  std::set<std::vector<unsigned>> support;
  for (const auto& [m, c] : f.terms()) support.insert(m.dense(n));
  for (const auto& a : support) {
    for (const auto& b : support) {
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] <= b[i]) continue;
        bool exchanged = false;
        for (std::size_t j = 0; j < n && !exchanged; ++j) {
          if (a[j] >= b[j]) continue;
          auto moved = a;
          --moved[i];
          ++moved[j];
          exchanged = support.count(moved) > 0;
        }
        if (!exchanged) return false;
      }
    }
  }
  return true;
}

Check check_lorentzian_orthant(const MultiPoly& f) {
  if (f.is_zero()) return Check::pass();
  if (!f.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, "polynomial is not homogeneous");
  for (const auto& [m, c] : f.terms()) {
    if (c < 0) return Check::fail("negative coefficient " + to_string(c));
  }
  const int d = f.degree();
  if (d <= 1) return Check::pass();
  if (!has_m_convex_support(f)) return Check::fail("support is not M-convex");

  // Every derivative of order d - 2, built one variable at a time with
  // nondecreasing indices.
  Check result = Check::pass();
  std::vector<std::size_t> gamma;
  auto visit = [&](auto&& self, const MultiPoly& g, std::size_t start) -> void {
    if (!result.ok || g.is_zero()) return;
    if (static_cast<int>(gamma.size()) == d - 2) {
      const InertiaTriple in = inertia(hessian_of_quadratic(g));
      if (in.n_plus > 1) {
        std::string where;
        for (std::size_t v : gamma) where += " d/d" + std::to_string(v);
        result = Check::fail("Hessian after" + (where.empty() ? std::string(" nothing") : where) +
                             " has inertia " + to_string(in));
      }
      return;
    }
    for (std::size_t v = start; v < g.num_variables(); ++v) {
      gamma.push_back(v);
      self(self, partial(g, v), v);
      gamma.pop_back();
    }
  };
  visit(visit, f, 0);
  return result;
}

Check product_check(const MultiPoly& f, const MultiPoly& g,
                    std::span<const IntervalVector> points) {
  if (f.is_zero() || g.is_zero()) return Check::pass();
  if (points.empty()) throw Error(ErrorCode::InvalidParams, "need at least one sample point");
  const MultiPoly h = f * g;
  auto run = [&](const MultiPoly& p, const char* name) -> Check {
    const auto d = static_cast<std::size_t>(p.degree());
    for (std::size_t j = 0; j < points.size(); ++j) {
      DirectionTuple tuple;
      for (std::size_t i = 0; i < d; ++i) tuple.push_back(points[(j + i) % points.size()]);
      const SampleResult r = check_tuple(p, tuple);
      if (!r.passed) {
        return Check::fail(std::string(name) + " fails at sample " + std::to_string(j) + ": " +
                           r.witness);
      }
    }
    return Check::pass();
  };
  if (Check c = run(f, "f"); !c) return c;
  if (Check c = run(g, "g"); !c) return c;
  return run(h, "fg");
}

EquivalenceReport bh233_report(const MultiPoly& g, std::span<const Rational> x) {
  if (!g.is_homogeneous()) throw Error(ErrorCode::Inhomogeneous, "polynomial is not homogeneous");
  const Rational value = g.evaluate(x);
  if (value <= 0) {
    throw Error(ErrorCode::NonpositiveValue, "g(x) = " + to_string(value) + " is not positive");
  }
  const int d = g.degree();
  const SymMatrix h = hessian_at(g, x);
  const std::vector<Rational> grad = gradient_at(g, x);
  SymMatrix form(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = i; j < h.size(); ++j) {
      form.set(i, j, d * value * h(i, j) - (d - 1) * grad[i] * grad[j]);
    }
  }
  EquivalenceReport out;
  out.hessian = inertia(h);
  out.form = inertia(form);
  out.one_positive = out.hessian.n_plus == 1;
  out.form_nsd = out.form.n_plus == 0;
  return out;
}

EquivalenceReport bh233_report(const MultiPoly& g, const IntervalVector& x) {
  return bh233_report(g, direction_on_variables(g.variables(), x));
}

std::string_view to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::Pass:
      return "pass";
    case HypothesisStatus::Fail:
      return "fail";
    case HypothesisStatus::NotApplicable:
      return "n/a";
  }
  return "?";
}

bool EngineReport::ok() const {
  return std::none_of(hypotheses.begin(), hypotheses.end(),
                      [](const HypothesisResult& h) { return h.status == HypothesisStatus::Fail; });
}

EngineReport engine_hypotheses_report(PolCache& cache, Subset k, Subset l,
                                      const std::vector<DirectionTuple>& samples,
                                      int lineality_trials, std::uint64_t seed) {
  const MultiPoly& f = cache.pol(k, l);
  EngineReport report;
  report.degree = f.degree();
  const int d = report.degree;
  validate_tuples(samples, k, l, static_cast<std::size_t>(d));

  auto result = [](int number, std::string name, const Check& c) {
    return HypothesisResult{number, std::move(name),
                            c.ok ? HypothesisStatus::Pass : HypothesisStatus::Fail, c.witness};
  };

  report.hypotheses.push_back(
      result(1, "lineality invariance", check_lineality_sampled(cache, k, l, lineality_trials, seed)));

  Check positive = Check::pass();
  for (std::size_t s = 0; s < samples.size() && positive.ok; ++s) {
    const Rational value = contract(f, samples[s], 0, samples[s].size()).coefficient(Monomial());
    if (value <= 0) {
      positive = Check::fail("sample " + std::to_string(s) + ": contraction " + to_string(value));
    }
  }
  report.hypotheses.push_back(result(2, "positive contractions", positive));

  if (d < 2) {
    report.hypotheses.push_back({3, "irreducible Hessians", HypothesisStatus::NotApplicable, ""});
  } else {
    Check irreducible = Check::pass();
    for (std::size_t s = 0; s < samples.size() && irreducible.ok; ++s) {
      const SymMatrix h = hessian_of_quadratic(contract(f, samples[s], 0, samples[s].size() - 2));
      if (Check c = check_irreducible_nonneg_offdiag(h); !c) {
        const auto& vars = f.variables();
        if (auto v = unreachable_from_first(h)) {
          c.witness = to_string(vars[0]) + " and " + to_string(vars[*v]) + " are not connected";
        }
        irreducible = Check::fail("sample " + std::to_string(s) + ": " + c.witness);
      }
    }
    report.hypotheses.push_back(result(3, "irreducible Hessians", irreducible));
  }

  if (d < 3) {
    report.hypotheses.push_back(
        {4, "partial derivatives certify", HypothesisStatus::NotApplicable, ""});
  } else {
    Check partials = Check::pass();
    for (std::size_t v = 0; v < f.num_variables() && partials.ok; ++v) {
      const MultiPoly df = partial(f, v);
      for (std::size_t s = 0; s < samples.size() && partials.ok; ++s) {
        const DirectionTuple shorter(samples[s].begin(), samples[s].end() - 1);
        const SampleResult r = check_tuple(df, shorter);
        if (!r.passed) {
          partials = Check::fail("d/dt" + to_string(f.variables()[v]) + " at sample " +
                                 std::to_string(s) + ": " + r.witness);
        }
      }
    }
    report.hypotheses.push_back(result(4, "partial derivatives certify", partials));
  }
  return report;
}

std::vector<Rational> bivariate_normalized_coefficients(const MultiPoly& f) {
  if (f.is_zero()) return {};
  if (f.num_variables() != 2 || !f.is_homogeneous()) {
    throw Error(ErrorCode::DimensionMismatch, "expected a homogeneous bivariate polynomial");
  }
  const auto d = static_cast<unsigned>(f.degree());
  std::vector<Rational> out(d + 1);
  for (unsigned k = 0; k <= d; ++k) {
    const Monomial m = Monomial::variable(0, d - k) * Monomial::variable(1, k);
    out[k] = f.coefficient(m) / Rational(binomial(d, k));
  }
  return out;
}

}  // namespace lorflats
