// Copyright 2026 The Bourbaki Authors
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

#include "bourbaki/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <chrono>
#include <exception>
#include <functional>
#include <optional>
#include <utility>

#include "json.hpp"

#include "bourbaki/affine.hpp"
#include "bourbaki/antiderivative.hpp"
#include "bourbaki/errors.hpp"
#include "bourbaki/function.hpp"
#include "bourbaki/geometry.hpp"
#include "bourbaki/random.hpp"
#include "bourbaki/ternary.hpp"

namespace bourbaki {
namespace {

constexpr std::array<std::string_view, 6> kSuiteNames{"all", "symmetry", "scaling", "integrals", "geometry", "family"};

// Failure detail for one case; empty optional means the case passed.
struct Mismatch {
  std::string input;
  std::string expected;
  std::string actual;
};
using Outcome = std::optional<Mismatch>;

Outcome compare(std::string input, const Rational& expected, const Rational& actual) {
  if (expected == actual) return std::nullopt;
  return Mismatch{std::move(input), expected.str(), actual.str()};
}

Rational q(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

std::uint64_t check_seed(std::uint64_t seed, std::string_view check) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (char c : check) h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return seed ^ h;
}

class Recorder {
 public:
  Recorder(VerifyReport& report, const VerifyOptions& options) : report_(report), options_(options) {}

  const VerifyOptions& options() const { return options_; }
  SplitMix64 rng(std::string_view check) const { return SplitMix64(check_seed(options_.seed, check)); }

  void record(std::string_view check, Outcome outcome) {
    ++report_.cases;
    if (outcome) {
      report_.failures.push_back({std::string(check), std::move(outcome->input), std::move(outcome->expected),
                                  std::move(outcome->actual)});
    }
  }

  void expect(std::string_view check, std::string input, bool ok, std::string expected, std::string actual) {
    record(check, ok ? Outcome{} : Outcome{Mismatch{std::move(input), std::move(expected), std::move(actual)}});
  }

  // Evaluates fn on every input, possibly in parallel, and records the
  // outcomes in input order.
  template <typename Input>
  void batch(std::string_view check, const std::vector<Input>& inputs, const std::function<Outcome(const Input&)>& fn) {
    std::vector<Outcome> outcomes(inputs.size());
    const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      try {
        outcomes[idx] = fn(inputs[idx]);
      } catch (const std::exception& e) {
        outcomes[idx] = Mismatch{"case " + std::to_string(idx), "no exception", std::string("exception: ") + e.what()};
      }
    }
    for (auto& o : outcomes) record(check, std::move(o));
  }

 private:
  VerifyReport& report_;
  const VerifyOptions& options_;
};

std::vector<Rational> draw_rationals(SplitMix64 rng, std::size_t count, std::uint64_t max_den) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(rng.unit_rational(max_den));
  return out;
}

std::vector<Rational> draw_ternary(SplitMix64 rng, std::size_t count, unsigned max_level) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(rng.ternary_rational(max_level));
  return out;
}

struct ScaledInput {
  Rational x;
  unsigned i;
};

std::vector<ScaledInput> draw_scaled(SplitMix64 rng, std::size_t count, unsigned min_i, unsigned max_i,
                                     std::uint64_t max_den) {
  std::vector<ScaledInput> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    Rational x = rng.unit_rational(max_den);
    out.push_back({std::move(x), static_cast<unsigned>(rng.between(min_i, max_i))});
  }
  return out;
}

std::string scaled_label(const ScaledInput& in) { return "x=" + in.x.str() + " i=" + std::to_string(in.i); }

// ---------------------------------------------------------------------------
// numeric foundation

void check_ternary(Recorder& rec) {
  const auto xs = draw_rationals(rec.rng("ternary.roundtrip"), rec.options().cases, 1000000);
  rec.batch<Rational>("ternary.roundtrip", xs, [](const Rational& x) {
    return compare(x.str(), x, from_ternary(to_ternary(x)));
  });
  rec.batch<Rational>("ternary.period", xs, [](const Rational& x) -> Outcome {
    const TernaryExpansion e = to_ternary(x);
    if (!e.is_canonical()) return Mismatch{x.str(), "canonical expansion", "non-canonical"};
    if (e.terminates() || x == Rational(1)) return std::nullopt;
    BigInt free_part;
    const BigInt den = x.den();
    const auto v3 = mpz_remove(free_part.get_mpz_t(), den.get_mpz_t(), BigInt(3).get_mpz_t());
    const auto len = static_cast<unsigned long>(e.period().size());
    BigInt residue;
    mpz_powm_ui(residue.get_mpz_t(), BigInt(3).get_mpz_t(), len, free_part.get_mpz_t());
    const bool ok = e.preperiod().size() == v3 && residue == 1 && BigInt(len) <= den;
    if (ok) return std::nullopt;
    return Mismatch{x.str(), "3^period = 1 mod q', preperiod = v3(q), period <= q",
                    "period " + std::to_string(len) + ", preperiod " + std::to_string(e.preperiod().size())};
  });
}

AffineMap random_map(SplitMix64& rng) {
  Rational slope = rng.unit_rational(1000) * q(3, 1) - q(1, 1);
  if (rng.next() % 2) slope = -slope;
  return {slope, rng.unit_rational(1000) - q(1, 2)};
}

void check_affine(Recorder& rec) {
  SplitMix64 rng = rec.rng("affine.associative");
  for (std::size_t k = 0; k < rec.options().cases; ++k) {
    const AffineMap a = random_map(rng), b = random_map(rng), c = random_map(rng);
    const AffineMap left = affine_compose(affine_compose(a, b), c);
    const AffineMap right = affine_compose(a, affine_compose(b, c));
    rec.expect("affine.associative", "case " + std::to_string(k), left == right,
               left.slope.str() + " " + left.intercept.str(), right.slope.str() + " " + right.intercept.str());
  }
  rng = rec.rng("affine.fixed_point");
  for (std::size_t k = 0; k < rec.options().cases; ++k) {
    const AffineMap m = random_map(rng);
    if (m.slope == Rational(1)) continue;
    const Rational v = affine_fixed_point(m);
    rec.record("affine.fixed_point", compare(m.slope.str() + "*v+" + m.intercept.str(), v, m(v)));
  }
}

// ---------------------------------------------------------------------------
// f

void check_f_symmetry(Recorder& rec) {
  const auto ternary = draw_ternary(rec.rng("symmetry.ternary"), rec.options().cases, 12);
  rec.batch<Rational>("symmetry.ternary", ternary, [](const Rational& x) {
    return compare(x.str(), Rational(1), eval_exact(Rational(1) - x) + eval_exact(x));
  });
  const auto rationals = draw_rationals(rec.rng("symmetry.rational"), rec.options().cases, 10000);
  rec.batch<Rational>("symmetry.rational", rationals, [](const Rational& x) {
    return compare(x.str(), Rational(1), eval_exact(Rational(1) - x) + eval_exact(x));
  });
  rec.batch<Rational>("range", rationals, [](const Rational& x) -> Outcome {
    const Rational v = eval_exact(x);
    if (v >= Rational(0) && v <= Rational(1)) return std::nullopt;
    return Mismatch{x.str(), "value in [0,1]", v.str()};
  });
}

void check_f_scaling(Recorder& rec) {
  const std::size_t n = rec.options().cases;
  const Rational two_thirds = q(2, 3);
  const auto p1 = draw_scaled(rec.rng("scaling.f.lower"), n, 0, 8, 1000);
  rec.batch<ScaledInput>("scaling.f.lower", p1, [&](const ScaledInput& in) {
    const Rational s = Rational(1) / Rational(pow3(in.i));
    return compare(scaled_label(in), pow(two_thirds, in.i) * eval_exact(in.x), eval_exact(in.x * s));
  });
  const auto p2 = draw_scaled(rec.rng("scaling.f.reflected"), n, 1, 8, 1000);
  rec.batch<ScaledInput>("scaling.f.reflected", p2, [&](const ScaledInput& in) {
    const Rational s = Rational(1) / Rational(pow3(in.i));
    const Rational coeff = Rational(pow(BigInt(2), in.i - 1)) * s;
    return compare(scaled_label(in), coeff * (Rational(1) + eval_exact(in.x)), eval_exact((Rational(2) - in.x) * s));
  });
  const auto p3 = draw_scaled(rec.rng("scaling.f.shifted"), n, 1, 8, 1000);
  rec.batch<ScaledInput>("scaling.f.shifted", p3, [&](const ScaledInput& in) {
    const Rational s = Rational(1) / Rational(pow3(in.i));
    const Rational coeff = Rational(pow(BigInt(2), in.i - 1)) * s;
    return compare(scaled_label(in), pow(two_thirds, in.i) * eval_exact(in.x) + coeff,
                   eval_exact((Rational(2) + in.x) * s));
  });
}

void check_construction(Recorder& rec) {
  for (unsigned i = 0; i <= 8; ++i) {
    const IterateTable table = build_iterate(i);
    std::vector<std::size_t> ks(table.size());
    for (std::size_t k = 0; k < ks.size(); ++k) ks[k] = k;
    rec.batch<std::size_t>("construction.f_table", ks, [&](const std::size_t& k) {
      const Rational x = table.x(k);
      return compare("i=" + std::to_string(i) + " x=" + x.str(), eval_exact(x), eval_iterate(table, x));
    });
  }
  IterateTable table = build_iterate(0);
  for (unsigned i = 0; i <= 7; ++i) {
    const IterateTable refined = ifs_refine(table);
    const IterateTable built = build_iterate(i + 1);
    rec.expect("ifs.equivalence", "i=" + std::to_string(i), refined == built, "build_iterate(" + std::to_string(i + 1) + ")",
               refined == built ? "equal" : "differs");
    table = built;
  }
}

void check_f_closed_forms(Recorder& rec) {
  for (unsigned c = 0; c < 6; ++c) {
    const auto vc = static_cast<ValueCase>(c);
    const bool uses_j = vc == ValueCase::v || vc == ValueCase::vi;
    for (unsigned i = 1; i <= 10; ++i) {
      for (unsigned j = uses_j ? i + 1 : 0; j <= (uses_j ? 10U : 0U); ++j) {
        const ClosedForm cf = uses_j ? closed_form_value(vc, i, j) : closed_form_value(vc, i);
        std::string label = "case " + std::string(to_string(vc)) + " i=" + std::to_string(i);
        if (uses_j) label += " j=" + std::to_string(j);
        rec.record("closed_form.f", compare(label, cf.value, eval_exact(cf.x)));
      }
    }
  }
  const std::array<std::pair<Rational, Rational>, 5> known{{
      {q(1, 2), q(1, 2)}, {q(1, 3), q(2, 3)}, {q(2, 3), q(1, 3)}, {q(1, 4), q(2, 5)}, {q(1, 7), q(8, 23)}}};
  for (const auto& [x, v] : known) rec.record("values.f", compare(x.str(), v, eval_exact(x)));
  // f(1/7) from the construction alone: the level-40 segment brackets it.
  const IterateSegment seg = containing_segment(40, q(1, 7));
  const bool ok = seg.y_min() <= q(8, 23) && q(8, 23) <= seg.y_max() && seg.height() <= pow(q(2, 3), 40);
  rec.expect("values.f_bracket", "x=1/7 level=40", ok, "8/23 in [" + seg.y_min().str() + ", " + seg.y_max().str() + "]",
             ok ? "contained" : "not contained");
}

// ---------------------------------------------------------------------------
// F

void check_F_identities(Recorder& rec) {
  const std::size_t n = rec.options().cases;
  const Rational two_ninths = q(2, 9);
  const auto p4 = draw_scaled(rec.rng("scaling.F.lower"), n, 0, 8, 1000);
  rec.batch<ScaledInput>("scaling.F.lower", p4, [&](const ScaledInput& in) {
    const Rational s = Rational(1) / Rational(pow3(in.i));
    return compare(scaled_label(in), pow(two_ninths, in.i) * eval_F_exact(in.x), eval_F_exact(in.x * s));
  });
  const auto p5 = draw_scaled(rec.rng("scaling.F.reflected"), n, 1, 8, 1000);
  rec.batch<ScaledInput>("scaling.F.reflected", p5, [&](const ScaledInput& in) {
    const Rational s = Rational(1) / Rational(pow3(in.i));
    const Rational lead = Rational(pow(BigInt(2), in.i - 1)) / Rational(pow(BigInt(9), in.i));
    return compare(scaled_label(in), lead * (in.x + eval_F_exact(in.x)),
                   eval_F_exact(Rational(2) * s) - eval_F_exact((Rational(2) - in.x) * s));
  });
  const auto p6 = draw_scaled(rec.rng("scaling.F.shifted"), n, 1, 8, 1000);
  rec.batch<ScaledInput>("scaling.F.shifted", p6, [&](const ScaledInput& in) {
    const Rational s = Rational(1) / Rational(pow3(in.i));
    const Rational lead = Rational(pow(BigInt(2), in.i - 1)) / Rational(pow(BigInt(9), in.i));
    return compare(scaled_label(in), lead * in.x + pow(two_ninths, in.i) * eval_F_exact(in.x),
                   eval_F_exact((Rational(2) + in.x) * s) - eval_F_exact(Rational(2) * s));
  });
}

void check_integrals(Recorder& rec) {
  const std::size_t n = rec.options().cases;
  const auto xs = draw_rationals(rec.rng("integral.symmetric"), n, 10000);
  rec.batch<Rational>("integral.symmetric", xs, [](const Rational& x) {
    return compare(x.str(), integral_symmetric(x), eval_F_exact(Rational(1) - x) - eval_F_exact(x));
  });

  for (unsigned c = 0; c < 4; ++c) {
    for (unsigned i = 1; i <= 10; ++i) {
      const auto ic = static_cast<IntegralCase>(c);
      const IntegralClosedForm cf = integral_closed_form(ic, i);
      rec.record("closed_form.F", compare("case " + std::string(to_string(ic)) + " i=" + std::to_string(i), cf.value,
                                          eval_F_exact(cf.x)));
    }
  }
  const std::array<std::pair<Rational, Rational>, 5> known{
      {{q(1, 1), q(1, 2)}, {q(1, 3), q(1, 9)}, {q(2, 3), q(5, 18)}, {q(1, 4), q(1, 14)}, {q(1, 2), q(1, 5)}}};
  for (const auto& [x, v] : known) rec.record("values.F", compare(x.str(), v, eval_F_exact(x)));

  for (unsigned i = 0; i <= 10; ++i) {
    const AntiderivativeTable table = build_F_iterate(i);
    bool monotone = true;
    for (std::size_t k = 0; k + 1 < table.size() && monotone; ++k) monotone = table.y(k) <= table.y(k + 1);
    rec.expect("F.monotone", "i=" + std::to_string(i), monotone, "nondecreasing", monotone ? "nondecreasing" : "decreasing step");
    if (i > 8) continue;
    std::vector<std::size_t> ks(table.size());
    for (std::size_t k = 0; k < ks.size(); ++k) ks[k] = k;
    rec.batch<std::size_t>("F.table_agreement", ks, [&](const std::size_t& k) {
      const Rational x = table.x(k);
      return compare("i=" + std::to_string(i) + " x=" + x.str(), eval_F_exact(x), table.y(k));
    });
  }

  // Central difference at h = 3^-12 against f.
  const Rational h = Rational(BigInt(1), pow3(12));
  const Rational tol = q(1, 100);
  SplitMix64 rng = rec.rng("F.derivative");
  std::vector<Rational> points;
  const std::size_t count = std::max<std::size_t>(1, n / 10);
  while (points.size() < count) {
    Rational x = rng.ternary_rational(12);
    if (x - h >= Rational(0) && x + h <= Rational(1)) points.push_back(std::move(x));
  }
  rec.batch<Rational>("F.derivative", points, [&](const Rational& x) -> Outcome {
    const Rational slope = (eval_F_exact(x + h) - eval_F_exact(x - h)) / (Rational(2) * h);
    const Rational fx = eval_exact(x);
    if ((slope - fx).abs() <= tol) return std::nullopt;
    return Mismatch{x.str(), "within 1/100 of " + fx.str(), slope.str()};
  });
}

// ---------------------------------------------------------------------------
// geometry

void check_geometry(Recorder& rec) {
  std::vector<BoxCountReport> reports;
  for (unsigned i = 0; i <= 7; ++i) {
    reports.push_back(box_count(i));
    rec.record("box_count", compare("i=" + std::to_string(i), Rational(pow(BigInt(5), i)), Rational(reports.back().count)));
    if (i > 0) {
      rec.record("box_count.recurrence", compare("i=" + std::to_string(i), Rational(5) * Rational(reports[i - 1].count),
                                                 Rational(reports.back().count)));
      const double est = dimension_estimate(std::span(reports).first(i + 1));
      const double diff = std::abs(est - log3_of_5());
      rec.expect("dimension", "i=" + std::to_string(i), diff < 1e-12, "log_3 5 within 1e-12",
                 std::to_string(est));
    }
  }

  for (unsigned i = 0; i <= 10; ++i) {
    const auto rects = cover_level(i);
    Rational area(0);
    for (const auto& r : rects) area += r.area();
    rec.record("cover.area", compare("i=" + std::to_string(i), pow(q(5, 9), i), area));
  }
  for (unsigned i = 0; i <= 6; ++i) {
    const auto rects = cover_level(i);
    for (unsigned j = i; j <= i + 2; ++j) {
      const IterateTable table = build_iterate(j);
      const std::size_t per_cell = table.size() / rects.size();
      bool inside = true;
      for (std::size_t k = 0; k < table.size() && inside; ++k) {
        const std::size_t cell = std::min(k / std::max<std::size_t>(per_cell, 1), rects.size() - 1);
        inside = rects[cell].contains(table.x(k), table.y(k));
      }
      rec.expect("cover.containment", "i=" + std::to_string(i) + " j=" + std::to_string(j), inside,
                 "all breakpoints inside", inside ? "all breakpoints inside" : "breakpoint outside");
    }
  }

  for (unsigned i = 0; i <= 8; ++i) {
    rec.record("mass.total", compare("i=" + std::to_string(i), Rational(1), mass_measure(i).total()));
    if (i == 0) continue;
    const bool ok = mass_bound_check(i);
    rec.expect("mass.bound", "i=" + std::to_string(i), ok, "true", ok ? "true" : "false");
  }

  const BigFloat chord = chord_length();
  std::optional<BigFloat> previous;
  for (unsigned i = 0; i <= 10; ++i) {
    const ArcLengthReport report = arc_length(i);
    const std::string label = "i=" + std::to_string(i);
    rec.expect("arc_length.bounds", label, chord <= report.length && report.length.compare(q(3, 2)) < 0,
               "sqrt(5)/2 <= L < 3/2", report.length.to_fixed(30));
    rec.record("arc_length.triangle", compare(label, q(3, 2), report.triangle_bound));
    if (previous) {
      rec.expect("arc_length.increasing", label, *previous < report.length, "> " + previous->to_fixed(30),
                 report.length.to_fixed(30));
    }
    previous = report.length;
  }
}

// ---------------------------------------------------------------------------
// family

void check_family(Recorder& rec) {
  const FamilyParam classical(Rational::parse("2/3"));
  std::vector<Rational> values;
  for (unsigned c = 0; c < 4; ++c) {
    for (unsigned i = 1; i <= 10; ++i) values.push_back(closed_form_value(static_cast<ValueCase>(c), i).x);
  }
  for (long d : {2L, 3L, 4L, 5L, 7L, 11L, 13L}) {
    for (long k = 0; k <= d; ++k) values.push_back(q(k, d));
  }
  rec.batch<Rational>("family.classical", values, [&](const Rational& x) {
    return compare(x.str(), eval_exact(x), eval_exact(x, classical));
  });

  SplitMix64 rng = rec.rng("family");
  const std::size_t params = std::max<std::size_t>(1, rec.options().cases / 10);
  struct FamilyInput {
    Rational a;
    Rational x;
    unsigned i;
  };
  std::vector<FamilyInput> inputs;
  for (std::size_t k = 0; k < params; ++k) {
    Rational a = rng.open_unit_rational(50);
    for (int r = 0; r < 5; ++r) {
      Rational x = rng.unit_rational(200);
      inputs.push_back({a, std::move(x), static_cast<unsigned>(rng.between(1, 6))});
    }
  }
  auto label = [](const FamilyInput& in) { return "a=" + in.a.str() + " x=" + in.x.str() + " i=" + std::to_string(in.i); };
  rec.batch<FamilyInput>("family.symmetry", inputs, [&](const FamilyInput& in) {
    const FamilyParam p(in.a);
    return compare(label(in), Rational(1), eval_exact(Rational(1) - in.x, p) + eval_exact(in.x, p));
  });
  rec.batch<FamilyInput>("family.scaling", inputs, [&](const FamilyInput& in) {
    const FamilyParam p(in.a);
    const Rational s = Rational(1) / Rational(pow3(in.i));
    return compare(label(in), pow(in.a, in.i) * eval_exact(in.x, p), eval_exact(in.x * s, p));
  });
  rec.batch<FamilyInput>("family.reflected", inputs, [&](const FamilyInput& in) {
    const FamilyParam p(in.a);
    const Rational s = Rational(1) / Rational(pow3(in.i));
    const Rational ai = pow(in.a, in.i);
    const Rational ai1 = pow(in.a, in.i - 1);
    return compare(label(in), (Rational(2) * ai - ai1) * eval_exact(in.x, p) + (ai1 - ai),
                   eval_exact((Rational(2) - in.x) * s, p));
  });
  rec.batch<FamilyInput>("family.shifted", inputs, [&](const FamilyInput& in) {
    const FamilyParam p(in.a);
    const Rational s = Rational(1) / Rational(pow3(in.i));
    const Rational ai = pow(in.a, in.i);
    return compare(label(in), ai * eval_exact(in.x, p) + (pow(in.a, in.i - 1) - ai),
                   eval_exact((Rational(2) + in.x) * s, p));
  });
  for (std::size_t k = 0; k < std::min<std::size_t>(params, 10); ++k) {
    const FamilyParam p(inputs[5 * k].a);
    const IterateTable table = build_iterate(5, p);
    for (std::size_t j = 0; j < table.size(); ++j) {
      rec.record("family.table", compare("a=" + p.a().str() + " x=" + table.x(j).str(), eval_exact(table.x(j), p), table.y(j)));
    }
  }
}

void run_checks(Suite suite, Recorder& rec) {
  switch (suite) {
    case Suite::symmetry:
      check_f_symmetry(rec);
      check_ternary(rec);
      break;
    case Suite::scaling:
      check_f_scaling(rec);
      check_F_identities(rec);
      check_affine(rec);
      check_construction(rec);
      break;
    case Suite::integrals:
      check_f_closed_forms(rec);
      check_integrals(rec);
      break;
    case Suite::geometry:
      check_geometry(rec);
      break;
    case Suite::family:
      check_family(rec);
      break;
    case Suite::all:
      for (Suite s : {Suite::symmetry, Suite::scaling, Suite::integrals, Suite::geometry, Suite::family}) {
        run_checks(s, rec);
      }
      break;
  }
}

}  // namespace

Suite parse_suite(std::string_view text) {
  for (std::size_t k = 0; k < kSuiteNames.size(); ++k) {
    if (text == kSuiteNames[k]) return static_cast<Suite>(k);
  }
  throw ParseError("unknown suite '" + std::string(text) + "'");
}

std::string_view to_string(Suite s) { return kSuiteNames[static_cast<std::size_t>(s)]; }

VerifyReport run_suite(Suite suite, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = std::string(to_string(suite));
  Recorder rec(report, options);
  run_checks(suite, rec);
  report.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const VerifyReport& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["cases"] = report.cases;
  doc["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    nlohmann::ordered_json item;
    item["check"] = f.check;
    item["input"] = f.input;
    item["expected"] = f.expected;
    item["actual"] = f.actual;
    doc["failures"].push_back(std::move(item));
  }
  if (include_timing) doc["elapsed_ms"] = report.elapsed_ms;
  return doc.dump(2);
}

}  // namespace bourbaki
