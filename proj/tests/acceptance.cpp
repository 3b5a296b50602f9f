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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bourbaki/antiderivative.hpp"
#include "bourbaki/cli.hpp"
#include "bourbaki/function.hpp"
#include "bourbaki/geometry.hpp"
#include "bourbaki/random.hpp"

using namespace bourbaki;

namespace {

using Clock = std::chrono::steady_clock;

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }
Rational three(unsigned i) { return Rational(pow3(i)); }
Rational half_power(unsigned i, long base) { return Rational(pow(BigInt(2), i - 1)) / Rational(pow(BigInt(base), i)); }

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    ok_ = ok_ && ok;
  }

  void within(double seconds, double limit) {
    std::ostringstream s;
    s << "runtime " << seconds << " s exceeds " << limit << " s";
    expect(seconds < limit, s.str());
  }

  bool ok() const { return ok_; }
  const std::string& title() const { return title_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::string title_;
  bool ok_ = true;
  std::vector<std::string> failures_;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void exact_values(Criterion& c) {
  c.expect(eval_exact(q(1, 2)) == q(1, 2), "f(1/2)");
  c.expect(eval_exact(q(1, 3)) == q(2, 3), "f(1/3)");
  c.expect(eval_exact(q(2, 3)) == q(1, 3), "f(2/3)");
  for (ValueCase vc : {ValueCase::i, ValueCase::ii, ValueCase::iii, ValueCase::iv})
    for (unsigned i = 1; i <= 10; ++i) {
      const ClosedForm cf = closed_form_value(vc, i);
      c.expect(eval_exact(cf.x) == cf.value, "case " + std::string(to_string(vc)) + " i=" + std::to_string(i));
    }
  for (ValueCase vc : {ValueCase::v, ValueCase::vi})
    for (unsigned i = 1; i <= 10; ++i)
      for (unsigned j = i + 1; j <= 10; ++j) {
        const ClosedForm cf = closed_form_value(vc, i, j);
        c.expect(eval_exact(cf.x) == cf.value,
                 "case " + std::string(to_string(vc)) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
      }
}

void seventh(Criterion& c) {
  c.expect(eval_exact(q(1, 7)) == q(8, 23), "fixed point");
  const IterateSegment s = containing_segment(40, q(1, 7));
  c.expect(s.x_lo <= q(1, 7) && q(1, 7) <= s.x_hi, "segment contains 1/7");
  c.expect(s.y_min() <= q(8, 23) && q(8, 23) <= s.y_max(), "bracket contains 8/23");
  c.expect(s.height() <= pow(q(2, 3), 40), "bracket width");
}

void symmetry(Criterion& c) {
  const auto start = Clock::now();
  SplitMix64 rng(42);
  for (int k = 0; k < 1000; ++k) {
    const Rational x = rng.unit_rational(10000);
    c.expect(eval_exact(Rational(1) - x) + eval_exact(x) == Rational(1), "symmetry at " + x.str());
  }
  for (unsigned i = 1; i <= 8; ++i)
    for (int k = 0; k < 100; ++k) {
      const Rational x = rng.unit_rational(10000);
      const Rational fx = eval_exact(x);
      c.expect(eval_exact(x / three(i)) == pow(q(2, 3), i) * fx, "scaling at " + x.str());
      c.expect(eval_exact((Rational(2) - x) / three(i)) == half_power(i, 3) * (Rational(1) + fx),
               "reflected scaling at " + x.str());
      c.expect(eval_exact((Rational(2) + x) / three(i)) == pow(q(2, 3), i) * fx + half_power(i, 3),
               "shifted scaling at " + x.str());
    }
  c.within(seconds_since(start), 10);
}

void antiderivative(Criterion& c) {
  c.expect(eval_F_exact(Rational(1)) == q(1, 2), "F(1)");
  c.expect(eval_F_exact(q(1, 3)) == q(1, 9), "F(1/3)");
  c.expect(eval_F_exact(q(2, 3)) == q(5, 18), "F(2/3)");
  c.expect(eval_F_exact(q(1, 4)) == q(1, 14), "F(1/4)");
  c.expect(eval_F_exact(q(1, 2)) == q(1, 5), "F(1/2)");
  for (IntegralCase ic : {IntegralCase::i, IntegralCase::ii, IntegralCase::iii, IntegralCase::iv})
    for (unsigned i = 1; i <= 10; ++i) {
      const IntegralClosedForm cf = integral_closed_form(ic, i);
      c.expect(eval_F_exact(cf.x) == cf.value, "case " + std::string(to_string(ic)) + " i=" + std::to_string(i));
    }
  SplitMix64 rng(43);
  for (int k = 0; k < 1000; ++k) {
    const Rational x = rng.unit_rational(10000);
    c.expect(eval_F_exact(Rational(1) - x) - eval_F_exact(x) == q(1, 2) - x, "integral identity at " + x.str());
  }
}

void derivative(Criterion& c) {
  const auto start = Clock::now();
  const Rational h = Rational(1) / three(12);
  const Rational tol = q(1, 100);
  SplitMix64 rng(44);
  for (int k = 0; k < 100; ++k) {
    const Rational x = h + rng.unit_rational(100000) * (Rational(1) - h - h);
    const Rational slope = (eval_F_exact(x + h) - eval_F_exact(x - h)) / (h + h);
    c.expect((slope - eval_exact(x)).abs() <= tol, "difference quotient at " + x.str());
  }
  c.within(seconds_since(start), 10);
}

void geometry(Criterion& c) {
  const auto start = Clock::now();
  std::vector<BoxCountReport> reports;
  for (unsigned i = 0; i <= 7; ++i) {
    reports.push_back(box_count(i));
    c.expect(reports.back().count == pow(BigInt(5), i), "box count i=" + std::to_string(i));
  }
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const double estimate = dimension_estimate(std::span(reports).subspan(i, 1));
    c.expect(std::abs(estimate - log3_of_5()) < 1e-12, "dimension at level " + std::to_string(i));
  }
  for (unsigned i = 0; i <= 10; ++i) {
    Rational area(0);
    for (const CoverRectangle& r : cover_level(i)) area += r.area();
    c.expect(area == pow(q(5, 9), i), "cover area i=" + std::to_string(i));
  }
  for (unsigned i = 1; i <= 8; ++i) {
    c.expect(mass_measure(i).total() == Rational(1), "mass total i=" + std::to_string(i));
    c.expect(mass_bound_check(i), "mass bound i=" + std::to_string(i));
  }
  c.within(seconds_since(start), 30);
}

void arc(Criterion& c) {
  const auto start = Clock::now();
  const BigFloat chord = chord_length();
  std::vector<BigFloat> lengths;
  for (unsigned i = 0; i <= 12; ++i) lengths.push_back(arc_length(i).length);
  c.within(seconds_since(start), 30);
  c.expect(lengths[0].to_fixed(12) == chord.to_fixed(12), "L_0");
  c.expect(std::abs(lengths[2].to_double() - 1.1269) <= 5e-4, "L_2");
  for (unsigned i = 0; i <= 12; ++i) {
    c.expect(!(lengths[i] < chord) && lengths[i].compare(q(3, 2)) < 0, "bounds at i=" + std::to_string(i));
    if (i >= 1 && i <= 10) c.expect(lengths[i - 1] < lengths[i], "increase at i=" + std::to_string(i));
  }
}

void family(Criterion& c) {
  const FamilyParam classical(q(2, 3));
  for (ValueCase vc : {ValueCase::i, ValueCase::ii, ValueCase::iii, ValueCase::iv})
    for (unsigned i = 1; i <= 10; ++i) {
      const ClosedForm cf = closed_form_value(vc, i);
      c.expect(eval_exact(cf.x, classical) == eval_exact(cf.x), "value suite at " + cf.x.str());
    }
  for (ValueCase vc : {ValueCase::v, ValueCase::vi})
    for (unsigned i = 1; i <= 10; ++i)
      for (unsigned j = i + 1; j <= 10; ++j) {
        const ClosedForm cf = closed_form_value(vc, i, j);
        c.expect(eval_exact(cf.x, classical) == eval_exact(cf.x), "value suite at " + cf.x.str());
      }
  SplitMix64 rng(45);
  for (int k = 0; k < 100; ++k) {
    const FamilyParam param(rng.open_unit_rational(1000));
    for (int n = 0; n < 5; ++n) {
      const Rational x = rng.unit_rational(1000);
      const auto i = static_cast<unsigned>(rng.between(1, 8));
      const Rational fx = eval_exact(x, param);
      c.expect(eval_exact(Rational(1) - x, param) + fx == Rational(1), "symmetry at a=" + param.a().str());
      c.expect(eval_exact(x / three(i), param) == pow(param.a(), i) * fx, "scaling at a=" + param.a().str());
    }
  }
}

void construction(Criterion& c) {
  for (unsigned i = 0; i <= 7; ++i)
    c.expect(ifs_refine(build_iterate(i)) == build_iterate(i + 1), "IFS step i=" + std::to_string(i));
  for (unsigned i = 0; i <= 8; ++i) {
    const IterateTable f = build_iterate(i);
    for (std::size_t k = 0; k < f.size(); ++k)
      c.expect(eval_exact(f.x(k)) == f.y(k), "f table i=" + std::to_string(i) + " at " + f.x(k).str());
    const AntiderivativeTable F = build_F_iterate(i);
    for (std::size_t k = 0; k < F.size(); ++k)
      c.expect(eval_F_exact(F.x(k)) == F.y(k), "F table i=" + std::to_string(i) + " at " + F.x(k).str());
  }
}

void determinism(Criterion& c) {
  const std::vector<std::string> args{"bourbaki", "verify", "--suite", "all", "--seed", "42"};
  std::ostringstream first;
  std::ostringstream second;
  std::ostringstream err;
  const int a = cli::run(args, first, err);
  const int b = cli::run(args, second, err);
  c.expect(a == 0 && b == 0, "verify exit codes " + std::to_string(a) + ", " + std::to_string(b));
  c.expect(!first.str().empty() && first.str() == second.str(), "verify output differs between runs");
}

}  // namespace

int main(int argc, char** argv) {
  // Optional argument: run a single criterion by number.
  const std::size_t only = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 0;
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
      {"exact values and closed forms of f", exact_values},
      {"f(1/7) = 8/23 by fixed point and by bracket", seventh},
      {"symmetry and scaling identities", symmetry},
      {"antiderivative values and integral identity", antiderivative},
      {"derivative recovery from F", derivative},
      {"box counts, dimension, cover areas, mass", geometry},
      {"arc length bounds and growth", arc},
      {"family evaluator identities", family},
      {"IFS construction and table agreement", construction},
      {"deterministic verify output", determinism},
  };
  int failed = 0;
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  if (only > criteria.size()) {
    std::fprintf(stderr, "no criterion %zu\n", only);
    return 2;
  }
  int ran = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    if (only != 0 && n + 1 != only) continue;
    ++ran;
    Criterion c(criteria[n].first);
    const auto start = Clock::now();
    try {
      criteria[n].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu: %s  %s (%.2f s)\n", n + 1, c.ok() ? "PASS" : "FAIL", c.title().c_str(),
                seconds_since(start));
    for (const std::string& f : c.failures()) std::printf("    %s\n", f.c_str());
    if (!c.ok()) ++failed;
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
