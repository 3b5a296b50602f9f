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

#include "bourbaki/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bourbaki/antiderivative.hpp"
#include "bourbaki/errors.hpp"
#include "bourbaki/geometry.hpp"
#include "bourbaki/verify.hpp"

namespace bourbaki::cli {
namespace {

constexpr int kCanvas = 900;
constexpr int kMargin = 2;

// Values gathered from the command line before dispatch.
struct Options {
  std::string x;
  std::string a;
  std::string tol;
  std::string target = "f";
  std::string value_case;
  unsigned i = 0;
  std::optional<unsigned> j;
  unsigned level = 0;
  std::string format;
  std::string out_path;
  unsigned max_level = 0;
  std::string digits;
  std::string suite = "all";
  std::size_t cases = 1000;
  std::uint64_t seed = 42;
  bool timing = false;
};

FamilyParam parse_param(const std::string& text) {
  return text.empty() ? FamilyParam::classical() : FamilyParam(Rational::parse(text));
}

std::string decimal12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

int cmd_closed_form(const Options& o, std::ostream& out) {
  Rational x;
  Rational value;
  Rational evaluated;
  if (o.target == "f") {
    const ClosedForm cf = closed_form_value(parse_value_case(o.value_case), o.i, o.j);
    x = cf.x;
    value = cf.value;
    evaluated = eval_exact(x);
  } else {
    const IntegralClosedForm cf = integral_closed_form(parse_integral_case(o.value_case), o.i);
    x = cf.x;
    value = cf.value;
    evaluated = eval_F_exact(x);
  }
  out << "x = " << format_value(x) << "\n";
  out << o.target << "(x) = " << format_value(value) << "\n";
  out << "evaluator = " << format_value(evaluated) << "\n";
  if (value != evaluated) {
    out << "MISMATCH\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_iterate(const Options& o, std::ostream& out) {
  std::optional<IterateTable> f_table;
  std::optional<AntiderivativeTable> F_table;
  const detail::GridTable* table = nullptr;
  if (o.target == "f") {
    f_table.emplace(build_iterate(o.level, parse_param(o.a)));
    table = &*f_table;
  } else {
    if (!o.a.empty()) throw ParameterError("--a applies to --target f only");
    F_table.emplace(build_F_iterate(o.level));
    table = &*F_table;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw ParameterError("cannot open '" + o.out_path + "' for writing");
  file << (o.format == "csv" ? to_csv(*table) : to_svg(*table));
  if (!file) throw ParameterError("failed writing '" + o.out_path + "'");
  out << "wrote " << table->size() << " breakpoints to " << o.out_path << "\n";
  return kExitOk;
}

int cmd_boxdim(const Options& o, std::ostream& out) {
  std::vector<BoxCountReport> reports;
  for (unsigned i = 0; i <= o.max_level; ++i) reports.push_back(box_count(i));
  auto estimate = [&](std::size_t upto) -> std::optional<double> {
    if (upto == 0) return std::nullopt;
    return dimension_estimate(std::span(reports).first(upto + 1));
  };
  if (o.format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < reports.size(); ++k) {
      nlohmann::ordered_json row;
      row["level"] = reports[k].level;
      row["delta"] = reports[k].delta.str();
      row["count"] = reports[k].count.get_ui();
      const auto e = estimate(k);
      row["estimate"] = e ? nlohmann::ordered_json(*e) : nlohmann::ordered_json(nullptr);
      doc.push_back(std::move(row));
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(7) << "level" << std::setw(12) << "delta" << std::setw(12) << "count"
      << "estimate\n";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const auto e = estimate(k);
    out << std::left << std::setw(7) << reports[k].level << std::setw(12) << reports[k].delta.str() << std::setw(12)
        << reports[k].count.get_str() << (e ? decimal12(*e) : "-") << "\n";
  }
  out << "log_3 5 = " << decimal12(log3_of_5()) << "\n";
  return kExitOk;
}

int cmd_arclength(const Options& o, std::ostream& out) {
  const BigFloat chord = chord_length();
  out << std::left << std::setw(7) << "level" << std::setw(36) << "length" << "triangle_bound\n";
  for (unsigned i = 0; i <= o.max_level; ++i) {
    const ArcLengthReport report = arc_length(i);
    out << std::left << std::setw(7) << i << std::setw(36) << report.length.to_fixed(30) << report.triangle_bound.str()
        << "\n";
  }
  out << "lower bound sqrt(5)/2 = " << chord.to_fixed(30) << "\n";
  out << "upper bound 3/2\n";
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerifyOptions options;
  options.cases = o.cases;
  options.seed = o.seed;
  const VerifyReport report = run_suite(parse_suite(o.suite), options);
  out << to_json(report, o.timing) << "\n";
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::string format_value(const Rational& r) { return r.str() + " (" + r.to_significant(12) + ")"; }

std::string to_csv(const detail::GridTable& table) {
  std::string csv = "x_num,x_den,y_num,y_den\n";
  for (std::size_t k = 0; k < table.size(); ++k) {
    const Rational x = table.x(k);
    const Rational& y = table.y(k);
    csv += x.num().get_str() + "," + x.den().get_str() + "," + y.num().get_str() + "," + y.den().get_str() + "\n";
  }
  return csv;
}

std::string to_svg(const detail::GridTable& table) {
  const Rational span(kCanvas - 2 * kMargin);
  const Rational margin(kMargin);
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"900\" viewBox=\"0 0 900 900\">\n";
  svg += "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (k > 0) svg += ' ';
    svg += (margin + span * table.x(k)).to_fixed(6) + "," + (margin + span * (Rational(1) - table.y(k))).to_fixed(6);
  }
  svg += "\"/>\n</svg>\n";
  return svg;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation, integration and geometry of Bourbaki's nowhere-differentiable function",
               args.empty() ? "bourbaki" : args.front()};
  app.require_subcommand(1);
  Options o;

  auto* eval_f = app.add_subcommand("eval-f", "Exact f(x) at a rational x in [0,1]");
  eval_f->add_option("x", o.x, "Argument p/q")->required();
  eval_f->add_option("--a", o.a, "Family parameter p/q in (0,1); default 2/3");

  auto* eval_F = app.add_subcommand("eval-F", "Exact F(x), the integral of f over [0,x]");
  eval_F->add_option("x", o.x, "Argument p/q")->required();

  auto* approx = app.add_subcommand("approx-f", "Enclose f(x) for a decimal x");
  approx->add_option("x", o.x, "Decimal argument")->required();
  approx->add_option("--tol", o.tol, "Maximum enclosure width (decimal)")->required();

  auto* closed = app.add_subcommand("closed-form", "Closed-form values of f or F");
  closed->add_option("--target", o.target)->required()->check(CLI::IsMember({"f", "F"}));
  closed->add_option("--case", o.value_case)->required()->check(CLI::IsMember({"i", "ii", "iii", "iv", "v", "vi"}));
  closed->add_option("--i", o.i)->required();
  closed->add_option("--j", o.j);

  auto* iterate = app.add_subcommand("iterate", "Write the breakpoints of f_i or F_i");
  iterate->add_option("--target", o.target)->required()->check(CLI::IsMember({"f", "F"}));
  iterate->add_option("--level", o.level)->required();
  iterate->add_option("--a", o.a, "Family parameter for --target f");
  iterate->add_option("--format", o.format)->required()->check(CLI::IsMember({"csv", "svg"}));
  iterate->add_option("--out", o.out_path)->required();

  auto* boxdim = app.add_subcommand("boxdim", "Box counts and dimension estimates");
  boxdim->add_option("--max-level", o.max_level)->required();
  o.format = "table";
  boxdim->add_option("--format", o.format)->check(CLI::IsMember({"table", "json"}));

  auto* arclength = app.add_subcommand("arclength", "Arc length of the graph of F_i");
  arclength->add_option("--max-level", o.max_level)->required();

  auto* measure = app.add_subcommand("measure", "Mass of a cover rectangle by digit path");
  measure->add_option("--digits", o.digits, "Digit path over 0,1,2")->required();

  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"all", "symmetry", "scaling", "integrals", "geometry", "family"}));
  verify->add_option("--cases", o.cases);
  verify->add_option("--seed", o.seed);
  verify->add_flag("--timing", o.timing, "Include elapsed_ms in the report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    if (*eval_f) {
      out << format_value(eval_exact(Rational::parse(o.x), parse_param(o.a))) << "\n";
    } else if (*eval_F) {
      out << format_value(eval_F_exact(Rational::parse(o.x))) << "\n";
    } else if (*approx) {
      const Enclosure e = approx_eval(o.x, Rational::parse_decimal(o.tol));
      out << "lo = " << format_value(e.lo) << "\n";
      out << "hi = " << format_value(e.hi) << "\n";
    } else if (*closed) {
      return cmd_closed_form(o, out);
    } else if (*iterate) {
      return cmd_iterate(o, out);
    } else if (*boxdim) {
      return cmd_boxdim(o, out);
    } else if (*arclength) {
      return cmd_arclength(o, out);
    } else if (*measure) {
      const Rational mass = interval_mass(parse_digit_path(o.digits));
      out << "mass = " << format_value(mass) << "\n";
    } else if (*verify) {
      return cmd_verify(o, out);
    }
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace bourbaki::cli
