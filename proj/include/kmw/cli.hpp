#pragma once

// Command-line front end. Exit codes:
//   0 success / PASS, 1 verification FAIL, 2 input error,
//   3 method inapplicable, 4 budget or cap exceeded.

#include <algorithm>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmw/io.hpp"
#include "kmw/modweights.hpp"
#include "kmw/oracle.hpp"
#include "kmw/roots.hpp"
#include "kmw/series.hpp"
#include "kmw/svg.hpp"
#include "kmw/verify.hpp"

namespace kmw::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kInapplicable = 3, kLimit = 4 };

namespace detail {

inline ProblemSpec load(const std::string& path) {
  if (path == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_problem(text);
  }
  return read_problem_file(path);
}

inline int status_exit(Status s, bool expect_fail) {
  if (expect_fail) return s == Status::ExpectedFail ? kOk : kVerifyFailed;
  return s == Status::Pass ? kOk : kVerifyFailed;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact weight sets and weight formulas for Kac-Moody highest-weight modules", "kmw"};
  app.require_subcommand(1);

  std::string input;
  std::int64_t height = 10;
  std::optional<std::int64_t> depth;
  std::string kind = "real", method = "slice", format = "json", formula = "wkw", check = "cross";
  bool expect_fail = false;

  auto* c_classify = app.add_subcommand("classify", "Classify the Dynkin diagram components");
  c_classify->add_option("--input", input, "JSON problem document ('-' for stdin)")->required();

  auto* c_roots = app.add_subcommand("roots", "List positive roots up to a height");
  c_roots->add_option("--input", input)->required();
  c_roots->add_option("--height", height)->check(CLI::NonNegativeNumber);
  c_roots->add_option("--kind", kind)->check(CLI::IsMember({"real", "imaginary"}));

  auto* c_weights = app.add_subcommand("weights", "Weights of L(lambda) up to a height");
  c_weights->add_option("--input", input)->required();
  c_weights->add_option("--method", method)->check(CLI::IsMember({"slice", "orbit", "hull", "oracle"}));
  c_weights->add_option("--height", height)->check(CLI::NonNegativeNumber);
  c_weights->add_option("--depth", depth, "hull generation depth (default 2H+4)")->check(CLI::NonNegativeNumber);
  c_weights->add_option("--format", format)->check(CLI::IsMember({"json", "svg"}));

  auto* c_series = app.add_subcommand("series", "Truncated weight or character series");
  c_series->add_option("--input", input)->required();
  c_series->add_option("--formula", formula)->check(CLI::IsMember({"wkw", "ab"}));
  c_series->add_option("--height", height)->check(CLI::NonNegativeNumber);

  auto* c_verify = app.add_subcommand("verify", "Run an identity or cross-validation check");
  c_verify->add_option("--input", input)->required();
  c_verify->add_option("--check", check)
      ->check(CLI::IsMember({"cross", "wkw", "denominator", "macdonald", "integrability"}));
  c_verify->add_option("--height", height)->check(CLI::NonNegativeNumber);
  c_verify->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
  c_verify->add_flag("--expect-fail", expect_fail, "succeed only on the documented expected-failure outcome");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    const ProblemSpec p = detail::load(input);
    const CartanMatrix& g = p.cartan;
    if (p.height && !c_weights->count("--height") && !c_series->count("--height") && !c_verify->count("--height") &&
        !c_roots->count("--height"))
      height = *p.height;
    if (p.depth && !depth) depth = *p.depth;

    if (*c_classify) {
      out << classification_to_json(g).dump(2) << "\n";
      return kOk;
    }
    if (*c_roots) {
      auto roots = kind == "real" ? positive_real_up_to(g, height) : positive_imaginary_up_to(g, height);
      out << roots_to_json(roots, kind.c_str(), height).dump(2) << "\n";
      return kOk;
    }
    if (*c_weights) {
      const auto& lambda = p.require_lambda();
      if (!c_weights->count("--method") && p.method) method = *p.method;
      WeightSet ws;
      if (method == "slice")
        ws = wt_simple_slice(lambda, g, height);
      else if (method == "orbit")
        ws = wt_simple_orbit(lambda, g, height);
      else if (method == "hull")
        ws = wt_simple_hull(lambda, g, height, depth ? std::optional<std::size_t>(*depth) : std::nullopt);
      else if (method == "oracle")
        ws = oracle_weight_set(lambda, g, height);
      else
        throw InputError("unknown method '" + method + "'");
      if (format == "svg") {
        const auto L = depth ? static_cast<std::size_t>(*depth) : std::min<std::size_t>(default_hull_depth(height), 12);
        const auto model = hull_generators(lambda, g, integrability_set(lambda), L);
        out << emit_svg(ws, model, default_projection(g.size()));
      } else {
        out << weightset_to_json(ws, lambda, g).dump(2) << "\n";
      }
      return kOk;
    }
    if (*c_series) {
      const auto& lambda = p.require_lambda();
      const TruncSeries s = formula == "wkw" ? wkw_sum(lambda, g, height) : atiyah_bott_sum(lambda, g, height);
      nlohmann::json doc = series_to_json(s);
      doc["formula"] = formula;
      out << doc.dump(2) << "\n";
      return kOk;
    }
    if (*c_verify) {
      nlohmann::json doc;
      Status st = Status::Fail;
      if (check == "denominator") {
        auto r = verify_denominator_bases(g);
        st = r.status, doc = report_to_json(r);
      } else if (check == "macdonald") {
        auto r = verify_rank2_macdonald(g, height);
        st = r.status, doc = report_to_json(r);
      } else if (check == "wkw") {
        auto r = verify_wkw_vs_weights(p.require_lambda(), g, height);
        st = r.status, doc = report_to_json(r);
      } else if (check == "integrability") {
        auto r = check_integrability_invariants(p.require_lambda(), g, height);
        st = r.status, doc = report_to_json(r);
      } else {
        auto r = verify_cross(p.require_lambda(), g, height,
                              depth ? std::optional<std::size_t>(*depth) : std::nullopt);
        st = r.status, doc = report_to_json(r);
      }
      doc["height"] = height;
      out << doc.dump(2) << "\n";
      return detail::status_exit(st, expect_fail);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InapplicableError& e) {
    err << "not applicable: " << e.what() << "\n";
    return kInapplicable;
  } catch (const LimitError& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  }
  return kInputError;
}

}  // namespace kmw::cli
