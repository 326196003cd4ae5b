#ifndef ORBICHOW_CLI_HPP
#define ORBICHOW_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "orbichow/deformed_ring.hpp"
#include "orbichow/fibration.hpp"
#include "orbichow/isomorphism.hpp"
#include "orbichow/presentation.hpp"
#include "orbichow/properties.hpp"
#include "orbichow/semigroup.hpp"
#include "orbichow/serialize.hpp"

namespace orbichow {

enum ExitCode : int { exit_ok = 0, exit_invalid_input = 1, exit_verification_failed = 2, exit_internal_error = 3 };

struct CliConfig {
  std::string command;
  std::string p;
  std::string w;
  std::optional<std::int64_t> bound;
  std::optional<std::string> degree_cap;
  std::string format = "json";
  std::optional<std::string> out;
  std::string suite;
  std::int64_t a = 1;
  std::int64_t cases = 500;
  std::uint64_t seed = 20240611;
  std::string input;
};

struct CliResult {
  int status = exit_ok;
  std::string output;
  std::string error;
};

inline IntVector parse_int_list(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto q = parse_exponent(item);
    if (!is_integer(q)) throw std::invalid_argument("expected an integer, got '" + item + "'");
    out.push_back(q.numerator());
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

namespace detail {

inline WeightVector config_p(const CliConfig& c) {
  if (c.p.empty()) throw std::invalid_argument("--p is required");
  return WeightVector(parse_int_list(c.p));
}

inline WeightVector config_w(const CliConfig& c, const WeightVector& p) {
  if (c.w.empty()) return WeightVector::ones(p.size());
  return WeightVector(parse_int_list(c.w), WeightKind::multiplicities);
}

inline std::optional<Exponent> config_cap(const CliConfig& c) {
  if (!c.degree_cap) return std::nullopt;
  return parse_exponent(*c.degree_cap);
}

inline std::string render_quotient(const GradedQuotient& q, Format f, std::int64_t bound) {
  switch (f) {
    case Format::json: return to_json(q).dump(2) + "\n";
    case Format::latex: return render_latex(q);
    default: return render(chow_presentation(make_stack(q.p, q.w), bound), f);
  }
}

inline Json dims_json(const GradedQuotient& q) {
  return Json{{"p", q.p.entries()},
              {"w", q.w.entries()},
              {"total_dim", q.total_dim()},
              {"dims", detail::dims(q.dims())}};
}

inline std::string json_only(const Json& j, Format f, const std::string& what) {
  if (f != Format::json) throw std::invalid_argument(what + " supports only the json format");
  return j.dump(2) + "\n";
}

}  // namespace detail

/// Runs one command. Never throws: errors map to exit codes.
inline CliResult dispatch(const CliConfig& c) {
  CliResult r;
  try {
    const Format f = parse_format(c.format);
    if (c.command == "chow") {
      const auto p = detail::config_p(c);
      const auto q = orbifold_chow(make_stack(p, detail::config_w(c, p)), detail::config_cap(c));
      r.output = detail::render_quotient(q, f, c.bound.value_or(4));
    } else if (c.command == "fibration") {
      const auto p = detail::config_p(c);
      const auto pres = is_chain(p) && !c.bound ? chain_presentation(p) : affine_embedding(p, c.bound.value_or(4));
      r.output = render(pres, f);
    } else if (c.command == "semigroup") {
      r.output = detail::json_only(semigroup_json(detail::config_p(c)), f, "semigroup");
    } else if (c.command == "verify") {
      Json report;
      bool pass = true;
      if (c.suite == "lemma31" || c.suite == "semigroup") {
        const auto rep = verify_semigroup_generators(detail::config_p(c), c.bound.value_or(4));
        report = to_json(rep);
        pass = rep.pass;
      } else if (c.suite == "properties") {
        report = Json::array();
        for (const auto& s : run_property_suites(c.seed, c.cases)) {
          report.push_back({{"name", s.name}, {"cases", s.cases}, {"failures", s.failures}, {"examples", s.examples}});
          pass = pass && s.pass();
        }
      } else if (c.suite == "rescale") {
        const auto p = detail::config_p(c);
        const auto rep = chow_invariance(detail::config_w(c, p), p, c.a, detail::config_cap(c), c.bound.value_or(3));
        report = to_json(rep);
        pass = rep.pass;
      } else if (c.suite == "fiber") {
        const auto p = detail::config_p(c);
        report = detail::dims_json(jacobian_algebra_zero_fiber(make_stack(p, detail::config_w(c, p)), detail::config_cap(c)));
        report["pass"] = true;
      } else {
        throw std::invalid_argument("unknown suite '" + c.suite + "' (lemma31, properties, rescale, fiber)");
      }
      r.output = detail::json_only(report, f, "verify");
      if (!pass) {
        r.status = exit_verification_failed;
        r.error = "verification failed";
      }
    } else if (c.command == "export") {
      std::ifstream in(c.input);
      if (!in) throw std::invalid_argument("cannot read '" + c.input + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
      }
      const std::string kind = j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : "";
      try {
        if (kind == "orbifold_chow")
          r.output = detail::render_quotient(quotient_from_json(j), f, c.bound.value_or(4));
        else if (kind == "presentation")
          r.output = render(presentation_from_json(j), f);
        else if (kind == "semigroup")
          r.output = detail::json_only(semigroup_json(WeightVector(j.at("p").get<IntVector>())), f, "semigroup");
        else if (kind == "fibered_element")
          r.output = detail::json_only(to_json(fibered_from_json(j)), f, "fibered_element");
        else
          throw std::invalid_argument("unknown document kind '" + kind + "'");
      } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
      }
    } else {
      throw std::invalid_argument("unknown command '" + c.command + "'");
    }
  } catch (const InternalError& e) {
    r = CliResult{exit_internal_error, "", std::string("internal error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    r = CliResult{exit_invalid_input, "", std::string("invalid input: ") + e.what()};
  } catch (const std::out_of_range& e) {
    r = CliResult{exit_invalid_input, "", std::string("invalid input: ") + e.what()};
  } catch (const std::exception& e) {
    r = CliResult{exit_internal_error, "", std::string("internal error: ") + e.what()};
  }
  return r;
}

/// Parses argv into a config. Returns an exit code instead when parsing
/// finishes the run (help, or a usage error).
inline std::variant<CliConfig, int> parse_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                                              std::ostream& err = std::cerr) {
  CliConfig c;
  CLI::App app{"Orbifold Chow rings of root stacks over weighted projective spaces"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", c.p, "weights, comma separated");
    sub->add_option("--w", c.w, "root multiplicities, comma separated (default all ones)");
    sub->add_option("--bound", c.bound, "relation degree bound, or search box for the semigroup suite");
    sub->add_option("--degree-cap", c.degree_cap, "highest degree computed (default n + 1)");
    sub->add_option("--format", c.format, "json, singular, macaulay2 or latex");
    sub->add_option("--out", c.out, "output path (default stdout)");
  };
  add_common(app.add_subcommand("chow", "orbifold Chow ring"));
  add_common(app.add_subcommand("fibration", "affine embedding of the mirror fibration"));
  add_common(app.add_subcommand("semigroup", "generators of S and T"));
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify);
  verify->add_option("--suite", c.suite, "lemma31, properties, rescale or fiber")->required();
  verify->add_option("--a", c.a, "rescale factor");
  verify->add_option("--cases", c.cases, "cases per property suite");
  verify->add_option("--seed", c.seed, "property suite seed");
  auto* exp = app.add_subcommand("export", "re-render a stored JSON document");
  add_common(exp);
  exp->add_option("file", c.input, "JSON document")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_invalid_input;
  }
  for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
  return c;
}

inline int run_cli(int argc, const char* const* argv) {
  auto parsed = parse_cli(argc, argv);
  if (std::holds_alternative<int>(parsed)) return std::get<int>(parsed);
  const auto& config = std::get<CliConfig>(parsed);
  const auto result = dispatch(config);
  if (!result.error.empty()) std::cerr << result.error << "\n";
  if (config.out && (result.status == exit_ok || result.status == exit_verification_failed)) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      std::cerr << "invalid input: cannot write '" << *config.out << "'\n";
      return exit_invalid_input;
    }
    file << result.output;
  } else {
    std::cout << result.output;
  }
  return result.status;
}

}  // namespace orbichow

#endif  // ORBICHOW_CLI_HPP
