// realsnf: command-line front end. Machine output is JSON with every number
// as a decimal string.
//
// Exit codes: 0 ok, 1 verdict differs from --expect-holds, 2 input error,
// 3 internal invariant breach.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "realsnf/json_io.hpp"
#include "realsnf/realsnf.hpp"

namespace {

using namespace realsnf;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitInput = 2;
constexpr int kExitBreach = 3;

struct Options {
  std::string ring;
  std::string input;
  std::uint64_t seed = 1;
  int trials = 100;
  int size = 4;
  bool expect_holds = false;
  bool pretty = false;
};

json load_input(const std::string& input) {
  auto first = input.find_first_not_of(" \t\r\n");
  std::string text;
  if (first != std::string::npos && (input[first] == '[' || input[first] == '{')) {
    text = input;
  } else {
    std::ifstream in(input);
    if (!in) throw Error(Errc::ParseError, "input: cannot read file '" + input + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("input: malformed JSON: ") + e.what());
  }
}

void emit(const json& j, const Options& o) { std::cout << (o.pretty ? j.dump(2) : j.dump()) << "\n"; }

// --ring wins; otherwise the matrix object's "ring"; otherwise Z.
RingSpec resolve_ring(const Options& o, const json& input) {
  if (!o.ring.empty()) {
    RingSpec spec = RingSpec::parse(o.ring);
    if (auto declared = matrix_ring(input); declared && *declared != spec)
      throw Error(Errc::ParseError, "ring: --ring " + spec.to_string() + " disagrees with input ring " + declared->to_string());
    return spec;
  }
  if (auto declared = matrix_ring(input)) return *declared;
  return RingSpec::integers();
}

int cmd_snf(const Options& o) {
  json in = load_input(o.input);
  AnyRing ring = make_ring(resolve_ring(o, in));
  return std::visit(
      [&](const auto& r) {
        auto m = parse_matrix(r, in);
        emit(snf_json(r, smith_normal_form(r, m)), o);
        return kExitOk;
      },
      ring);
}

int cmd_psd(const Options& o) {
  json in = load_input(o.input);
  AnyRing ring = make_ring(resolve_ring(o, in));
  return std::visit(
      [&](const auto& r) {
        auto m = parse_matrix(r, in);
        emit(psd_json(is_psd_on_spectrum(r, m)), o);
        return kExitOk;
      },
      ring);
}

template <class E>
int finish_report(const TheoremReport<E>& rep, const json& out, const Options& o) {
  emit(out, o);
  if (!rep.consistent()) {
    std::cerr << "internal invariant breach: PSD input with (PNRI) has a non-positivizable diagonal\n";
    return kExitBreach;
  }
  if (o.expect_holds && rep.conclusion != Conclusion::TheoremHolds) return kExitVerdict;
  return kExitOk;
}

int cmd_verify(const Options& o) {
  json in = load_input(o.input);
  AnyRing ring = make_ring(resolve_ring(o, in));
  return std::visit(
      [&](const auto& r) {
        auto m = parse_matrix(r, in);
        auto rep = verify_main_theorem(r, m);
        return finish_report(rep, report_json(r, rep), o);
      },
      ring);
}

int cmd_unit(const Options& o, bool with_pnri) {
  if (o.ring.empty()) throw Error(Errc::ParseError, "ring: --ring is required");
  RingSpec spec = RingSpec::parse(o.ring);
  if (spec.family != Family::QuadraticIntegers) {
    if (!with_pnri) throw Error(Errc::UnsupportedRing, "unit needs a quadratic ring, got " + spec.to_string());
    emit(json{{"ring", spec.to_string()}, {"pnri", true}, {"unit", nullptr}, {"norm", nullptr}}, o);
    return kExitOk;
  }
  QuadRing ring(spec);
  const auto& fu = ring.fundamental_unit();
  json out{{"ring", spec.to_string()}, {"unit", fu.unit.to_string()}, {"norm", fu.norm.get_str()}};
  if (with_pnri) {
    out = json{{"pnri", ring.pnri_holds()}, {"unit", fu.unit.to_string()}, {"norm", fu.norm.get_str()}};
  } else {
    out["coords"] = to_json(fu.unit);
  }
  emit(out, o);
  if (with_pnri && o.expect_holds && !ring.pnri_holds()) return kExitVerdict;
  return kExitOk;
}

// Spec values: ring elements, or {"u": rational, "v": rational} for u + v sqrt d in the quadratic field.
template <class R>
CounterexampleSpec<typename R::Element> parse_counterexample(const R& r, const json& in) {
  if (!in.is_object()) throw Error(Errc::ParseError, "counterexample: expected an object");
  auto get = [&](const char* key) {
    if (!in.contains(key)) throw Error(Errc::ParseError, std::string(key) + ": missing");
    return parse_element(r, in[key], key);
  };
  return {get("a"), get("b"), get("c"), get("d1"), get("e1"), get("epsilon")};
}

CounterexampleSpec<QuadElem> parse_counterexample(const QuadRing& r, const json& in) {
  if (!in.is_object()) throw Error(Errc::ParseError, "counterexample: expected an object");
  bool field_form = false;
  for (const auto& [k, v] : in.items())
    if (v.is_object() && v.contains("u")) field_form = true;
  if (!field_form) {
    auto get = [&](const char* key) {
      if (!in.contains(key)) throw Error(Errc::ParseError, std::string(key) + ": missing");
      return parse_element(r, in[key], key);
    };
    return {get("a"), get("b"), get("c"), get("d1"), get("e1"), get("epsilon")};
  }
  auto get_field = [&](const char* key) {
    if (!in.contains(key)) throw Error(Errc::ParseError, std::string(key) + ": missing");
    const json& v = in[key];
    if (v.is_object() && v.contains("u")) {
      auto rat = [&](const char* c) -> Rational {
        if (!v.contains(c)) return 0;
        if (!v[c].is_string()) throw Error(Errc::ParseError, std::string(key) + "." + c + ": expected a rational string");
        return parse_rational(v[c].get<std::string>());
      };
      return FieldElem{rat("u"), rat("v"), r.field().d};
    }
    return to_field(parse_element(r, v, key));
  };
  CounterexampleSpec<FieldElem> fs{get_field("a"),  get_field("b"),  get_field("c"),
                                   get_field("d1"), get_field("e1"), get_field("epsilon")};
  return integral_spec(r, fs);
}

int cmd_counterexample(const Options& o) {
  RingSpec spec = RingSpec::parse(o.ring.empty() ? "Zsqrt:3" : o.ring);
  AnyRing ring = make_ring(spec);
  return std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        CounterexampleSpec<typename R::Element> cs;
        if (!o.input.empty()) {
          cs = parse_counterexample(r, load_input(o.input));
        } else if constexpr (std::is_same_v<R, QuadRing>) {
          cs = sqrt3_counterexample_spec(r);
        } else {
          throw Error(Errc::ParseError, "input: required outside Zsqrt:3");
        }
        auto m = build_counterexample(r, cs);
        auto rep = verify_main_theorem(r, m);
        json out{{"matrix", matrix_json(r, m)}, {"report", report_json(r, rep)}};
        return finish_report(rep, out, o);
      },
      ring);
}

int cmd_valuation_lemma(const Options& o) {
  json in = load_input(o.input);
  if (!in.is_object()) throw Error(Errc::ParseError, "input: expected {\"a\", \"b\", \"p\"}");
  PolyRing ring;
  auto get = [&](const char* key) {
    if (!in.contains(key)) throw Error(Errc::ParseError, std::string(key) + ": missing");
    return parse_element(ring, in[key], key);
  };
  RatPoly a = get("a"), b = get("b"), p = get("p");
  bool holds = check_valuation_lemma(a, b, p);
  json out{{"holds", holds}};
  out["nu_p_a"] = a.is_zero() ? json(nullptr) : json(std::to_string(valuation(ring, p, a)));
  out["nu_p_b"] = b.is_zero() ? json(nullptr) : json(std::to_string(valuation(ring, p, b)));
  emit(out, o);
  return holds ? kExitOk : kExitBreach;
}

int cmd_suite(const Options& o) {
  if (o.trials < 0) throw Error(Errc::ParseError, "trials: must be >= 0");
  TrialConfig cfg;
  cfg.ring = RingSpec::parse(o.ring.empty() ? "Z" : o.ring);
  cfg.matrix_size = o.size;
  cfg.trial_count = o.trials;
  cfg.seed = o.seed;
  if (cfg.matrix_size < 1 || cfg.matrix_size > 5) throw Error(Errc::ParseError, "size: must be in [1, 5]");
  AnyRing ring = make_ring(cfg.ring);
  SuiteSummary summary = std::visit(
      [&](const auto& r) {
        return run_property_suite(r, cfg, [&](const TrialOutcome& t) { std::cout << trial_json(t).dump() << "\n"; });
      },
      ring);
  emit(summary_json(summary), o);
  if (summary.breaches > 0) return kExitBreach;
  if (o.expect_holds && summary.count(Conclusion::TheoremHolds) != summary.trials) return kExitVerdict;
  return kExitOk;
}

int exit_code_for(const Error& e) {
  return e.code() == Errc::InternalError ? kExitBreach : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smith normal forms and positivity over formally real principal rings"};
  app.require_subcommand(1);
  Options o;

  auto add_ring = [&](CLI::App* sub) { sub->add_option("--ring", o.ring, "Z | Q[x] | Zsqrt:<d> | Zhalf:<d>"); };
  auto add_input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--input", o.input, "inline JSON or a file path");
    if (required) opt->required();
  };
  auto add_common = [&](CLI::App* sub) { sub->add_flag("--pretty", o.pretty, "indent JSON output"); };

  auto* snf = app.add_subcommand("snf", "Smith normal form with transforms");
  add_ring(snf), add_input(snf, true), add_common(snf);
  auto* psd = app.add_subcommand("psd", "positive semidefiniteness on the real spectrum");
  add_ring(psd), add_input(psd, true), add_common(psd);
  auto* verify = app.add_subcommand("verify", "check PSD, SNF and positive diagonal associates of a symmetric matrix");
  add_ring(verify), add_input(verify, true), add_common(verify);
  verify->add_flag("--expect-holds", o.expect_holds, "exit 1 unless the conclusion is TheoremHolds");
  auto* pnri = app.add_subcommand("pnri", "decide (PNRI) from the fundamental unit");
  add_ring(pnri), add_common(pnri);
  pnri->add_flag("--expect-holds", o.expect_holds, "exit 1 if (PNRI) fails");
  auto* unit = app.add_subcommand("unit", "fundamental unit and its norm");
  add_ring(unit), add_common(unit);
  auto* cex = app.add_subcommand("counterexample", "build and check the 2x2 counterexample template");
  add_ring(cex), add_input(cex, false), add_common(cex);
  cex->add_flag("--expect-holds", o.expect_holds, "exit 1 unless the conclusion is TheoremHolds");
  auto* val = app.add_subcommand("valuation-lemma", "check nu_p(a) <= 2 nu_p(b) for a - b^2 >= 0");
  add_input(val, true), add_common(val);
  auto* suite = app.add_subcommand("suite", "seeded property suite over Gram matrices");
  add_ring(suite), add_common(suite);
  suite->add_option("--seed", o.seed, "master seed");
  suite->add_option("--trials", o.trials, "number of trials");
  suite->add_option("--size", o.size, "maximum matrix size (1..5)");
  suite->add_flag("--expect-holds", o.expect_holds, "exit 1 unless every trial is TheoremHolds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*snf) return cmd_snf(o);
    if (*psd) return cmd_psd(o);
    if (*verify) return cmd_verify(o);
    if (*pnri) return cmd_unit(o, true);
    if (*unit) return cmd_unit(o, false);
    if (*cex) return cmd_counterexample(o);
    if (*val) return cmd_valuation_lemma(o);
    if (*suite) return cmd_suite(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBreach;
  }
  return kExitInput;
}
