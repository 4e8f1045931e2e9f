// Command-line front end: wonderk <verb> --type <label> [options]

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wonderk/deadline.hpp"
#include "wonderk/error.hpp"
#include "wonderk/serialize.hpp"
#include "wonderk/verify.hpp"

using namespace wonderk;

namespace {

struct Options {
  std::string verb;
  std::string type;
  std::string out;
  std::vector<std::string> suites;
  std::string fan;
  std::optional<double> timeout;
  int max_rank = kDefaultRankBound;
  int samples = 100;
  std::uint32_t seed = 1;
};

void emit(const Json &j, const std::string &out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f)
    throw ValidationError("OutputError", "cannot write " + out);
  f << text;
}

Json read_json_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw ValidationError("InputError", "cannot read " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error &e) {
    throw ValidationError("MalformedJson", e.what());
  }
}

// Returns the process exit code.
int run(const Options &o) {
  const CartanLabel label = CartanLabel::parse(o.type);
  auto W = make_weyl_group(label, o.max_rank);
  if (o.verb == "roots") {
    emit(roots_json(W->root_system()), o.out);
    return 0;
  }
  if (o.verb == "weyl") {
    emit(weyl_json(*W), o.out);
    return 0;
  }
  if (o.verb == "csets") {
    emit(csets_json(*W), o.out);
    return 0;
  }
  auto S = steinberg_system(label, o.max_rank);
  if (o.verb == "steinberg") {
    emit(steinberg_json(*S), o.out);
    return 0;
  }
  if (o.verb == "ctable") {
    emit(ctable_json(*S), o.out);
    return 0;
  }
  if (o.verb == "ktable") {
    const KXTable t = kx_table(*S);
    emit(ktable_json(*S, t), o.out);
    return t.report.all_pass() ? 0 : 2;
  }

  SuiteOptions sopt;
  sopt.samples = o.samples;
  sopt.seed = o.seed;
  if (!o.fan.empty())
    sopt.user_fan = fan_from_json(read_json_file(o.fan), W->rank());

  if (o.verb == "toric-check") {
    Json out{{"type", label.to_string()}};
    if (sopt.user_fan) {
      const Fan &fan = *sopt.user_fan;
      out["fan"] = fan_json(fan);
      Json maximal = Json::array();
      for (std::size_t m : fan.maximal_cones())
        maximal.push_back(fan.cone_name(m));
      out["maximal_cones"] = std::move(maximal);
    } else {
      const WFan F = chamber_fan(S->group_ptr());
      out["fan"] = fan_json(F.full);
      Json stabs = Json::array();
      for (std::size_t c = 0; c < F.plus.cones().size(); ++c) {
        const auto st = cone_stabilizer(F, F.plus.cone(c));
        Json names = Json::array();
        for (ElemId w : st.setwise)
          names.push_back(W->name(w));
        stabs.push_back(Json{{"cone", F.plus.cone_name(c)},
                             {"stabilizer", std::move(names)},
                             {"pointwise", st.pointwise}});
      }
      out["positive_cone_stabilizers"] = std::move(stabs);
    }
    const Report r = run_suite("toric-decomp", *S, sopt);
    out["report"] = report_json(r);
    emit(out, o.out);
    return r.all_pass() ? 0 : 2;
  }

  // verify
  std::vector<std::string> suites = o.suites.empty() ? default_suites(*W) : o.suites;
  Json reports = Json::array();
  bool pass = true;
  for (const auto &name : suites) {
    const Report r = run_suite(name, *S, sopt);
    pass = pass && r.all_pass();
    reports.push_back(report_json(r));
  }
  emit(Json{{"type", label.to_string()}, {"pass", pass}, {"reports", std::move(reports)}},
       o.out);
  return pass ? 0 : 2;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Equivariant and ordinary K-rings of wonderful compactifications"};
  app.require_subcommand(1);
  Options o;
  double timeout = 0;

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--type", o.type, "Cartan type, e.g. A2, B2, G2")->required();
    sub->add_option("--out", o.out, "Write JSON to this file instead of stdout");
    sub->add_option("--timeout", timeout, "Give up after this many seconds (exit 3)");
    sub->add_option("--max-rank", o.max_rank, "Largest rank accepted");
  };
  const std::vector<std::pair<std::string, std::string>> verbs{
      {"roots", "Root system data"},
      {"weyl", "Weyl group elements"},
      {"csets", "C^I partition and minimal coset representatives"},
      {"steinberg", "Steinberg basis and determinant"},
      {"ctable", "Structure constants a^w_{v,v'}"},
      {"ktable", "Multiplication table of K(X) over K(G/B)"},
      {"toric-check", "Stanley-Reisner decomposition and localization checks"},
      {"verify", "Run verification suites"}};
  for (const auto &[name, help] : verbs) {
    CLI::App *sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "verify") {
      sub->add_option("--suite", o.suites, "Suite name (repeatable; default all within the gates)");
      sub->add_option("--fan", o.fan, "User subdivision of the positive chamber (JSON)");
      sub->add_option("--samples", o.samples, "Random samples per suite");
      sub->add_option("--seed", o.seed, "Random seed");
    }
    if (name == "toric-check") {
      sub->add_option("--fan", o.fan, "User subdivision of the positive chamber (JSON)");
      sub->add_option("--samples", o.samples, "Random samples");
      sub->add_option("--seed", o.seed, "Random seed");
    }
    sub->callback([&o, name = name] { o.verb = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cout << Json{{"error", "InvalidArguments"}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
  if (timeout > 0)
    o.timeout = timeout;

  try {
    DeadlineScope deadline(o.timeout);
    return run(o);
  } catch (const ValidationError &e) {
    std::cout << Json{{"error", e.code()}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  } catch (const TimeoutError &e) {
    std::cout << Json{{"error", e.code()}, {"message", e.what()}, {"progress", e.progress()}}
                     .dump(2)
              << "\n";
    return 3;
  } catch (const InvariantViolation &e) {
    std::cout << Json{{"error", e.code()},
                      {"message", e.what()},
                      {"diagnostic", Json{{"verb", o.verb}, {"type", o.type}}}}
                     .dump(2)
              << "\n";
    return 2;
  }
}
