#include <algorithm>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "shiftmon/cli.hpp"
#include "shiftmon/invariants.hpp"
#include "shiftmon/json_io.hpp"
#include "shiftmon/presentations.hpp"

namespace shiftmon::cli {

namespace {

NumericalMonoid minimal_monoid(const std::vector<Int>& gens) {
  auto m = NumericalMonoid::normalize(gens);
  if (m.generators().size() != gens.size()) {
    throw Error(ErrorCode::kNotMinimal, "generators are not minimal");
  }
  return m;
}

void emit(std::ostream& out, Format format, const nlohmann::ordered_json& j,
          const std::string& text) {
  if (format == Format::kJson) {
    out << j.dump(2) << '\n';
  } else {
    out << text << '\n';
  }
}

std::string join(const std::vector<Int>& xs) {
  std::string s;
  for (Int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

struct InvariantOptions {
  std::vector<Int> gens;
  std::string which;
  std::optional<Int> element;
  std::optional<Int> window;
  Format format = Format::kText;
};

void run_invariant(const InvariantOptions& o, std::ostream& out) {
  const NumericalMonoid m = minimal_monoid(o.gens);
  nlohmann::ordered_json j;
  j["generators"] = m.generators();
  j["invariant"] = o.which;
  std::string text;
  if (o.element) {
    const Int a = *o.element;
    j["element"] = a;
    const auto zs = factorizations(m, a);
    if (zs.empty()) {
      throw Error(ErrorCode::kNotAnElement,
                  std::to_string(a) + " is not in the monoid");
    }
    if (o.which == "delta") {
      const auto profile = length_profile(zs, a);
      std::vector<Int> uniq(profile.deltas);
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      j["value"] = uniq;
      text = join(uniq);
    } else {
      Int v = 0;
      if (o.which == "catenary") {
        v = catenary_of_element(zs);
      } else if (o.which == "mon-catenary") {
        v = monotone_equal_catenary(zs).monotone;
      } else if (o.which == "eq-catenary") {
        v = monotone_equal_catenary(zs).equal;
      } else {
        v = tame_degree(zs);
      }
      j["value"] = v;
      text = std::to_string(v);
    }
    j["exact"] = true;
    emit(out, o.format, j, text);
    return;
  }

  if (!m.primitive()) {
    throw Error(ErrorCode::kNonPrimitive, "monoid-level invariants need gcd 1");
  }
  const Int window = o.window.value_or(default_window(m));
  const auto context = detect_family(m);
  bool exact = true;
  if (o.which == "delta") {
    const auto ds = delta_set(m, window, context);
    std::vector<Int> v(ds.values.begin(), ds.values.end());
    j["value"] = v;
    exact = !ds.window_limited;
    text = join(v);
  } else if (o.which == "catenary") {
    const Int c = catenary_of_monoid(m);
    j["value"] = c;
    text = std::to_string(c);
  } else if (o.which == "tame") {
    const auto t = tame_degree_windowed(m, window);
    j["value"] = t.value;
    j["attained_at"] = t.attained_at;
    exact = false;
    text = std::to_string(t.value) + " (at " + std::to_string(t.attained_at) + ")";
  } else {
    const auto report = monoid_catenary_report(m, window, context);
    const Int v = o.which == "mon-catenary" ? report.monotone : report.equal;
    j["value"] = v;
    exact = !report.lower_bound;
    text = std::to_string(v);
  }
  j["exact"] = exact;
  if (!exact) {
    j["window"] = window;
    text = ">= " + text + " (window " + std::to_string(window) + ")";
  }
  emit(out, o.format, j, text);
}

const std::map<std::string, Format> kFormats{{"json", Format::kJson},
                                             {"text", Format::kText}};

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical monoid presentations and factorization invariants"};
  app.require_subcommand(1);

  std::vector<Int> gens;
  Format format = Format::kText;
  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("--gens", gens, "Generators, comma separated")
        ->required()
        ->delimiter(',');
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format: json or text")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  Int element = 0;
  auto* apery_cmd = app.add_subcommand("apery", "Apery set with respect to m_1");
  add_gens(apery_cmd);
  add_format(apery_cmd);
  auto* member_cmd = app.add_subcommand("member", "Membership test");
  add_gens(member_cmd);
  add_format(member_cmd);
  member_cmd->add_option("--element", element)->required();
  auto* fact_cmd = app.add_subcommand("factorizations", "List Z(a)");
  add_gens(fact_cmd);
  add_format(fact_cmd);
  fact_cmd->add_option("--element", element)->required();
  auto* betti_cmd = app.add_subcommand("betti", "Betti elements");
  add_gens(betti_cmd);
  add_format(betti_cmd);

  MinpresOptions mp;
  auto* minpres_cmd = app.add_subcommand("minpres", "Minimal presentation");
  add_gens(minpres_cmd);
  std::string strategy = "auto";
  minpres_cmd->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"direct", "shift", "auto"}));
  minpres_cmd->add_flag("--all", mp.emit_all, "Count and list all minimal presentations");
  minpres_cmd->add_option("--cap", mp.cap, "Maximum presentations listed by --all");
  std::string minpres_format = "json";
  minpres_cmd->add_option("--format", minpres_format)
      ->check(CLI::IsMember({"json", "text"}));
  minpres_cmd->add_flag("--paranoid", mp.paranoid,
                        "Verify by congruence closure on [0, frobenius + 2 m_t]");

  InvariantOptions inv;
  auto* inv_cmd = app.add_subcommand("invariant", "Factorization invariants");
  add_gens(inv_cmd);
  add_format(inv_cmd);
  inv_cmd->add_option("--which", inv.which)
      ->required()
      ->check(CLI::IsMember({"delta", "catenary", "mon-catenary", "eq-catenary", "tame"}));
  inv_cmd->add_option("--element", inv.element, "Element-level value");
  inv_cmd->add_option("--window", inv.window, "Window for monoid-level sups");

  SurveyOptions sv;
  auto* survey_cmd = app.add_subcommand("survey", "Sweep a shifted family, CSV output");
  survey_cmd->add_option("--r", sv.r, "Offsets r_1,...,r_k")->required()->delimiter(',');
  survey_cmd->add_option("--n-from", sv.n_from)->required();
  survey_cmd->add_option("--n-to", sv.n_to)->required();
  std::string which = "betti";
  survey_cmd->add_option("--which", which)
      ->check(CLI::IsMember({"betti", "catenary", "minpres-size", "delta"}));
  survey_cmd->add_option("--out", sv.out_path, "Output CSV path, - for stdout");
  survey_cmd->add_option("--threads", sv.threads);

  BenchOptions bo;
  auto* bench_cmd = app.add_subcommand("bench", "Direct vs accelerated timing");
  bench_cmd->add_option("--r", bo.r)->required()->delimiter(',');
  bench_cmd->add_option("--n", bo.n)->required();
  bench_cmd->add_option("--repeats", bo.repeats);
  bench_cmd->add_option("--timeout-secs", bo.timeout_secs);

  VerifyOptions vo;
  auto* verify_cmd = app.add_subcommand("verify", "Check a presentation by congruence closure");
  add_gens(verify_cmd);
  verify_cmd->add_option("--presentation", vo.presentation_path)->required();
  verify_cmd->add_option("--bound", vo.bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*apery_cmd) {
      const auto m = NumericalMonoid::normalize(gens);
      const auto& ap = m.apery();
      nlohmann::ordered_json j;
      j["generators"] = m.generators();
      j["modulus"] = ap.modulus;
      j["apery"] = ap.entries;
      j["frobenius"] = frobenius(m);
      emit(out, format, j,
           join(ap.entries) + "\nfrobenius: " + std::to_string(frobenius(m)));
    } else if (*member_cmd) {
      const auto m = NumericalMonoid::normalize(gens);
      const bool in = contains(m, element);
      nlohmann::ordered_json j;
      j["generators"] = m.generators();
      j["element"] = element;
      j["member"] = in;
      emit(out, format, j, in ? "true" : "false");
    } else if (*fact_cmd) {
      std::vector<Int> sorted = gens;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      const auto zs = factorizations(std::span<const Int>(sorted), element);
      nlohmann::ordered_json j;
      j["generators"] = sorted;
      j["element"] = element;
      auto arr = nlohmann::ordered_json::array();
      std::string text;
      for (const auto& z : zs) {
        arr.push_back(z.coords());
        std::ostringstream line;
        line << z << "  length " << z.length() << '\n';
        text += line.str();
      }
      j["factorizations"] = std::move(arr);
      if (!text.empty()) text.pop_back();
      emit(out, format, j, text);
    } else if (*betti_cmd) {
      const auto m = minimal_monoid(gens);
      const auto b = betti_elements(m);
      nlohmann::ordered_json j;
      j["generators"] = m.generators();
      j["betti_elements"] = b;
      emit(out, format, j, join(b));
    } else if (*minpres_cmd) {
      mp.gens = gens;
      mp.strategy = strategy == "direct"  ? Strategy::kDirect
                    : strategy == "shift" ? Strategy::kShift
                                          : Strategy::kAuto;
      mp.format = minpres_format == "text" ? Format::kText : Format::kJson;
      return run_minpres_command(mp, out, err);
    } else if (*inv_cmd) {
      inv.gens = gens;
      inv.format = format;
      run_invariant(inv, out);
    } else if (*survey_cmd) {
      sv.metric = which == "catenary"       ? SurveyMetric::kCatenary
                  : which == "minpres-size" ? SurveyMetric::kMinpresSize
                  : which == "delta"        ? SurveyMetric::kDelta
                                            : SurveyMetric::kBetti;
      return run_survey_command(sv, out, err);
    } else if (*bench_cmd) {
      return run_bench_command(bo, out, err);
    } else if (*verify_cmd) {
      vo.gens = gens;
      return run_verify_command(vo, out, err);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> storage{"shiftmon"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace shiftmon::cli
