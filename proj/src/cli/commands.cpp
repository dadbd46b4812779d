#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "shiftmon/cli.hpp"
#include "shiftmon/invariants.hpp"
#include "shiftmon/json_io.hpp"
#include "shiftmon/oracle.hpp"
#include "shiftmon/shift_family.hpp"

namespace shiftmon::cli {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kOverflow:
      return kExitBudgetExceeded;
    case ErrorCode::kVerificationFailed:
    case ErrorCode::kInternal:
      return kExitVerificationFailed;
    default:
      return kExitInvalidInput;
  }
}

namespace {

NumericalMonoid strict_monoid(const std::vector<Int>& gens) {
  auto m = NumericalMonoid::normalize(gens);
  std::vector<Int> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (m.generators() != sorted) {
    throw Error(ErrorCode::kNotMinimal,
                "generators are not minimal; a minimal tuple would be " +
                    [&] {
                      std::string s;
                      for (Int g : m.generators()) {
                        s += (s.empty() ? "" : ",") + std::to_string(g);
                      }
                      return s;
                    }());
  }
  if (!m.primitive()) {
    throw Error(ErrorCode::kNonPrimitive,
                "generators have gcd " + std::to_string(m.gcd()));
  }
  return m;
}

void print_text(const NumericalMonoid& m, const Presentation& p,
                std::ostream& out) {
  out << "generators:";
  for (Int g : m.generators()) out << ' ' << g;
  out << "\nbetti:";
  for (Int b : p.betti_elements()) out << ' ' << b;
  out << '\n';
  for (const auto& r : p.relations()) {
    out << r.betti << ": " << r.left << " ~ " << r.right << '\n';
  }
}

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

MinpresOutcome compute_minpres(const MinpresOptions& opts) {
  const NumericalMonoid m = strict_monoid(opts.gens);
  Strategy use = opts.strategy;
  if (m.rank() < 2) use = Strategy::kDirect;
  if (use == Strategy::kAuto) {
    use = detect_family(m) ? Strategy::kShift : Strategy::kDirect;
  }
  MinpresOutcome out;
  out.used = use;
  if (use == Strategy::kShift) {
    AcceleratedOptions ao;
    ao.paranoid = opts.paranoid;
    out.presentation =
        accelerated_minimal_presentation(family_of(m), m.multiplicity(), ao);
  } else {
    out.presentation = minimal_presentation(m);
    if (opts.paranoid) {
      const auto report = oracle::congruence_closure_check(
          m.generators(), out.presentation.relations(),
          frobenius(m) + 2 * m.largest());
      if (!report.ok()) {
        throw Error(ErrorCode::kVerificationFailed, "closure check failed");
      }
    }
  }
  return out;
}

int run_minpres_command(const MinpresOptions& opts, std::ostream& out,
                        std::ostream& err) {
  try {
    if (opts.emit_all) {
      const NumericalMonoid m = strict_monoid(opts.gens);
      const auto all = all_minimal_presentations(m, opts.cap);
      if (opts.format == Format::kText) {
        out << "count: " << all.count << (all.saturated ? " (saturated)" : "")
            << '\n';
        for (std::size_t i = 0; i < all.items.size(); ++i) {
          out << "# presentation " << i + 1 << '\n';
          print_text(m, all.items[i], out);
        }
      } else {
        nlohmann::ordered_json j;
        j["generators"] = m.generators();
        j["betti_elements"] = betti_elements(m);
        j["count"] = all.count;
        j["count_saturated"] = all.saturated;
        auto items = nlohmann::ordered_json::array();
        for (const auto& p : all.items) {
          items.push_back(presentation_to_json(m, p)["relations"]);
        }
        j["presentations"] = std::move(items);
        out << j.dump(2) << '\n';
      }
      return kExitOk;
    }
    const NumericalMonoid m = strict_monoid(opts.gens);
    const auto result = compute_minpres(opts);
    if (opts.format == Format::kText) {
      print_text(m, result.presentation, out);
    } else {
      out << presentation_to_json(m, result.presentation).dump(2) << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "minpres: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

namespace {

std::string_view metric_name(SurveyMetric metric) {
  switch (metric) {
    case SurveyMetric::kBetti: return "betti";
    case SurveyMetric::kCatenary: return "catenary";
    case SurveyMetric::kMinpresSize: return "minpres-size";
    case SurveyMetric::kDelta: return "delta";
  }
  return "?";
}

std::vector<SurveyRow> survey_one(const ShiftedFamily& f, Int n,
                                  SurveyMetric metric) {
  const std::string name(metric_name(metric));
  std::vector<SurveyRow> rows;
  auto note = [&](std::string text) {
    rows.push_back({n, name, std::nullopt, std::move(text)});
  };
  try {
    const FamilyMember member = monoid_at(f, n);
    if (!member.primitive) {
      note("skipped:non-primitive");
      return rows;
    }
    const NumericalMonoid& m = member.monoid;
    switch (metric) {
      case SurveyMetric::kBetti:
        for (Int b : accelerated_minimal_presentation(f, n).betti_elements()) {
          rows.push_back({n, name, b, {}});
        }
        break;
      case SurveyMetric::kMinpresSize:
        rows.push_back(
            {n, name, static_cast<Int>(accelerated_minimal_presentation(f, n).size()),
             {}});
        break;
      case SurveyMetric::kCatenary: {
        // c(M_{n + r_k}) = c(M_n) + d above r_k^2.
        const Int base = base_shift(f, n);
        if (base != n && n > f.threshold() + f.largest_offset()) {
          const Int steps = (n - base) / f.largest_offset();
          const Int c = catenary_of_monoid(monoid_at(f, base).monoid);
          rows.push_back({n, name, c + steps * f.d(), {}});
        } else {
          rows.push_back({n, name, catenary_of_monoid(m), {}});
        }
        break;
      }
      case SurveyMetric::kDelta: {
        const FamilyContext ctx{f, n};
        const auto ds = delta_set(m, default_window(m), ctx);
        const std::string label = ds.window_limited ? "delta-windowed" : name;
        for (Int v : ds.values) rows.push_back({n, label, v, {}});
        break;
      }
    }
  } catch (const Error& e) {
    rows.clear();
    if (e.code() == ErrorCode::kNotMinimal) {
      note("skipped:not-minimal");
    } else {
      note("error:" + std::string(to_string(e.code())));
    }
  }
  return rows;
}

}  // namespace

std::vector<SurveyRow> survey_rows(const SurveyOptions& opts) {
  const ShiftedFamily f(opts.r);
  if (opts.n_from < 1) {
    throw Error(ErrorCode::kInvalidInput, "--n-from must be at least 1");
  }
  const Int count = opts.n_to >= opts.n_from ? opts.n_to - opts.n_from + 1 : 0;
  std::vector<std::vector<SurveyRow>> per_n(static_cast<std::size_t>(count));
  std::atomic<Int> next{0};
  auto worker = [&] {
    for (Int i = next++; i < count; i = next++) {
      per_n[static_cast<std::size_t>(i)] =
          survey_one(f, opts.n_from + i, opts.metric);
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<SurveyRow> rows;
  for (auto& block : per_n) {
    std::sort(block.begin(), block.end(), [](const SurveyRow& a, const SurveyRow& b) {
      return std::tie(a.value, a.metric, a.note) < std::tie(b.value, b.metric, b.note);
    });
    rows.insert(rows.end(), block.begin(), block.end());
  }
  return rows;
}

void write_survey_csv(const std::vector<SurveyRow>& rows, std::ostream& os) {
  os << "n,metric,value\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.metric << ',';
    if (r.value) {
      os << *r.value;
    } else {
      os << r.note;
    }
    os << '\n';
  }
}

int run_survey_command(const SurveyOptions& opts, std::ostream& out,
                       std::ostream& err) {
  try {
    const auto rows = survey_rows(opts);
    if (opts.out_path.empty() || opts.out_path == "-") {
      write_survey_csv(rows, out);
      return kExitOk;
    }
    std::ofstream file(opts.out_path);
    if (!file) {
      err << "survey: cannot open " << opts.out_path << " for writing\n";
      return kExitInvalidInput;
    }
    write_survey_csv(rows, file);
    file.close();
    if (!file) {
      err << "survey: write to " << opts.out_path << " failed\n";
      return kExitInvalidInput;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "survey: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

BenchResult run_bench(const BenchOptions& opts) {
  const ShiftedFamily f(opts.r);
  const FamilyMember member = monoid_at(f, opts.n);
  if (!member.primitive) {
    throw Error(ErrorCode::kNonPrimitive, "M_n is not primitive");
  }
  const int repeats = std::max(1, opts.repeats);
  using Clock = std::chrono::steady_clock;
  auto ms_since = [](Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  };

  BenchResult result;
  {
    std::vector<double> times;
    for (int i = 0; i < repeats; ++i) {
      const auto start = Clock::now();
      const auto p = accelerated_minimal_presentation(f, opts.n);
      times.push_back(ms_since(start));
      result.accelerated.output = p;
    }
    result.accelerated.completed = true;
    result.accelerated.median_ms = median(times);
  }
  {
    std::vector<double> times;
    const auto limit = std::chrono::milliseconds(
        static_cast<std::int64_t>(opts.timeout_secs * 1000.0));
    for (int i = 0; i < repeats; ++i) {
      const auto start = Clock::now();
      try {
        const auto p = minimal_presentation(member.monoid, Budget::with_timeout(limit));
        times.push_back(ms_since(start));
        result.direct.output = p;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kBudgetExceeded) throw;
        result.direct.timed_out = true;
        result.direct.median_ms = ms_since(start);
        break;
      }
    }
    if (!result.direct.timed_out) {
      result.direct.completed = true;
      result.direct.median_ms = median(times);
    }
  }
  if (result.direct.completed) {
    result.outputs_equal =
        canonicalize(member.monoid, *result.direct.output, false) ==
        canonicalize(member.monoid, *result.accelerated.output, false);
  }
  return result;
}

int run_bench_command(const BenchOptions& opts, std::ostream& out,
                      std::ostream& err) {
  try {
    const auto result = run_bench(opts);
    const ShiftedFamily f(opts.r);
    out << "M_" << opts.n << " = <";
    const auto gens = f.generators_at(opts.n);
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out << (i ? "," : "") << gens[i];
    }
    out << ">  repeats=" << opts.repeats << '\n';
    out << std::fixed << std::setprecision(3);
    auto leg = [&](const char* name, const BenchLeg& l) {
      out << std::left << std::setw(12) << name << ' ';
      if (l.completed) {
        out << std::setw(8) << "ok" << l.median_ms << " ms\n";
      } else {
        out << std::setw(8) << "timeout" << '>' << opts.timeout_secs * 1000.0
            << " ms\n";
      }
    };
    leg("direct", result.direct);
    leg("accelerated", result.accelerated);
    if (result.direct.completed && result.accelerated.median_ms > 0) {
      out << "speedup     " << result.direct.median_ms / result.accelerated.median_ms
          << "x\n";
    } else if (result.accelerated.median_ms > 0) {
      out << "speedup     >"
          << opts.timeout_secs * 1000.0 / result.accelerated.median_ms << "x\n";
    }
    if (result.outputs_equal) {
      out << "outputs     " << (*result.outputs_equal ? "equal" : "DIFFER") << '\n';
      if (!*result.outputs_equal) return kExitVerificationFailed;
    } else {
      out << "outputs     unchecked (direct leg did not finish)\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "bench: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

int run_verify_command(const VerifyOptions& opts, std::ostream& out,
                       std::ostream& err) {
  try {
    const NumericalMonoid m = strict_monoid(opts.gens);
    std::ifstream file(opts.presentation_path);
    if (!file) {
      err << "verify: cannot read " << opts.presentation_path << '\n';
      return kExitInvalidInput;
    }
    nlohmann::json j;
    try {
      file >> j;
    } catch (const nlohmann::json::exception& e) {
      err << "verify: " << e.what() << '\n';
      return kExitInvalidInput;
    }
    const Presentation p = presentation_from_json(j, m);
    for (const auto& r : p.relations()) {
      if (r.right.value(m.generators()) != r.betti) {
        out << "FAIL: relation " << r.left << " ~ " << r.right
            << " sides evaluate differently\n";
        return kExitVerificationFailed;
      }
    }
    const Int bound = opts.bound.value_or(frobenius(m) + 2 * m.largest());
    const auto report =
        oracle::congruence_closure_check(m.generators(), p.relations(), bound);
    if (!report.ok()) {
      for (const auto& f : report.failures) {
        out << "FAIL: " << f.element << ": " << f.from << " not connected to "
            << f.to << '\n';
      }
      return kExitVerificationFailed;
    }
    out << "ok: " << p.size() << " relations generate ker pi on [0, " << bound
        << "]\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "verify: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}

}  // namespace shiftmon::cli
