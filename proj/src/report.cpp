#include "hodge/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "hodge/arrangement.hpp"

namespace hodge {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  return out;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "yes" || v == "1") return true;
  if (v == "false" || v == "no" || v == "0") return false;
  throw InputError("expected a boolean, got '" + v + "'");
}

const char* str(bool b) { return b ? "true" : "false"; }

std::string str(LjtVerdict v) {
  switch (v) {
    case LjtVerdict::True: return "true";
    case LjtVerdict::False: return "false";
    case LjtVerdict::NeedsStrongEulerCheckFailure: return "needs_strong_euler_failure";
  }
  return "?";
}

std::string str(PrimeVerdict v) {
  switch (v) {
    case PrimeVerdict::PrimeCertified: return "prime";
    case PrimeVerdict::NotPrime: return "not_prime";
    case PrimeVerdict::Unknown: return "unknown";
  }
  return "?";
}

PrimeVerdict prime_from(const std::string& v) {
  if (v == "prime") return PrimeVerdict::PrimeCertified;
  if (v == "not_prime") return PrimeVerdict::NotPrime;
  if (v == "unknown") return PrimeVerdict::Unknown;
  throw InputError("unknown verdict '" + v + "'");
}

std::string str(const std::vector<Polynomial>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s;
}

std::string gb_string(const Ideal& I) { return Ideal(I.ring(), buchberger(I).basis()).to_string(); }

std::string roots_string(const std::vector<RootMultiplicity>& roots) {
  std::string s;
  for (std::size_t i = 0; i < roots.size(); ++i)
    s += (i ? ", " : "") + to_string(roots[i].root) + ":" + std::to_string(roots[i].multiplicity);
  return s;
}

std::string seconds(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", t);
  return buf;
}

ExitCode exit_for(HodgeReport::Failure f) {
  switch (f) {
    case HodgeReport::Failure::None: return ExitCode::Ok;
    case HodgeReport::Failure::Hypothesis: return ExitCode::Hypothesis;
    case HodgeReport::Failure::Budget: return ExitCode::Budget;
    case HodgeReport::Failure::Input: return ExitCode::Input;
    case HodgeReport::Failure::Internal: return ExitCode::Failure;
  }
  return ExitCode::Failure;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Pin parse_pin(const std::string& text) {
  auto eq = text.find('='), colon = text.rfind(':');
  if (eq == std::string::npos || colon == std::string::npos || colon < eq)
    throw InputError("pin must look like name=value:source");
  Pin p{trim(text.substr(0, eq)), trim(text.substr(eq + 1, colon - eq - 1)), trim(text.substr(colon + 1))};
  if (p.name != "parametrically_prime") throw InputError("unknown pin '" + p.name + "'");
  prime_from(p.value);
  if (p.source != "paper" && p.source != "user") throw InputError("pin source must be paper or user");
  return p;
}

JobSpec parse_job(const std::string& text) {
  JobSpec job;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto c = line.find(':');
    if (c == std::string::npos) throw InputError("job line without ':': " + line);
    std::string k = trim(line.substr(0, c)), v = trim(line.substr(c + 1));
    if (k == "name") job.name = v;
    else if (k == "vars") job.vars = split(v, ',');
    else if (k == "poly") job.poly = v;
    else if (k == "bfunction") job.bfunction = v;
    else if (k == "weights") {
      std::vector<Rational> w;
      for (const auto& x : split(v, ',')) w.push_back(parse_rational(x));
      job.weights = w;
    } else if (k == "locally_pwh") job.locally_pwh = parse_bool(v);
    else if (k == "arrangement") job.arrangement = parse_bool(v);
    else if (k == "max_level") job.max_level = std::stoi(v);
    else if (k == "pin") job.pins.push_back(parse_pin(v));
    else if (k == "budget") job.budget = static_cast<std::size_t>(std::stoul(v));
    else throw InputError("unknown job key '" + k + "'");
  }
  if (job.vars.empty() || job.poly.empty()) throw InputError("a job needs vars and poly");
  return job;
}

const ReportEntry* ReportDocument::find(const std::string& key) const {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

std::string ReportDocument::text(bool with_timings) const {
  std::string s;
  for (const auto& e : entries) {
    if (!with_timings && e.key.rfind("timing.", 0) == 0) continue;
    s += e.key + ": " + e.value;
    if (!e.provenance.empty()) s += " | " + e.provenance;
    s += "\n";
  }
  return s;
}

ReportDocument parse_report(const std::string& text) {
  ReportDocument doc;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto c = line.find(": ");
    if (c == std::string::npos) {
      if (!line.empty() && line.back() == ':') c = line.size() - 1;
      else throw InputError("report line without ': ': " + line);
    }
    ReportEntry e{trim(line.substr(0, c)), c + 2 <= line.size() ? line.substr(c + 2) : "", ""};
    auto bar = e.value.rfind(" | ");
    if (bar != std::string::npos) {
      e.provenance = trim(e.value.substr(bar + 3));
      e.value = e.value.substr(0, bar);
    }
    e.value = trim(e.value);
    doc.entries.push_back(std::move(e));
  }
  return doc;
}

Ideal parse_ideal(const std::string& text, const Ring& ring) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') throw InputError("ideal must be parenthesized: " + t);
  t = trim(t.substr(1, t.size() - 2));
  std::vector<Polynomial> gens;
  if (!t.empty())
    for (const auto& g : split(t, ',')) gens.push_back(parse_polynomial(g, ring));
  return Ideal(ring, gens);
}

std::vector<std::string> split_factors(const std::string& product) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : product) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '*' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur += ch;
  }
  out.push_back(trim(cur));
  for (auto& f : out) {
    if (f.size() >= 2 && f.front() == '(' && f.back() == ')') f = trim(f.substr(1, f.size() - 2));
    if (f.empty() || f.find('^') != std::string::npos)
      throw InputError("arrangement factors must be distinct linear forms: '" + f + "'");
  }
  return out;
}

ReportDocument run_job(const JobSpec& job) {
  ReportDocument doc;
  auto add = [&](std::string k, std::string v, std::string p = "") {
    doc.entries.push_back({std::move(k), std::move(v), std::move(p)});
  };
  add("format", kReportFormat);
  add("tool_version", kToolVersion);
  add("vars", [&] {
    std::string s;
    for (std::size_t i = 0; i < job.vars.size(); ++i) s += (i ? "," : "") + job.vars[i];
    return s;
  }());
  add("order", "degrevlex");

  auto input_failure = [&](const std::string& stage, const std::exception& e) {
    add("status", "failed");
    add("failed_stage", stage);
    add("error", e.what());
    doc.exit_code = ExitCode::Input;
    return doc;
  };

  Ring R;
  Polynomial f;
  AnalyzeOptions opt;
  std::optional<Arrangement> arr;
  std::string pin_source;
  try {
    R = PolyRing::make(job.vars);
    f = parse_polynomial(job.poly, R);
    if (job.max_level < -1) throw InputError("max level must be nonnegative");
    opt.K = job.max_level;
    if (job.bfunction) opt.injected_b = parse_polynomial(*job.bfunction, s_ring());
    for (const auto& p : job.pins) {
      opt.pinned_prime = prime_from(p.value);
      pin_source = p.source;
    }
    opt.budget.max_steps = job.budget;
    if (job.arrangement) {
      std::vector<Polynomial> forms;
      for (const auto& t : split_factors(job.poly)) forms.push_back(parse_polynomial(t, R));
      arr = make_arrangement(forms);
    }
  } catch (const Error& e) {
    return input_failure("input", e);
  } catch (const std::exception& e) {
    return input_failure("input", e);
  }
  add("f", f.to_string());

  Budget saved = default_budget();
  set_default_budget(opt.budget);
  HodgeReport rep = analyze(f, opt);
  set_default_budget(saved);

  const std::string C = "computed";
  auto reached = [&](const char* stage) {
    return std::any_of(rep.timings.begin(), rep.timings.end(), [&](const Timing& t) { return t.stage == stage; });
  };
  if (reached("euler_field")) {
    add("hyp.euler", str(rep.hyp.euler), C);
    add("hyp.strong_euler", str(rep.hyp.strong_euler), C);
    if (rep.euler) {
      add("euler.numerators", str(rep.euler->numerators), C);
      add("euler.denominator", rep.euler->denominator.to_string(), C);
    }
  }
  if (reached("linear_jacobian_type")) add("hyp.linear_jacobian_type", str(rep.ljt), C);
  if (reached("annihilator")) {
    add("annihilator.method", rep.ann.method == AnnMethod::LogDerivation ? "log_derivation" : "general", C);
    add("annihilator", rep.ann.ideal.to_string(), C);
  }
  if (reached("parametrically_prime")) {
    std::string prov = rep.hyp.prime_provenance == Provenance::Pinned ? "pinned:" + pin_source
                       : rep.prime.route.empty()                     ? "computed:no euler field"
                                                                     : "computed:route " + rep.prime.route;
    add("hyp.parametrically_prime", str(rep.hyp.prime), prov);
    if (!rep.prime.witness.empty()) add("prime.witness", rep.prime.witness, C);
  }
  if (reached("bernstein_sato")) {
    add("bfunction", rep.b.b.to_string(), to_string(rep.b.provenance));
    add("bfunction.verified", str(rep.b.verified), C);
    add("bfunction.roots", roots_string(rep.b.roots), C);
  }
  if (reached("split_beta")) add("hyp.roots_in_interval", str(rep.hyp.roots_in_interval), C);
  if (rep.split) {
    add("beta", rep.split->beta.to_string(), C);
    add("beta_prime", rep.split->beta_prime.to_string(), C);
    add("r_f", std::to_string(rep.split->r_f), C);
  }
  if (rep.k0_elimination) add("I_0.elimination", gb_string(*rep.k0_elimination), C);
  for (const auto& H : rep.levels)
    add("I_" + std::to_string(H.k), gb_string(H.ideal), H.hodge_label ? C : "computed:formula_output");
  if (rep.k0_agree) add("check.k0_agree", str(*rep.k0_agree), C);
  if (rep.generation_level) add("generation_level", std::to_string(*rep.generation_level), C);
  if (rep.r_f_containment) add("check.r_f_containment", str(*rep.r_f_containment), C);

  doc.exit_code = exit_for(rep.failure);
  std::string failed_stage = rep.failed_stage, error = rep.error;

  if (arr && rep.failure == HodgeReport::Failure::None) {
    try {
      Ideal M = mustata_multiplier_ideal(*arr);
      add("oracle.mustata", gb_string(M), C);
      if (!rep.levels.empty()) add("oracle.agree", str(ideals_equal(M, rep.levels.front().ideal)), C);
    } catch (const Error& e) {
      failed_stage = "arrangement_oracle";
      error = e.what();
      doc.exit_code = ExitCode::Input;
    }
  }
  if (job.weights && doc.exit_code == ExitCode::Ok) {
    try {
      auto pw = pw_root_criterion(f, *job.weights, job.locally_pwh);
      add("pw_root.interval", "[" + to_string(pw.lo) + "," + to_string(pw.hi) + ")", C);
      add("pw_root.vanishes", str(pw.vanishes), C);
      if (pw.failing) add("pw_root.failing_degree", to_string(*pw.failing), C);
      add("pw_root.roots_certified", str(pw.roots_certified), pw.roots_certified ? "computed:asserted_pwh" : C);
    } catch (const Error& e) {
      failed_stage = "pw_root_criterion";
      error = e.what();
      doc.exit_code = ExitCode::Input;
    }
  }
  if (!rep.note.empty()) add("note", rep.note);
  if (doc.exit_code == ExitCode::Ok) {
    add("status", "ok");
  } else {
    add("status", "failed");
    add("failed_stage", failed_stage);
    add("error", error);
  }
  for (const auto& t : rep.timings) add("timing." + t.stage, seconds(t.seconds));
  return doc;
}

std::optional<ExpectedMismatch> compare_report(const ReportDocument& expected, const ReportDocument& actual,
                                               const Ring& ring) {
  for (const auto& e : expected.entries) {
    const ReportEntry* a = actual.find(e.key);
    if (!a) return ExpectedMismatch{e.key, "missing from report (expected " + e.value + ")"};
    if (!e.provenance.empty() && e.provenance != a->provenance)
      return ExpectedMismatch{e.key, "provenance " + a->provenance + ", expected " + e.provenance};
    if (e.value == "*") continue;
    bool ideal_like = !e.value.empty() && e.value.front() == '(' && e.value.back() == ')' &&
                      (e.key.rfind("I_", 0) == 0 || e.key.rfind("oracle.", 0) == 0);
    if (ideal_like) {
      Ideal want = parse_ideal(e.value, ring), got = parse_ideal(a->value, ring);
      auto gw = buchberger(want), gg = buchberger(got);
      for (const auto& g : want.generators())
        if (!contains(gg, g))
          return ExpectedMismatch{e.key, "expected generator " + g.to_string() + " is not in the computed ideal " + a->value};
      for (const auto& g : got.generators())
        if (!contains(gw, g))
          return ExpectedMismatch{e.key, "computed generator " + g.to_string() + " is not in the expected ideal " + e.value};
      continue;
    }
    if (e.value != a->value) return ExpectedMismatch{e.key, "got " + a->value + ", expected " + e.value};
  }
  return std::nullopt;
}

bool CorpusResult::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const CorpusEntry& e) { return e.pass; });
}

std::string CorpusResult::table() const {
  std::string s;
  std::size_t pass = 0;
  for (const auto& e : entries) {
    pass += e.pass;
    s += std::string(e.pass ? "PASS " : "FAIL ") + e.name + " (" + seconds(e.seconds) + " s)";
    if (!e.pass) s += "\n     " + e.diff;
    s += "\n";
  }
  s += std::to_string(pass) + "/" + std::to_string(entries.size()) + " fixtures passed\n";
  return s;
}

CorpusResult run_corpus(const std::string& dir, unsigned workers) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError("corpus directory not found: " + dir);
  std::vector<fs::path> jobs;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.path().extension() == ".job") jobs.push_back(de.path());
  std::sort(jobs.begin(), jobs.end());
  CorpusResult res;
  res.entries.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      CorpusEntry& out = res.entries[i];
      out.name = jobs[i].stem().string();
      auto t0 = std::chrono::steady_clock::now();
      try {
        JobSpec job = parse_job(read_file(jobs[i]));
        fs::path exp = jobs[i];
        exp.replace_extension(".expected");
        if (!fs::exists(exp)) throw InputError("missing expected file " + exp.filename().string());
        ReportDocument expected = parse_report(read_file(exp));
        ReportDocument actual = run_job(job);
        auto mm = compare_report(expected, actual, PolyRing::make(job.vars));
        out.pass = !mm;
        if (mm) out.diff = mm->key + ": " + mm->detail;
      } catch (const std::exception& e) {
        out.pass = false;
        out.diff = e.what();
      }
      out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return res;
}

}  // namespace hodge
