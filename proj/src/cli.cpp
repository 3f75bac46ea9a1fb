#include "krchar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <variant>

#include "krchar/errors.hpp"
#include "krchar/kr_tables.hpp"
#include "krchar/series.hpp"
#include "krchar/verify.hpp"
#include "krchar/weyl.hpp"

namespace krchar {

namespace {

// Parabolic subgroups up to this order are covered by `--check denominator`.
constexpr std::uint64_t kDenominatorGroupCap = 1'000'000;

const std::vector<std::string> kChecks = {"simpleref", "norsys",  "qtilde",  "qsystem-A", "limit",  "denominator",
                                          "e8-node1",  "f4-node4", "wtineq", "determination", "all"};

// Older name of `determination`, still accepted on the command line.
constexpr const char* kDeterminationAlias = "section5";

struct Task {
  std::string check;
  std::function<CheckReport()> run;
};

struct Outcome {
  std::string check;
  std::optional<CheckReport> report;
  int error_code = kExitPass;
  std::string error;
};

Outcome run_task(const Task& task) {
  Outcome o{task.check, std::nullopt, kExitPass, {}};
  try {
    o.report = task.run();
  } catch (const BudgetExceeded& e) {
    o.error_code = kExitBudget;
    o.error = e.what();
  } catch (const InvalidArgument& e) {
    o.error_code = kExitUsage;
    o.error = e.what();
  } catch (const Unsupported& e) {
    o.error_code = kExitUsage;
    o.error = e.what();
  }
  return o;
}

std::vector<Outcome> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Outcome> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_task(tasks[i]);
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  std::stable_sort(results.begin(), results.end(),
                   [](const Outcome& a, const Outcome& b) { return a.check < b.check; });
  return results;
}

std::vector<int> nodes_for(const RootDatum& d, const RunConfig& c) {
  if (c.node) return {*c.node};
  std::vector<int> all;
  for (int a = 1; a <= d.rank(); ++a) all.push_back(a);
  return all;
}

void plan_check(const std::string& check, const RootDatum& d, const RunConfig& c, bool explicit_check,
                std::vector<Task>& tasks) {
  const Limits limits = c.limits;
  const LieType type = d.type();
  auto datum = [type] { return RootDatum(type); };
  if (check == "simpleref") {
    tasks.push_back({check, [=] { return check_simpleref(datum()); }});
  } else if (check == "norsys" || check == "qtilde" || check == "wtineq") {
    for (int a : nodes_for(d, c)) {
      if (check == "norsys") tasks.push_back({check, [=] { return check_my_norsys(datum(), a); }});
      if (check == "qtilde") tasks.push_back({check, [=] { return check_qtilde(datum(), a); }});
      if (check == "wtineq") tasks.push_back({check, [=] { return check_wtineq(datum(), a, false, limits); }});
    }
  } else if (check == "qsystem-A") {
    if (type.family() != Family::A) {
      if (explicit_check) throw Unsupported("qsystem-A needs a type A algebra");
      return;
    }
    const int m_max = c.m_max.value_or(4);
    tasks.push_back({check, [=] { return check_qsystem_typeA(type.rank(), m_max, false, limits); }});
  } else if (check == "limit") {
    const int order = c.order;
    const int m_max = c.m_max.value_or(order);
    for (int a : nodes_for(d, c)) {
      if (!c.node && !find_polyhedral_data(d, a)) continue;
      tasks.push_back({check, [=] { return check_limit(datum(), a, order, m_max, false, limits); }});
    }
  } else if (check == "denominator") {
    for (NodeSet J : parabolic_subsets(d, std::min<std::uint64_t>(kDenominatorGroupCap, limits.orbit_bound)))
      tasks.push_back({check, [=] { return check_denominator(datum(), J, false, limits); }});
  } else if (check == "e8-node1" || check == "f4-node4") {
    const bool e8 = check == "e8-node1";
    if (type != (e8 ? LieType(Family::E, 8) : LieType(Family::F, 4))) {
      if (explicit_check) throw Unsupported(check + " needs type " + (e8 ? "E8" : "F4"));
      return;
    }
    tasks.push_back({check, [=] { return e8 ? check_E8_node1_identity(false, limits) : check_F4_node4_identity(false, limits); }});
  } else if (check == "determination") {
    tasks.push_back({check, [=] { return replay_determination_order(type); }});
  }
}

std::string params_text(const Json& params) {
  std::string s;
  for (const auto& [k, v] : params.items()) {
    if (k == "perturbed") continue;
    s += (s.empty() ? "" : " ") + k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return s;
}

int emit(const RunConfig& c, const std::string& text, std::ostream& out, std::ostream& err) {
  if (c.out_path.empty()) {
    out << text;
    return kExitPass;
  }
  std::ofstream file(c.out_path);
  if (!file) {
    err << "error: cannot write " << c.out_path << "\n";
    return kExitUsage;
  }
  file << text;
  return kExitPass;
}

RootDatum datum_from(const RunConfig& c) {
  if (c.lie_type.empty()) throw InvalidArgument("--type is required");
  const RootDatum d(LieType::parse(c.lie_type));
  if (c.node && (*c.node < 1 || *c.node > d.rank()))
    throw InvalidArgument("--node " + std::to_string(*c.node) + " is outside 1.." + std::to_string(d.rank()));
  return d;
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RootDatum d = datum_from(c);
    const std::string check = c.check == kDeterminationAlias ? "determination" : c.check;
    if (std::find(kChecks.begin(), kChecks.end(), check) == kChecks.end())
      throw InvalidArgument("unknown check " + c.check);
    std::vector<Task> tasks;
    if (check == "all") {
      for (const auto& name : kChecks)
        if (name != "all") plan_check(name, d, c, false, tasks);
    } else {
      plan_check(check, d, c, true, tasks);
    }
    const std::vector<Outcome> outcomes = run_tasks(tasks, c.jobs);

    int code = kExitPass;
    auto raise = [&code](int k) {
      // usage > budget > fail > pass
      static constexpr int rank_of[] = {0, 1, 3, 2};
      if (rank_of[k] > rank_of[code]) code = k;
    };
    Json reports = Json::array();
    std::ostringstream text;
    for (const auto& o : outcomes) {
      if (!o.report) {
        err << "error: " << o.check << ": " << o.error << "\n";
        raise(o.error_code);
        continue;
      }
      const CheckReport& r = *o.report;
      if (!r.pass) raise(kExitFail);
      reports.push_back(to_json(r));
      text << (r.pass ? "PASS " : "FAIL ") << r.check << " " << params_text(r.params) << " [" << r.stats.millis
           << " ms, " << r.stats.terms_peak << " terms]\n";
      if (r.witness) text << "  witness: " << r.witness->dump() << "\n";
    }
    const std::string body = c.format == OutputFormat::Json ? reports.dump(2) + "\n" : text.str();
    const int written = emit(c, body, out, err);
    return written != kExitPass ? written : code;
  });
}

int cmd_series(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RootDatum d = datum_from(c);
    if (!c.node) throw InvalidArgument("--node is required");
    if (c.order < 0) throw InvalidArgument("--order must be nonnegative");
    TruncatedSeries s(d.rank(), c.order);
    if (c.kind == "my") {
      s = my_product_series(d, *c.node, c.order);
    } else if (c.kind == "kr") {
      if (!c.m || *c.m < 0) throw InvalidArgument("--kind kr needs --m ≥ 0");
      s = kr_character_truncated(d, *c.node, *c.m, c.order, c.limits);
    } else {
      throw InvalidArgument("--kind must be my or kr");
    }
    std::string body;
    if (c.format == OutputFormat::Json) {
      Json terms = Json::array();
      for (const auto& [e, coeff] : s.terms())
        terms.push_back({{"exponent", std::vector<int>(e.begin(), e.begin() + d.rank())}, {"coefficient", coeff.get_str()}});
      Json j = {{"type", d.type().name()}, {"node", *c.node}, {"kind", c.kind}, {"order", c.order}, {"terms", terms}};
      if (c.kind == "kr") j["m"] = *c.m;
      body = j.dump(2) + "\n";
    } else {
      body = format_series(s) + "\n";
    }
    return emit(c, body, out, err);
  });
}

int cmd_registry(const RunConfig& c, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Json rows = Json::array();
    std::ostringstream text;
    for (const auto& p : supported_pairs()) {
      const RootDatum d(p.type);
      Json lambdas = Json::array();
      std::string lambda_text;
      for (const Weight& l : p.lambdas) {
        lambdas.push_back(l.to_string());
        lambda_text += (lambda_text.empty() ? "" : " ") + l.to_string();
      }
      rows.push_back({{"type", p.type.name()}, {"node", p.node}, {"b", p.b}, {"lambdas", lambdas}});
      text << p.type.name() << " node " << p.node << ": b=" << Json(p.b).dump() << " lambdas=" << lambda_text << "\n";
    }
    return emit(c, c.format == OutputFormat::Json ? rows.dump(2) + "\n" : text.str(), out, err);
  });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of KR character limits and the identities behind them"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "text";
  std::size_t orbit_bound = c.limits.orbit_bound;
  std::size_t term_bound = c.limits.term_bound;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", c.lie_type, "Lie type, e.g. E8");
    sub->add_option("--node", c.node, "Dynkin node (Bourbaki labels)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", c.out_path, "write the report to this file");
    sub->add_option("--orbit-bound", orbit_bound, "largest orbit or group to enumerate")->check(CLI::PositiveNumber);
    sub->add_option("--term-bound", term_bound, "largest stored element, in terms")->check(CLI::PositiveNumber);
    sub->add_option("--order", c.order, "truncation height N");
    sub->add_option("--m", c.m, "KR level m");
    sub->add_option("--m-max", c.m_max, "largest level m");
    sub->add_option("--jobs", c.jobs, "concurrent checks")->check(CLI::PositiveNumber);
  };
  CLI::App* verify = app.add_subcommand("verify", "run identity checks");
  common(verify);
  std::vector<std::string> check_names = kChecks;
  check_names.push_back(kDeterminationAlias);
  verify->add_option("--check", c.check, "check name")->check(CLI::IsMember(check_names));
  CLI::App* series = app.add_subcommand("series", "print a truncated series");
  common(series);
  series->add_option("--kind", c.kind, "my or kr")->check(CLI::IsMember({"my", "kr"}));
  CLI::App* registry = app.add_subcommand("registry", "dump the polyhedral formula registry");
  common(registry);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const CLI::App* sub : app.get_subcommands())
    if (sub->get_help_ptr()->count() > 0) {
      out << sub->help();
      return kExitPass;
    }
  c.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
  c.limits.orbit_bound = orbit_bound;
  c.limits.term_bound = term_bound;
  c.limits = apply_memory_budget(c.limits);
  if (verify->parsed()) return cmd_verify(c, out, err);
  if (series->parsed()) return cmd_series(c, out, err);
  return cmd_registry(c, out, err);
}

}  // namespace krchar
