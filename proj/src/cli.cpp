#include "weylwalk/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "weylwalk/bench.hpp"
#include "weylwalk/io.hpp"
#include "weylwalk/propagator.hpp"
#include "weylwalk/verify.hpp"

namespace weylwalk {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitNoPath = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFormat = 65;

struct Common {
  std::string chi = "+";
  std::string out;
  std::string format = "json";
  std::uint64_t budget = kDefaultBudget;
  int jobs = 1;
  std::uint64_t seed = 20250819;
};

void add_common(CLI::App* sub, Common& c,
                const std::vector<std::string>& formats) {
  sub->add_option("--chi", c.chi, "Walk chirality: + or -")
      ->check(CLI::IsMember({"+", "-", "plus", "minus"}));
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sub->add_option("--budget", c.budget,
                  "Cost ceiling for enumeration-backed computations")
      ->capture_default_str();
  sub->add_option("--jobs", c.jobs, "Worker threads for cone fills")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--seed", c.seed, "Seed for randomized verification")
      ->capture_default_str();
}

Site parse_site(const std::string& text) {
  std::array<std::int64_t, 3> v{};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end =
        i < 2 ? text.find(',', start) : std::string::npos;
    const std::string part = text.substr(
        start, end == std::string::npos ? std::string::npos : end - start);
    std::size_t used = 0;
    try {
      v[i] = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("site \"" + text +
                                  "\" is not of the form x1,x2,x3");
    }
    while (used < part.size() && std::isspace(static_cast<unsigned char>(part[used])))
      ++used;
    if (used != part.size() || (i < 2 && end == std::string::npos))
      throw std::invalid_argument("site \"" + text +
                                  "\" is not of the form x1,x2,x3");
    start = end + 1;
  }
  return Site(v[0], v[1], v[2]);  // rejects mixed-parity coordinates
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + c.out);
  f << text;
}

std::string propagators_csv(const std::vector<Propagator>& ps) {
  std::ostringstream os;
  os << "t,chirality,from_x1,from_x2,from_x3,to_x1,to_x2,to_x3,row,col,"
        "re,im,log2_den,float_re,float_im\n";
  for (const auto& p : ps)
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col) {
        const Amplitude& a = p.matrix.at(r, col);
        const auto z = a.to_complex();
        os << p.t << ',' << io::chirality_label(p.chirality) << ','
           << p.from.x1 << ',' << p.from.x2 << ',' << p.from.x3 << ','
           << p.to.x1 << ',' << p.to.x2 << ',' << p.to.x3 << ','
           << r << ',' << col << ','
           << a.re().get_str() << ',' << a.im().get_str() << ','
           << a.log2_den() << ','
           << io::format_double(z.real()) << ',' << io::format_double(z.imag())
           << '\n';
      }
  return os.str();
}

int cmd_propagate(const Common& c, const std::string& from_s,
                  const std::string& to_s, std::int64_t t, bool strict) {
  const Site from = parse_site(from_s);
  const Site to = parse_site(to_s);
  const Chirality chi = io::chirality_from_label(c.chi);
  if (strict && !string_counts(from, to, t)) {
    std::cerr << "error: " << to.str() << " is outside the " << t
              << "-step cone of " << from.str() << "\n";
    return kExitNoPath;
  }
  const Propagator p = propagator_closed_form(from, to, t, chi);
  if (c.format == "csv")
    emit(c, propagators_csv({p}));
  else
    emit(c, io::propagator_record_json(p).dump(2) + "\n");
  return kExitOk;
}

int cmd_evolve(const Common& c, const std::string& state_path, std::int64_t t,
               const std::string& engine) {
  const Chirality chi = io::chirality_from_label(c.chi);
  const WalkState start = io::read_state_file(state_path);
  const WalkState state =
      engine == "convolve" ? convolve(start, t, chi) : evolve(start, t, chi);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "x1,x2,x3,up_re,up_im,up_log2_den,down_re,down_im,down_log2_den,"
          "probability\n";
    for (const auto& [x, v] : state.sites())
      os << x.x1 << ',' << x.x2 << ',' << x.x3 << ','
         << v.up.re().get_str() << ',' << v.up.im().get_str() << ','
         << v.up.log2_den() << ','
         << v.down.re().get_str() << ',' << v.down.im().get_str() << ','
         << v.down.log2_den() << ','
         << io::format_double(v.norm2().to_complex().real()) << '\n';
    emit(c, os.str());
    return kExitOk;
  }
  io::Json j;
  j["t"] = t;
  j["chirality"] = io::chirality_label(chi);
  j["engine"] = engine;
  j["site_count"] = state.support_size();
  j["norm2"] = io::amplitude_json(state.norm2());
  io::Json sites = io::Json::array();
  for (const auto& [x, v] : state.sites()) {
    io::Json row;
    row["x"] = io::site_json(x);
    row["up"] = io::amplitude_json(v.up);
    row["down"] = io::amplitude_json(v.down);
    row["probability"] = v.norm2().to_complex().real();
    sites.push_back(std::move(row));
  }
  j["sites"] = std::move(sites);
  emit(c, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_cone(const Common& c, const std::string& from_s, std::int64_t t) {
  const Site from = parse_site(from_s);
  const Chirality chi = io::chirality_from_label(c.chi);
  const std::vector<Propagator> table = cone_table(from, t, chi, c.jobs);
  if (c.format == "csv") {
    emit(c, propagators_csv(table));
    return kExitOk;
  }
  io::Json j;
  j["t"] = t;
  j["chirality"] = io::chirality_label(chi);
  j["from"] = io::site_json(from);
  j["site_count"] = table.size();
  io::Json rows = io::Json::array();
  for (const auto& p : table) rows.push_back(io::propagator_record_json(p));
  j["propagators"] = std::move(rows);
  emit(c, j.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const Common& c, const std::string& suite,
               const std::string& level, bool fault) {
  VerifyScales scales = level == "quick"  ? VerifyScales::quick()
                        : level == "full" ? VerifyScales::full()
                                          : VerifyScales::standard();
  scales.seed = c.seed;
  scales.budget = c.budget;
  const auto results = run_verify_suites(
      scales, suite,
      fault ? FaultInjection::flip_sign : FaultInjection::none);
  if (c.format == "json") {
    io::Json j;
    j["level"] = level;
    j["seed"] = c.seed;
    j["passed"] = all_passed(results);
    io::Json rows = io::Json::array();
    for (const auto& r : results) {
      io::Json row;
      row["suite"] = r.name;
      row["passed"] = r.passed;
      row["checks"] = r.checks;
      row["seconds"] = r.seconds;
      if (!r.passed) row["counterexample"] = r.counterexample;
      rows.push_back(std::move(row));
    }
    j["suites"] = std::move(rows);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    int failed = 0;
    for (const auto& r : results) {
      if (r.passed) {
        os << "PASS  " << r.name << "  (" << r.checks << " checks, "
           << io::format_double(r.seconds) << "s)\n";
      } else {
        ++failed;
        os << "FAIL  " << r.name << "  " << r.counterexample << "\n";
      }
    }
    if (failed == 0)
      os << "all " << results.size() << " suites passed\n";
    else
      os << failed << " of " << results.size() << " suites failed\n";
    emit(c, os.str());
  }
  return all_passed(results) ? kExitOk : kExitCheckFailed;
}

int cmd_bench(const Common& c, std::int64_t t_max) {
  const io::Json report = run_bench(t_max, c.budget, c.jobs);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "t,engine,seconds,sites,max_numerator_bits,max_log2_den\n";
    for (const auto& row : report["rows"])
      os << row["t"].get<std::int64_t>() << ','
         << row["engine"].get<std::string>() << ','
         << io::format_double(row["seconds"].get<double>()) << ','
         << row["sites"].get<std::size_t>() << ','
         << row["max_numerator_bits"].get<std::size_t>() << ','
         << row["max_log2_den"].get<long>() << '\n';
    emit(c, os.str());
  } else {
    emit(c, report.dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args) {
  CLI::App app{
      "Exact amplitude kit for the chiral discrete-time walk on the "
      "body-centered cubic lattice"};
  app.name("weylwalk");
  app.require_subcommand(1);

  Common pc;
  std::string p_from = "0,0,0", p_to;
  std::int64_t p_t = 0;
  bool p_strict = false;
  CLI::App* sp = app.add_subcommand(
      "propagate", "Exact t-step transition matrix between two sites");
  sp->add_option("--from", p_from, "Source site \"x1,x2,x3\"")
      ->capture_default_str();
  sp->add_option("--to", p_to, "Target site \"x1,x2,x3\"")->required();
  sp->add_option("--t", p_t, "Number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  sp->add_flag("--strict", p_strict,
               "Exit 2 when the target is outside the causal cone");
  add_common(sp, pc, {"json", "csv"});

  Common ec;
  std::string e_state, e_engine = "step";
  std::int64_t e_t = 0;
  CLI::App* se = app.add_subcommand(
      "evolve", "Apply t steps of the walk to a state file");
  se->add_option("--state", e_state, "JSON state file")->required();
  se->add_option("--t", e_t, "Number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  se->add_option("--engine", e_engine,
                 "step: repeated one-step updates; convolve: closed-form "
                 "propagators")
      ->check(CLI::IsMember({"step", "convolve"}))
      ->capture_default_str();
  add_common(se, ec, {"json", "csv"});

  Common cc;
  std::string c_from = "0,0,0";
  std::int64_t c_t = 0;
  CLI::App* sc = app.add_subcommand(
      "cone", "Propagators to every site of the t-step causal cone");
  sc->add_option("--from", c_from, "Source site \"x1,x2,x3\"")
      ->capture_default_str();
  sc->add_option("--t", c_t, "Number of steps")
      ->required()
      ->check(CLI::NonNegativeNumber);
  add_common(sc, cc, {"json", "csv"});

  Common vc;
  vc.format = "text";
  std::string v_suite, v_level = "standard";
  bool v_fault = false;
  CLI::App* sv =
      app.add_subcommand("verify", "Run the self-verification suites");
  sv->add_option("--suite", v_suite, "Run a single suite by name");
  sv->add_option("--level", v_level, "Coverage preset")
      ->check(CLI::IsMember({"quick", "standard", "full"}))
      ->capture_default_str();
  sv->add_flag("--inject-fault", v_fault,
               "Corrupt one hopping matrix to self-test the checker")
      ->group("");
  add_common(sv, vc, {"text", "json"});

  Common bc;
  std::int64_t b_t_max = 20;
  CLI::App* sb = app.add_subcommand(
      "bench", "Time the engines over a grid of step counts");
  sb->add_option("--t-max", b_t_max, "Largest step count")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(sb, bc, {"json", "csv"});

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sp->parsed()) return cmd_propagate(pc, p_from, p_to, p_t, p_strict);
    if (se->parsed()) return cmd_evolve(ec, e_state, e_t, e_engine);
    if (sc->parsed()) return cmd_cone(cc, c_from, c_t);
    if (sv->parsed()) return cmd_verify(vc, v_suite, v_level, v_fault);
    if (sb->parsed()) return cmd_bench(bc, b_t_max);
  } catch (const io::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace weylwalk
