#include "monodromy/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace monodromy::cli {

namespace {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& content) {
  if (cfg.out.empty()) {
    out << content;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw IoError("cannot open '" + cfg.out + "' for writing");
  file << content;
  if (!file) throw IoError("write to '" + cfg.out + "' failed");
}

bool json_mode(const RunConfig& cfg) { return cfg.format == "json"; }

std::string mark(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

Json RunConfig::to_json() const {
  Json fixes = Json::array();
  for (const auto& f : fix) fixes.push_back(f);
  return Json{{"command", command}, {"n", n},
              {"box", box},         {"format", format},
              {"out", out},         {"jobs", jobs},
              {"suite", suite},     {"case", case_name},
              {"fix", fixes},       {"range", range},
              {"log_discrepancies", log_discrepancies},
              {"what", what},       {"action", action},
              {"moves", moves},     {"input", input}};
}

std::string RunConfig::summary() const {
  std::ostringstream os;
  os << "# config: command=" << command << " n=" << n << " box=" << box << " format=" << format
     << " jobs=" << jobs;
  if (command == "verify") os << " suite=" << suite << " log-discrepancies=" << log_discrepancies;
  if (command == "export") {
    os << " what=" << what << " case=" << case_name << " range=" << range;
    for (const auto& f : fix) os << " fix=" << f;
  }
  if (command == "hurwitz") {
    os << " input=" << input;
    if (!action.empty()) os << " action=" << action;
    if (!moves.empty()) os << " moves=" << moves;
  }
  if (!out.empty()) os << " out=" << out;
  return os.str() + "\n";
}

// ---------------------------------------------------------------- classify

namespace {

std::string describe_class(const ClassReport& r) {
  std::ostringstream os;
  os << "period " << r.period << ", ";
  if (r.canonical == "standard") {
    os << "conjugate to the standard tuple";
  } else if (r.canonical == "period3") {
    os << "conjugate to the period-3 tuple";
  } else {
    os << "matches no canonical tuple";
  }
  os << "; C = " << r.conjugator.str() << " (" << order_of(r.conjugator).str() << "), seed "
     << r.seed.str() << ", witness D = " << r.witness.str();
  return os.str();
}

}  // namespace

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n <= 0) throw UsageError("--n must be positive");
  const auto structured = classify_rotation_invariant(cfg.n);
  const auto oracle = oracle_rotation_invariant(cfg.n, cfg.box, cfg.jobs);
  const std::size_t expected = cfg.n % 12 == 0 ? 2 : 0;
  const bool agree = same_classes(structured, oracle);
  const bool ok = agree && structured.size() == expected;

  std::ostringstream os;
  if (json_mode(cfg)) {
    Json s = Json::array(), o = Json::array();
    for (const auto& r : structured) s.push_back(to_json(r));
    for (const auto& r : oracle) o.push_back(to_json(r));
    Json report{{"config", cfg.to_json()}, {"structured", s}, {"oracle", o},
                {"agree", agree},          {"expected_classes", expected}, {"ok", ok}};
    os << report.dump(2) << "\n";
  } else {
    os << cfg.summary();
    os << "structured search: " << structured.size() << " class(es)\n";
    for (std::size_t i = 0; i < structured.size(); ++i) {
      os << "  class " << i + 1 << ": " << describe_class(structured[i]) << "\n";
    }
    os << "oracle (box " << cfg.box << "): " << oracle.size() << " class(es)\n";
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      os << "  class " << i + 1 << ": " << describe_class(oracle[i]) << "\n";
    }
    os << "agreement: " << (agree ? "yes" : "NO") << "\n";
    if (!agree) {
      os << "difference: structured periods [";
      for (const auto& r : structured) os << " " << r.period << ":" << r.canonical;
      os << " ] vs oracle periods [";
      for (const auto& r : oracle) os << " " << r.period << ":" << r.canonical;
      os << " ]\n";
    }
    os << "expected " << expected << " class(es): " << (ok ? "ok" : "MISMATCH") << "\n";
  }
  emit(cfg, out, os.str());
  return ok ? ExitCode::ok : ExitCode::verification_failed;
}

// ------------------------------------------------------------------ verify

namespace {

struct SuiteCheck {
  std::string suite;
  CheckResult result;
};

void add(std::vector<SuiteCheck>& out, const std::string& suite, std::string name, bool passed,
         std::string detail = "") {
  out.push_back({suite, CheckResult{std::move(name), passed, std::move(detail)}});
}

void suite_thm12(const RunConfig& cfg, std::vector<SuiteCheck>& out) {
  const std::string s = "thm12";
  const auto structured = classify_rotation_invariant(cfg.n);
  const auto oracle = oracle_rotation_invariant(cfg.n, cfg.box, cfg.jobs);
  const std::size_t expected = cfg.n % 12 == 0 ? 2 : 0;
  add(out, s, "structured search and oracle agree", same_classes(structured, oracle),
      std::to_string(structured.size()) + " vs " + std::to_string(oracle.size()) + " classes");
  add(out, s, "class count", structured.size() == expected,
      std::to_string(structured.size()) + " found, " + std::to_string(expected) + " expected");
  if (expected == 2 && structured.size() == 2) {
    add(out, s, "periods 2 and 3 matching the standard and period-3 tuples",
        structured[0].period == 2 && structured[0].canonical == "standard" &&
            structured[1].period == 3 && structured[1].canonical == "period3");
    add(out, s, "the two classes are not simultaneously conjugate",
        decide_sim_conjugacy(structured[0].representative, structured[1].representative)
                .status == ConjugacyWitness::Status::not_conjugate);
    for (const auto& r : structured) {
      const auto w = solve_shift_conjugator(r.representative, 1);
      const bool finite = w.found() && order_of(*w.conjugator).is_finite();
      add(out, s, "period-" + std::to_string(r.period) + " class is rotation invariant", finite,
          w.found() ? "C = " + w.conjugator->str() + " of order " + order_of(*w.conjugator).str()
                    : "no conjugator");
    }
  }
  const Mat2 y1 = transvection({1, 0}), y2 = transvection({0, 1}), z2 = transvection({1, 1});
  add(out, s, "order of Y1 Y2 is 6", order_of(y1 * y2) == MatOrder::finite(6));
  add(out, s, "order of Z1 Z2 Z3 is 4", order_of(y1 * z2 * y2) == MatOrder::finite(4));

  const Factorization std12 = standard_tuple(12);
  const auto rot = decide_sim_conjugacy(std12, rotate(std12));
  const Mat2 c4 = matrix_of(CanonicalC::c4);
  add(out, s, "rotate(standard) is conjugate to standard by +-C4",
      rot.found() && (*rot.conjugator == c4 || *rot.conjugator == -c4),
      rot.conjugator ? rot.conjugator->str() : "none");
  const auto gar = decide_sim_conjugacy(garside_act(std12), period3_tuple(12));
  add(out, s, "Garside image of the standard tuple is conjugate to the period-3 tuple",
      gar.found(), gar.conjugator ? gar.conjugator->str() : "none");
  const auto yz = decide_sim_conjugacy(std12, period3_tuple(12));
  add(out, s, "standard and period-3 tuples are not simultaneously conjugate",
      yz.status == ConjugacyWitness::Status::not_conjugate && yz.complete,
      "method " + to_string(yz.method));
}

void suite_thm51(const RunConfig& cfg, std::vector<SuiteCheck>& out) {
  const std::string s = "thm51";
  const auto found = search_tau_fixed(cfg.n, cfg.box, cfg.jobs);
  add(out, s, "no tau-fixed tuple", found.empty(),
      "n = " + std::to_string(cfg.n) + ", box = " + std::to_string(cfg.box) + ", " +
          std::to_string(found.size()) + " found");
  for (const auto& c :
       {check_transvection_powers(), check_pair_branch(), check_triple_branch(),
        check_fixed_line_trichotomy(std::max(1, cfg.n - 1)), check_tau_conjugation_chain()}) {
    out.push_back({s, c});
  }
}

void suite_prop52(const RunConfig& cfg, std::vector<SuiteCheck>& out) {
  const std::string s = "prop52";
  if (cfg.n >= 2) {
    const auto found = search_eta_fixed(cfg.n, cfg.box, cfg.jobs);
    add(out, s, "no eta-fixed tuple", found.empty(),
        "n = " + std::to_string(cfg.n) + ", box = " + std::to_string(cfg.box) + ", " +
            std::to_string(found.size()) + " found");
  }
  const auto d = derive_eta_contradiction();
  for (const auto& step : d.steps) add(out, s, step.statement, step.verified, step.detail);
  add(out, s, "derivation reaches its contradiction", d.reached(), d.contradiction);
}

void suite_invariants(const RunConfig&, std::vector<SuiteCheck>& out) {
  const std::string s = "invariants";
  for (GeneratorCase gc : {GeneratorCase::order4, GeneratorCase::order34_6}) {
    const auto r = verify_generators(gc);
    const std::string tag = to_string(gc) + ": ";
    add(out, s, tag + "generators invariant under <C, -Id, swap>", r.invariant,
        "group " + r.group.structure);
    add(out, s, tag + "Jacobian not identically zero", r.jacobian_nonzero, r.jacobian.str());
    add(out, s, tag + "degree product equals group order", r.degree_ok,
        std::to_string(r.deg1) + " * " + std::to_string(r.deg2) + " = " +
            std::to_string(r.deg1 * r.deg2) + ", |G| = " + std::to_string(r.group.order()));
    if (r.divisible) add(out, s, tag + "Jacobian divisible by 6(2x - y)(2y - x)", *r.divisible);
  }
  for (CanonicalC c : all_canonical()) {
    const auto groups = commutant(matrix_of(c));
    add(out, s, to_string(c) + ": trace polynomial invariant under the extended group",
        check_invariance(trace_polynomial(c), groups.extended),
        "strict commutant " + groups.strict.structure + ", extended " +
            groups.extended.structure);
    const auto head = norm_head_check(c);
    add(out, s, to_string(c) + ": top form is +-N^k and the rest is a polynomial in N",
        head.ok() && head.constant && abs(*head.constant) == 1,
        head.constant ? "constant " + to_string(*head.constant) : "no constant");
  }
}

void suite_examples(const RunConfig&, std::vector<SuiteCheck>& out) {
  const std::string s = "examples";
  const auto eta12 = build_eta12_example();
  add(out, s, "eta-12 tuple multiplies to Id", product(eta12.entries()).is_identity(),
      std::to_string(eta12.size()) + " letters");
  const auto a = analyze_eta_fixing(eta12, 12, 12);
  add(out, s, "eta-12 tuple is fixed by eta^12 up to conjugation", a.probe_fixed);
  add(out, s, "eta^12 induces an element of order 11 on Z/22Z", a.induced_order == 11,
      "order " + std::to_string(a.induced_order));

  for (int n : {12, 24}) {
    const auto h = explore_half_rotation(n);
    const std::string tag = "half rotation n = " + std::to_string(n) + ": ";
    add(out, s, tag + "finite-order block assignment found", h.assignment_found,
        "gamma " + h.gamma.str() + ", delta " + h.delta.str() + ", block " +
            h.block_order.str());
    if (h.assignment_found) {
      add(out, s, tag + "not conjugate to its shift by 1", !h.shift_found[0]);
      add(out, s, tag + "conjugate to its shift by 3", h.shift_found[2],
          "minimal shift " + std::to_string(h.minimal_shift.value_or(0)) + ", induced order " +
              std::to_string(h.induced_order));
    }
  }

  const auto f3 = express_in_norm(trace_polynomial(CanonicalC::c3), norm3());
  const auto f6 = express_in_norm(trace_polynomial(CanonicalC::c6), norm3());
  const std::string f3s = f3 ? split_integer_roots(*f3).str("N3") : "none";
  const std::string f6s = f6 ? split_integer_roots(*f6).str("N3") : "none";
  add(out, s, "f3 = -(N3 + 1)(N3^2 + 2 N3 - 2)", f3s == "-(N3 + 1)*(N3^2 + 2*N3 - 2)", f3s);
  add(out, s, "f6 = (N3 - 1)(N3^2 - 2 N3 - 2)", f6s == "(N3 - 1)*(N3^2 - 2*N3 - 2)", f6s);

  const auto t3 = enumerate_conic_points(CanonicalC::c3);
  const auto t6 = enumerate_conic_points(CanonicalC::c6);
  add(out, s, "C3 lattice points form one orbit", t3.orbits.size() == 1);
  bool has21 = false;
  for (const auto& o : t6.orbits) {
    for (const auto& v : o.members) has21 = has21 || v.same_line(PrimVec(2, 1));
  }
  add(out, s, "C6 lattice points form two orbits, one through (2,1)",
      t6.orbits.size() == 2 && has21);
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  static const std::vector<std::string> suites{"thm12", "thm51", "prop52", "invariants",
                                               "examples"};
  if (cfg.n <= 0) throw UsageError("--n must be positive");
  if (cfg.suite != "all" && std::find(suites.begin(), suites.end(), cfg.suite) == suites.end()) {
    throw UsageError("unknown suite '" + cfg.suite + "'");
  }
  std::vector<SuiteCheck> checks;
  for (const auto& name : suites) {
    if (cfg.suite != "all" && cfg.suite != name) continue;
    if (name == "thm12") suite_thm12(cfg, checks);
    if (name == "thm51") suite_thm51(cfg, checks);
    if (name == "prop52") suite_prop52(cfg, checks);
    if (name == "invariants") suite_invariants(cfg, checks);
    if (name == "examples") suite_examples(cfg, checks);
  }
  const auto discrepancies = collect_discrepancies();
  const auto failed = std::count_if(checks.begin(), checks.end(),
                                    [](const SuiteCheck& c) { return !c.result.passed; });

  std::ostringstream os;
  if (json_mode(cfg)) {
    Json list = Json::array();
    for (const auto& c : checks) {
      Json j = to_json(c.result);
      j["suite"] = c.suite;
      list.push_back(j);
    }
    Json d = Json::array();
    for (const auto& x : discrepancies) d.push_back(to_json(x));
    os << Json{{"config", cfg.to_json()},
               {"checks", list},
               {"failed", failed},
               {"discrepancies", d}}
              .dump(2)
       << "\n";
  } else {
    os << cfg.summary();
    for (const auto& c : checks) {
      os << mark(c.result.passed) << " [" << c.suite << "] " << c.result.name;
      if (!c.result.detail.empty()) os << " (" << c.result.detail << ")";
      os << "\n";
    }
    os << "summary: " << checks.size() - failed << " passed, " << failed << " failed; "
       << discrepancies.size() << " difference(s) from the reference display";
    os << (cfg.log_discrepancies ? ":\n" : " (see --log-discrepancies)\n");
    if (cfg.log_discrepancies) {
      for (const auto& d : discrepancies) {
        os << "  - " << d.item << "\n      reference: " << d.reference
           << "\n      computed:  " << d.computed << "\n";
      }
    }
  }
  emit(cfg, out, os.str());
  return failed == 0 ? ExitCode::ok : ExitCode::verification_failed;
}

// ------------------------------------------------------------------ export

std::string conics_svg() {
  const double scale = 60.0;
  const double cx = 240.0, cy = 240.0;
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" "
        "viewBox=\"0 0 480 480\">\n";
  os << "  <rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
  os << "  <line x1=\"0\" y1=\"" << cy << "\" x2=\"480\" y2=\"" << cy
     << "\" stroke=\"#bbb\"/>\n";
  os << "  <line x1=\"" << cx << "\" y1=\"0\" x2=\"" << cx << "\" y2=\"480\" stroke=\"#bbb\"/>\n";
  // x^2 - xy + y^2 = t has semi-axes sqrt(2t) along (1,1) and sqrt(2t/3)
  // along (1,-1); x^2 + y^2 = t is a circle of radius sqrt(t).
  struct Curve {
    const char* label;
    double rx, ry, angle;
    const char* colour;
  };
  const Curve curves[] = {
      {"N(p+qw) = 1", std::sqrt(2.0), std::sqrt(2.0 / 3.0), -45.0, "#1f77b4"},
      {"N(p+qi) = 2", std::sqrt(2.0), std::sqrt(2.0), 0.0, "#d62728"},
      {"N(p+qw) = 3", std::sqrt(6.0), std::sqrt(2.0), -45.0, "#2ca02c"},
  };
  int row = 0;
  for (const auto& c : curves) {
    os << "  <ellipse cx=\"" << cx << "\" cy=\"" << cy << "\" rx=\"" << c.rx * scale
       << "\" ry=\"" << c.ry * scale << "\" transform=\"rotate(" << c.angle << " " << cx << " "
       << cy << ")\" fill=\"none\" stroke=\"" << c.colour << "\" stroke-width=\"2\"/>\n";
    os << "  <text x=\"10\" y=\"" << 20 + 18 * row++ << "\" fill=\"" << c.colour
       << "\" font-family=\"sans-serif\" font-size=\"14\">" << c.label << "</text>\n";
  }
  const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c"};
  int idx = 0;
  for (CanonicalC c : all_canonical()) {
    const auto table = enumerate_conic_points(c);
    os << "  <g fill=\"" << colours[idx++] << "\" data-case=\"" << to_string(c) << "\">\n";
    for (const auto& orbit : table.orbits) {
      for (const auto& v : orbit.members) {
        for (int sign : {1, -1}) {
          const double px = cx + sign * v.p().convert_to<double>() * scale;
          const double py = cy - sign * v.q().convert_to<double>() * scale;
          os << "    <circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"5\" data-norm=\""
             << orbit.norm << "\" data-trace=\"" << orbit.trace << "\"/>\n";
        }
      }
    }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

namespace {

std::map<std::string, long long> parse_fixes(const std::vector<std::string>& fixes) {
  std::map<std::string, long long> out;
  for (const auto& f : fixes) {
    const auto eq = f.find('=');
    if (eq == std::string::npos) throw UsageError("--fix expects name=value, got '" + f + "'");
    auto value = parse_bigint(f.substr(eq + 1));
    auto small = value ? to_int64(*value) : std::nullopt;
    if (!small) throw UsageError("bad value in --fix '" + f + "'");
    out[f.substr(0, eq)] = *small;
  }
  return out;
}

}  // namespace

int cmd_export(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream os;
  if (cfg.what == "conics") {
    os << conics_svg();
  } else if (cfg.what == "slices") {
    if (cfg.range < 0) throw UsageError("--range must be non-negative");
    const auto rows = slice_grid(parse_canonical(cfg.case_name), parse_fixes(cfg.fix), cfg.range);
    os << "p1,q1,p2,q2,g\n";
    for (const auto& r : rows) {
      os << r.coords[0] << "," << r.coords[1] << "," << r.coords[2] << "," << r.coords[3] << ","
         << r.g << "\n";
    }
  } else if (cfg.what == "trace-polys") {
    Json list = Json::array();
    std::ostringstream text;
    text << cfg.summary();
    for (CanonicalC c : all_canonical()) {
      const BiPoly f = trace_polynomial(c);
      const std::string nname = c == CanonicalC::c4 ? "N4" : "N3";
      const auto g = express_in_norm(f, norm_of(c));
      const std::string factored = g ? split_integer_roots(*g).str(nname) : "not expressible";
      list.push_back(Json{{"case", to_string(c)},
                          {"polynomial", f.str("p", "q")},
                          {"coefficients", to_json(f)},
                          {"norm", nname},
                          {"in_norm", g ? to_json(*g) : Json()},
                          {"factored", factored}});
      text << "f" << to_string(c).substr(1) << "(p,q) = " << f.str("p", "q") << "\n"
           << "      = " << factored << "\n";
    }
    if (json_mode(cfg)) {
      os << Json{{"config", cfg.to_json()}, {"trace_polynomials", list}}.dump(2) << "\n";
    } else {
      os << text.str();
    }
  } else {
    throw UsageError("export needs one of: conics, slices, trace-polys");
  }
  emit(cfg, out, os.str());
  return ExitCode::ok;
}

// ----------------------------------------------------------------- hurwitz

Factorization load_tuple(const std::string& source) {
  auto builtin_n = [&](const std::string& prefix) -> std::optional<int> {
    if (source.rfind(prefix, 0) != 0) return std::nullopt;
    try {
      return std::stoi(source.substr(prefix.size()));
    } catch (const std::logic_error&) {
      throw UsageError("bad length in '" + source + "'");
    }
  };
  if (auto n = builtin_n("standard:")) return standard_tuple(*n);
  if (auto n = builtin_n("period3:")) return period3_tuple(*n);
  if (source == "eta12") return build_eta12_example();

  std::ifstream in(source);
  if (!in) throw IoError("cannot open '" + source + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + source + "' is not valid JSON: " + e.what());
  }
  return factorization_from_json(j);
}

int cmd_hurwitz(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw UsageError("hurwitz needs --input");
  if (cfg.moves.empty() == cfg.action.empty()) {
    throw UsageError("hurwitz needs exactly one of --moves and --action");
  }
  const Factorization input = load_tuple(cfg.input);
  std::optional<Factorization> result;
  if (!cfg.moves.empty()) {
    result = apply_moves(input, parse_moves(cfg.moves));
  } else if (cfg.action == "garside") {
    result = garside_act(input);
  } else if (cfg.action == "rotate") {
    result = rotate(input);
  } else if (cfg.action == "tau") {
    result = tau_act(input);
  } else if (cfg.action == "eta") {
    result = eta_act(input);
  } else {
    throw UsageError("unknown action '" + cfg.action + "'");
  }

  const auto vs_input = decide_sim_conjugacy(input, *result);
  std::vector<std::pair<std::string, ConjugacyWitness>> vs_canonical;
  const int n = static_cast<int>(result->size());
  if (result->decoration() == Decoration::none && n > 0 && n % 12 == 0) {
    vs_canonical.emplace_back("standard", decide_sim_conjugacy(*result, standard_tuple(n)));
    vs_canonical.emplace_back("period3", decide_sim_conjugacy(*result, period3_tuple(n)));
  }

  std::ostringstream os;
  if (json_mode(cfg)) {
    Json cmp{{"input", to_json(vs_input)}};
    for (const auto& [name, w] : vs_canonical) cmp[name] = to_json(w);
    os << Json{{"config", cfg.to_json()}, {"output", to_json(*result)}, {"comparison", cmp}}.dump(2)
       << "\n";
  } else {
    os << cfg.summary();
    os << "output (" << to_string(result->decoration()) << ", " << result->size()
       << " entries):\n";
    for (std::size_t i = 0; i < result->size(); ++i) {
      os << "  " << i + 1 << ": " << (*result)[i].str() << "\n";
    }
    auto line = [&](const std::string& name, const ConjugacyWitness& w) {
      os << "conjugate to " << name << ": " << to_string(w.status);
      if (w.conjugator) {
        os << " via " << w.conjugator->str() << " (" << order_of(*w.conjugator).str() << ")";
      }
      os << "\n";
    };
    line("input", vs_input);
    for (const auto& [name, w] : vs_canonical) line(name + " tuple", w);
  }
  emit(cfg, out, os.str());
  return ExitCode::ok;
}

// -------------------------------------------------------------------- main

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact SL2(Z) monodromy factorization toolkit", "monodromy"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--n", cfg.n, "number of factors")->capture_default_str();
  app.add_option("--box", cfg.box, "entry bound for searches")
      ->capture_default_str()
      ->check(CLI::Range(1, 1000));
  app.add_option("--format", cfg.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "write the report to this file");
  app.add_option("--jobs", cfg.jobs, "worker threads for searches")
      ->capture_default_str()
      ->check(CLI::Range(1, 256));

  auto* classify = app.add_subcommand("classify", "classify rotation-invariant factorizations");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "all, thm12, thm51, prop52, invariants, examples")
      ->capture_default_str();
  verify->add_flag("--log-discrepancies", cfg.log_discrepancies,
                   "list every difference from the reference display");
  auto* exp = app.add_subcommand("export", "export figure data");
  exp->add_option("what", cfg.what, "conics, slices or trace-polys")->required();
  exp->add_option("--case", cfg.case_name, "3, 4 or 6")->capture_default_str();
  exp->add_option("--fix", cfg.fix, "fix coordinates, e.g. w2=0 or p2=1,q2=0 (repeatable)")
      ->delimiter(',');
  exp->add_option("--range", cfg.range, "grid half-width")->capture_default_str();
  auto* hur = app.add_subcommand("hurwitz", "apply Hurwitz moves or named actions");
  hur->add_option("--input", cfg.input, "JSON file, standard:N, period3:N or eta12");
  hur->add_option("--moves", cfg.moves, "word such as \"s1,s2',s3\"");
  hur->add_option("--action", cfg.action, "garside, rotate, tau or eta")
      ->check(CLI::IsMember({"garside", "rotate", "tau", "eta"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    if (classify->parsed()) {
      cfg.command = "classify";
      return cmd_classify(cfg, out);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out);
    }
    if (exp->parsed()) {
      cfg.command = "export";
      return cmd_export(cfg, out);
    }
    cfg.command = "hurwitz";
    return cmd_hurwitz(cfg, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::io_error;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return ExitCode::usage;
  }
}

}  // namespace monodromy::cli
