#include "superleib/cli.hpp"

#include "superleib/checks.hpp"
#include "superleib/constructions.hpp"
#include "superleib/io.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace superleib::cli {

namespace {

using io::Json;

struct Flags {
  std::string out;
  std::string format = "text";
  std::size_t max_violations = 100;
  unsigned parallel = 0;
  bool canonical = false;

  CheckOptions options() const { return {max_violations, parallel}; }
};

// What a subcommand hands back before formatting.
struct Outcome {
  bool passed = true;
  std::string command;
  Json report;
  std::string text;
  // Build commands emit an algebra file instead of a report envelope.
  bool raw = false;
};

std::string format_vector(const SparseVector& v, const SuperSpace* space) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : v) {
    std::string label = space && v.dim() == space->dim() ? space->labels[k] : "e" + std::to_string(k);
    Scalar mag = abs(c);
    s += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    if (mag != 1) s += to_string(mag) + "*";
    s += label;
    first = false;
  }
  return s;
}

std::string tuple_text(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

void report_text(std::ostream& os, const ViolationReport& r, const SuperSpace* space, const std::string& indent = "") {
  os << indent << r.identity_name << ": " << (r.passed ? "PASS" : "FAIL") << " (" << r.checked_count << " checked, "
     << r.violation_count << " violations)\n";
  for (const auto& v : r.violations)
    os << indent << "  " << tuple_text(v.indices) << "  lhs = " << format_vector(v.lhs, space)
       << "  rhs = " << format_vector(v.rhs, space) << "\n";
  if (r.violations.size() < r.violation_count)
    os << indent << "  ... " << r.violation_count - r.violations.size() << " more\n";
}

Outcome from_report(std::string command, const ViolationReport& r, const SuperSpace& space) {
  Outcome o{r.passed, std::move(command), io::to_json(r, &space), {}};
  std::ostringstream os;
  report_text(os, r, &space);
  o.text = os.str();
  return o;
}

Outcome from_conditions(std::string command, const ConditionReport& r) {
  Outcome o{r.passed, std::move(command), io::to_json(r), {}};
  std::ostringstream os;
  os << (r.passed ? "all conditions hold" : "conditions violated") << "\n";
  for (const auto& [name, rep] : r.conditions) {
    os << "[" << name << "] ";
    report_text(os, rep, nullptr);
  }
  o.text = os.str();
  return o;
}

void decomposition_text(std::ostream& os, const WeightDecomposition& d, const SuperSpace& space) {
  os << "decomposition " << (d.complete ? "complete" : "incomplete") << ": " << d.nonzero_count()
     << " nonzero weights, zero space dim " << d.zero_space().dim() << "\n";
  if (!d.complete) os << "  " << d.diagnostic << "\n";
  for (const auto& [w, s] : d.weights) {
    os << "  " << format_weight(w) << "  dim " << s.dim() << ":";
    for (const auto& v : s.basis()) os << "  [" << format_vector(v, &space) << "]";
    os << "\n";
  }
}

std::vector<std::string> split_labels(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

SparseVector resolve_cartan(const std::string& name, const SuperSpace& space, const io::NamedVectors* named) {
  if (named) {
    auto it = named->named.find(name);
    if (it != named->named.end()) return it->second;
  }
  auto k = space.index_of(name);
  if (!k) throw Error("unknown_label", "Cartan element \"" + name + "\" is neither a basis label nor a named vector");
  return SparseVector::unit(space.dim(), *k);
}

std::size_t to_size(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    throw Error("usage", std::string(what) + " must be a natural number, got \"" + s + "\"");
  }
}

Outcome built(std::string command, Json algebra) {
  Outcome o{true, std::move(command), std::move(algebra), {}, true};
  return o;
}

Outcome run_check(const std::string& what, const std::string& file, const Flags& f) {
  io::Algebra a = io::load_algebra(file);
  const std::string cmd = "check " + what;
  if (auto* d = std::get_if<SuperDialgebra>(&a)) {
    if (what == "ass") return from_report(cmd, check_ass(*d, f.options()), d->space);
    if (what == "barunit") return from_report(cmd, check_bar_unit(*d, f.options()), d->space);
    if (what == "graded") return from_report(cmd, check_graded(*d, f.options()), d->space);
    // Leibniz-side checks run on the dialgebra's bracket (x⊢y - (-1)^{|x||y|} y⊣x).
    LeibnizSuperalgebra l = to_leibniz(*d);
    if (what == "leibniz") return from_report(cmd, check_leibniz(l, f.options()), l.space);
    if (what == "lie") return from_report(cmd, is_lie(l, f.options()), l.space);
    if (what == "right-leibniz") return from_report(cmd, check_right_leibniz(to_right_leibniz(*d), f.options()), l.space);
  } else {
    const auto& l = std::get<LeibnizSuperalgebra>(a);
    if (what == "leibniz") return from_report(cmd, check_leibniz(l, f.options()), l.space);
    if (what == "lie") return from_report(cmd, is_lie(l, f.options()), l.space);
    if (what == "graded") return from_report(cmd, check_graded(l, f.options()), l.space);
    if (what == "right-leibniz") return from_report(cmd, check_right_leibniz(l, f.options()), l.space);
    if (what == "ass" || what == "barunit") throw Error("wrong_kind", "check " + what + " needs a dialgebra file");
  }
  throw Error("usage", "unknown check \"" + what + "\"");
}

Outcome run_build(const std::string& what, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n, const char* usage) {
    if (args.size() != n) throw Error("usage", std::string("usage: build ") + usage);
  };
  const std::string cmd = "build " + what;
  if (what == "gl" || what == "sl") {
    need(3, "gl|sl m n <dialgebra-file>");
    MatrixAlgebra gl = build_gl(to_size(args[0], "m"), to_size(args[1], "n"), io::load_dialgebra(args[2]));
    return built(cmd, what == "gl" ? io::to_json(gl.algebra) : io::to_json(build_sl(gl).algebra));
  }
  if (what == "diff") {
    need(2, "diff <superalgebra-file> <linear-map-file>");
    SuperDialgebra a = io::load_dialgebra(args[0]);
    return built(cmd, io::to_json(differential_dialgebra(a, io::load_linear_map(args[1], a.space))));
  }
  if (what == "tensor") {
    need(2, "tensor <dialgebra-file> <dialgebra-file>");
    return built(cmd, io::to_json(tensor_dialgebras(io::load_dialgebra(args[0]), io::load_dialgebra(args[1]))));
  }
  if (what == "leibniz" || what == "right-leibniz") {
    need(1, "leibniz|right-leibniz <dialgebra-file>");
    SuperDialgebra d = io::load_dialgebra(args[0]);
    return built(cmd, io::to_json(what == "leibniz" ? to_leibniz(d) : to_right_leibniz(d)));
  }
  if (what == "lie-quotient") {
    need(1, "lie-quotient <leibniz-file>");
    return built(cmd, io::to_json(lie_quotient(io::load_leibniz(args[0]))));
  }
  if (what == "assoc-quotient") {
    need(1, "assoc-quotient <dialgebra-file>");
    return built(cmd, io::to_json(associative_quotient(io::load_dialgebra(args[0]))));
  }
  if (what == "canonical") {
    need(3, "canonical p q <dialgebra-file>");
    CanonicalModel cm = build_canonical_LA(io::load_dialgebra(args[2]), to_size(args[0], "p"), to_size(args[1], "q"));
    return built(cmd, io::to_json(cm.model));
  }
  if (what == "model-a") {
    need(1, "model-a <bundle>");
    return built(cmd, io::to_json(build_A_graded_model(io::load_model_a(args[0]))));
  }
  if (what == "model-kappa") {
    need(1, "model-kappa <bundle>");
    return built(cmd, io::to_json(build_kappa_model(io::load_model_kappa(args[0]))));
  }
  throw Error("usage", "unknown build target \"" + what + "\"");
}

Outcome run_decompose(const std::string& file, const std::string& cartan) {
  LeibnizSuperalgebra l = io::load_leibniz(file);
  std::vector<SparseVector> h;
  for (const auto& name : split_labels(cartan)) h.push_back(resolve_cartan(name, l.space, nullptr));
  WeightDecomposition d = weight_decomposition(l, h);
  Outcome o{d.complete, "decompose", io::to_json(d, l.space), {}};
  std::ostringstream os;
  decomposition_text(os, d, l.space);
  o.text = os.str();
  return o;
}

Outcome run_grade_check(const std::string& file, const std::string& subalg, const std::string& cartan,
                        const Flags& f) {
  LeibnizSuperalgebra l = io::load_leibniz(file);
  io::NamedVectors g = io::load_subspace(subalg, l.space);
  std::vector<SparseVector> h;
  for (const auto& name : split_labels(cartan)) h.push_back(resolve_cartan(name, l.space, &g));
  GradingCertificate c = check_delta_graded(l, g.span, h, f.options());
  Outcome o{c.is_graded, "grade-check", io::to_json(c, l.space), {}};
  std::ostringstream os;
  os << (c.is_graded ? "graded" : "not graded") << ": " << c.root_count << " roots, zero space dim "
     << c.zero_space_dim << "\n";
  for (const auto& fl : c.failures) {
    os << "  condition " << fl.condition << ": " << fl.message << "\n";
    for (const auto& w : fl.witnesses) os << "    " << w << "\n";
  }
  decomposition_text(os, c.decomposition, l.space);
  o.text = os.str();
  return o;
}

Outcome run_conditions(const std::string& which, const std::string& bundle, const Flags& f) {
  if (which == "thm41") return from_conditions("conditions thm41", check_thm41_conditions(io::load_model_a(bundle), f.options()));
  if (which == "lemma51")
    return from_conditions("conditions lemma51", check_lemma51_conditions(io::load_model_kappa(bundle), f.options()));
  throw Error("usage", "unknown condition set \"" + which + "\" (thm41 | lemma51)");
}

Outcome run_steinberg(const std::string& m, const std::string& n, const std::string& file, const std::string& map,
                      const Flags& f) {
  LeibnizSuperalgebra l = io::load_leibniz(file);
  io::SteinbergInput in = io::load_steinberg_map(map, l);
  return from_report("steinberg-check",
                     check_steinberg_relations(l, in.map, to_size(m, "m"), to_size(n, "n"), in.coefficients, f.options()),
                     l.space);
}

std::string render(const Outcome& o, const Flags& f, long long ms) {
  if (o.raw) return o.report.dump(2) + "\n";
  if (f.format == "structured") {
    Json env{{"command", o.command}, {"status", o.passed ? "pass" : "fail"}, {"report", o.report}};
    if (!f.canonical) env["timing_ms"] = ms;
    return env.dump(2) + "\n";
  }
  std::string s = o.command + ": " + (o.passed ? "pass" : "fail") + "\n" + o.text;
  if (!f.canonical) s += "time: " + std::to_string(ms) + " ms\n";
  return s;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Exact checks and constructions for super dialgebras and Leibniz superalgebras", "superleib"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--out", f.out, "Also write the output to this file");
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--max-violations", f.max_violations, "Violations kept per report")->capture_default_str();
  app.add_option("--parallel", f.parallel, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_flag("--canonical", f.canonical, "Omit timing for byte comparison");

  std::string what, file, file2, cartan, subalg, map, m, n;
  std::vector<std::string> rest;

  auto* check = app.add_subcommand("check", "Check an identity on every basis tuple");
  check->add_option("identity", what, "ass | leibniz | lie | graded | barunit | right-leibniz")->required();
  check->add_option("file", file, "Algebra file")->required();

  auto* build = app.add_subcommand("build", "Build an algebra; prints an algebra file");
  build->add_option("target", what,
                    "gl | sl | diff | tensor | canonical | model-a | model-kappa | leibniz | right-leibniz | "
                    "lie-quotient | assoc-quotient")
      ->required();
  build->add_option("args", rest, "Target arguments");

  auto* decompose = app.add_subcommand("decompose", "Weight decomposition under a commuting family");
  decompose->add_option("file", file, "Leibniz algebra file")->required();
  decompose->add_option("--cartan", cartan, "Comma-separated basis labels")->required();

  auto* grade = app.add_subcommand("grade-check", "Root-graded certificate");
  grade->add_option("file", file, "Leibniz algebra file")->required();
  grade->add_option("--subalg", subalg, "Subspace file for the grading subalgebra")->required();
  grade->add_option("--cartan", cartan, "Comma-separated names (subspace vectors or basis labels)")->required();

  auto* cond = app.add_subcommand("conditions", "Coordinatization conditions of a model bundle");
  cond->add_option("set", what, "thm41 | lemma51")->required();
  cond->add_option("bundle", file, "Model bundle")->required();

  auto* stein = app.add_subcommand("steinberg-check", "Steinberg relations for a generator map");
  stein->add_option("m", m)->required();
  stein->add_option("n", n)->required();
  stein->add_option("file", file, "Leibniz algebra file")->required();
  stein->add_option("--map", map, "Steinberg map file")->required();

  for (auto* sub : {check, build, decompose, grade, cond, stein}) sub->fallthrough();

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    result.output = out.str();
    result.errors = err.str();
    if (code == 0) {
      result.status = "pass";
      return result;
    }
    if (result.errors.empty() || e.get_exit_code() == static_cast<int>(CLI::ExitCodes::RequiredError))
      result.errors += app.help();
    result.exit_code = 2;
    result.status = "error";
    return result;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    if (check->parsed())
      o = run_check(what, file, f);
    else if (build->parsed())
      o = run_build(what, rest);
    else if (decompose->parsed())
      o = run_decompose(file, cartan);
    else if (grade->parsed())
      o = run_grade_check(file, subalg, cartan, f);
    else if (cond->parsed())
      o = run_conditions(what, file, f);
    else
      o = run_steinberg(m, n, file, map, f);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    result.output = render(o, f, ms);
    result.status = o.passed ? "pass" : "fail";
    result.exit_code = o.passed ? 0 : 1;
  } catch (const Error& e) {
    result.status = "error";
    result.exit_code = 2;
    result.errors = "error [" + e.kind() + "]: " + e.what() + "\n";
    if (e.kind() == "usage") result.errors += app.help();
    return result;
  } catch (const std::exception& e) {
    result.status = "error";
    result.exit_code = 2;
    result.errors = std::string("error: ") + e.what() + "\n";
    return result;
  }

  if (!f.out.empty()) {
    std::ofstream os(f.out, std::ios::binary);
    if (!os) {
      result.errors = "error [io_error]: cannot write " + f.out + "\n";
      result.exit_code = 2;
      result.status = "error";
      return result;
    }
    os << result.output;
  }
  return result;
}

}  // namespace superleib::cli
