#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "shiftfact/apsum.hpp"
#include "shiftfact/det_json.hpp"
#include "shiftfact/errors.hpp"
#include "shiftfact/format.hpp"
#include "shiftfact/rmtpdd.hpp"
#include "shiftfact/sfact.hpp"
#include "shiftfact/verify.hpp"

namespace shiftfact::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Flag values that do not parse as literals, and --out failures.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputFlags {
  std::string format = "text";
  std::string path;
};

void add_output_flags(CLI::App& cmd, OutputFlags& o) {
  cmd.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd.add_option("--out", o.path, "Write the result to FILE instead of stdout");
}

void emit(const OutputFlags& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + o.path + "' for writing");
  file << text;
  if (!file) throw UsageError("write to '" + o.path + "' failed");
}

Complex complex_flag(const std::string& name, const std::string& text) {
  try {
    return parse_complex(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": cannot parse '" + text + "' as a complex literal (" + e.what() + ")");
  }
}

Rational rational_flag(const std::string& name, const std::string& text) {
  if (!looks_rational(text)) throw UsageError("--" + name + ": '" + text + "' is not an exact rational");
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

template <Field T>
T scalar_flag(const std::string& name, const std::string& text) {
  if constexpr (is_exact_v<T>) {
    return rational_flag(name, text);
  } else {
    return complex_flag(name, text);
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) items.push_back(item);
  return items;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"") == std::string::npos) return v;
  std::string quoted = "\"";
  for (char c : v) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

Json complex_pair(Complex v) { return Json::array({v.real(), v.imag()}); }

std::string scientific(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

/// |a - b| / max(|a|, |b|), zero when both vanish.
double residual(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// ---- eval ---------------------------------------------------------------

struct EvalFlags {
  std::string z, s;
  std::optional<int> n, q;
  std::optional<std::string> t;
  bool exact = false;
  OutputFlags output;
};

int cmd_eval(const EvalFlags& f, std::ostream& out) {
  if (!f.n && !f.q && !f.t) throw CLI::ValidationError("eval: one of --n, --q or --t is required");
  std::string index;
  std::string value;
  if (f.exact) {
    if (f.t) throw CLI::ValidationError("eval: --exact takes an integer index (--n or --q), not --t");
    const int k = f.n ? *f.n : *f.q;
    index = std::to_string(k);
    value = sf_integer(rational_flag("z", f.z), rational_flag("s", f.s), k).str();
  } else {
    const Complex z = complex_flag("z", f.z);
    const Complex s = complex_flag("s", f.s);
    Complex v;
    if (f.t) {
      const Complex t = complex_flag("t", *f.t);
      index = format_complex(t);
      v = sf_general(z, s, t);
    } else {
      const int k = f.n ? *f.n : *f.q;
      index = std::to_string(k);
      v = sf_integer(z, s, k);
    }
    value = format_complex(v);
  }

  std::string text;
  if (f.output.format == "json") {
    Json doc;
    doc["z"] = f.z;
    doc["s"] = f.s;
    doc["index"] = index;
    doc["exact"] = f.exact;
    doc["value"] = value;
    text = doc.dump() + "\n";
  } else if (f.output.format == "csv") {
    text = "z,s,index,exact,value\n" + csv_field(f.z) + "," + csv_field(f.s) + "," + csv_field(index) + "," +
           (f.exact ? "true" : "false") + "," + csv_field(value) + "\n";
  } else {
    text = value + "\n";
  }
  emit(f.output, text, out);
  return kExitOk;
}

// ---- det ----------------------------------------------------------------

struct DetFlags {
  std::string spec_path;
  std::string kind, s, a, b, t;
  std::string nodes, w, offsets;
  bool exact = false;
  bool oracle_only = false;
  bool closed_only = false;
  double threshold = 1e-8;
  OutputFlags output;
};

std::string read_document(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

/// Builds the JSON document from the inline flags, so both input routes
/// share one parser.
std::string inline_document(const DetFlags& f) {
  if (f.kind.empty() || f.nodes.empty()) {
    throw CLI::ValidationError("det: give --spec FILE, or at least --kind and --nodes");
  }
  Json doc;
  doc["schema"] = det::kDocumentSchema;
  doc["kind"] = f.kind;
  if (!f.s.empty()) doc["s"] = f.s;
  Json params = Json::object();
  if (!f.a.empty()) params["a"] = f.a;
  if (!f.b.empty()) params["b"] = f.b;
  if (!f.t.empty()) params["t"] = f.t;
  if (!f.offsets.empty()) params["offsets"] = split_list(f.offsets);
  if (!f.w.empty()) params["w"] = split_list(f.w);
  doc["params"] = params;
  doc["nodes"] = split_list(f.nodes);
  return doc.dump();
}

std::string optional_text(const std::optional<Complex>& v) { return v ? format_complex(*v) : std::string("-"); }
std::string optional_text(const std::optional<Rational>& v) { return v ? v->str() : std::string("-"); }

int cmd_det(const DetFlags& f, std::ostream& out) {
  const std::string text = f.spec_path.empty() ? inline_document(f) : read_document(f.spec_path);
  const det::EvalMode mode = f.oracle_only   ? det::EvalMode::OracleOnly
                             : f.closed_only ? det::EvalMode::ClosedOnly
                                             : det::EvalMode::Both;

  std::string kind, closed, oracle, res;
  std::size_t n = 0;
  bool violation = false;
  Json json_result;
  if (f.exact) {
    const auto doc = det::parse_det_document_exact(text);
    const auto r = det::evaluate_exact(doc.spec, doc.nodes, mode);
    kind = det::kind_info(doc.spec.kind).name;
    n = doc.nodes.size();
    closed = optional_text(r.closed_form);
    oracle = optional_text(r.oracle);
    if (r.closed_form && r.oracle) {
      violation = *r.closed_form != *r.oracle;
      res = violation ? "nonzero" : "0";
    } else {
      res = "-";
    }
    json_result["kind"] = kind;
    json_result["n"] = n;
    json_result["exact"] = true;
    json_result["closed_form"] = r.closed_form ? Json(closed) : Json(nullptr);
    json_result["oracle"] = r.oracle ? Json(oracle) : Json(nullptr);
    json_result["equal"] = r.closed_form && r.oracle ? Json(!violation) : Json(nullptr);
  } else {
    const auto doc = det::parse_det_document(text);
    const auto r = det::evaluate(doc.spec, doc.nodes, mode);
    kind = det::kind_info(doc.spec.kind).name;
    n = doc.nodes.size();
    closed = optional_text(r.closed_form);
    oracle = optional_text(r.oracle);
    res = r.residual ? scientific(*r.residual) : "-";
    violation = r.residual && !(*r.residual <= f.threshold);
    json_result = Json::parse(det::det_result_to_json(doc, r));
  }

  std::string body;
  if (f.output.format == "json") {
    body = json_result.dump() + "\n";
  } else if (f.output.format == "csv") {
    body = "kind,n,closed_form,oracle,residual\n" + kind + "," + std::to_string(n) + "," + csv_field(closed) + "," +
           csv_field(oracle) + "," + res + "\n";
  } else {
    body = "kind:        " + kind + "\nn:           " + std::to_string(n) + "\nclosed_form: " + closed +
           "\noracle:      " + oracle + "\nresidual:    " + res + "\n";
  }
  emit(f.output, body, out);
  return violation ? kExitViolation : kExitOk;
}

// ---- sum ----------------------------------------------------------------

struct SumFlags {
  std::string a, r, s;
  int p = 0;
  int n = 1;
  std::string method = "all";
  bool exact = false;
  double threshold = 1e-8;
  OutputFlags output;
};

template <Field T>
int run_sum(const SumFlags& f, std::ostream& out) {
  const apsum::Args<T> args{scalar_flag<T>("a", f.a), scalar_flag<T>("r", f.r), scalar_flag<T>("s", f.s), f.p, f.n};
  std::vector<std::pair<std::string, T>> rows;
  const bool all = f.method == "all";
  if (all || f.method == "direct") rows.emplace_back("direct", apsum::ap_sum_direct(args));
  // With method=all, routes whose preconditions fail are skipped.
  if (f.method == "recurrence" || (all && !vanishes(args.r))) {
    rows.emplace_back("recurrence", apsum::ap_sum_recurrence(args));
  }
  if (f.method == "closed" || (all && (args.r == args.s || args.r == -args.s))) {
    rows.emplace_back("closed", apsum::ap_sum_closed(args));
  }

  bool violation = false;
  for (const auto& [name, v] : rows) {
    if constexpr (is_exact_v<T>) {
      violation = violation || v != rows.front().second;
    } else {
      violation = violation || !(residual(v, rows.front().second) <= f.threshold);
    }
  }

  std::string body;
  if (f.output.format == "json") {
    Json doc;
    doc["a"] = f.a;
    doc["r"] = f.r;
    doc["s"] = f.s;
    doc["p"] = f.p;
    doc["n"] = f.n;
    doc["exact"] = f.exact;
    Json values = Json::object();
    for (const auto& [name, v] : rows) values[name] = to_string(v);
    doc["values"] = values;
    doc["agree"] = !violation;
    body = doc.dump() + "\n";
  } else if (f.output.format == "csv") {
    body = "method,value\n";
    for (const auto& [name, v] : rows) body += name + "," + csv_field(to_string(v)) + "\n";
  } else {
    for (const auto& [name, v] : rows) body += name + ": " + to_string(v) + "\n";
  }
  emit(f.output, body, out);
  return violation ? kExitViolation : kExitOk;
}

// ---- rmt ----------------------------------------------------------------

struct RmtFlags {
  std::string ensemble;
  std::vector<double> params;
  int n = 1;
  std::vector<std::string> s;
  std::vector<int> q;
  std::string parity = "plus";
  bool closed_only = false;
  double threshold = 1e-8;
  OutputFlags output;
};

rmt::EnsembleSpec ensemble_from_flags(const RmtFlags& f) {
  const auto kind = rmt::parse_ensemble(f.ensemble);
  if (!kind) throw CLI::ValidationError("rmt: unknown ensemble '" + f.ensemble + "'");
  const std::size_t want = *kind == rmt::Ensemble::Hermite ? 0 : *kind == rmt::Ensemble::Jacobi ? 2 : 1;
  if (f.params.size() != want) {
    throw CLI::ValidationError("rmt: " + f.ensemble + " takes " + std::to_string(want) + " --param value(s)");
  }
  switch (*kind) {
    case rmt::Ensemble::Hermite:
      return rmt::hermite(f.n);
    case rmt::Ensemble::Laguerre:
      return rmt::laguerre(f.params[0], f.n);
    case rmt::Ensemble::Gegenbauer:
      return rmt::gegenbauer(f.params[0], f.n);
    case rmt::Ensemble::Jacobi:
      return rmt::jacobi(f.params[0], f.params[1], f.n);
  }
  return rmt::hermite(f.n);
}

struct MomentRow {
  std::string point;  // "s=..." or "q=..."
  rmt::Parity parity;
  Complex value;
  std::optional<double> oracle;
  std::optional<double> residual;
};

/// Residual of a closed value against its quadrature oracle. A closed value
/// that vanishes structurally is measured against the even-part moment at
/// the same point.
std::optional<double> moment_residual(Complex closed, std::optional<double> oracle, Complex companion) {
  if (!oracle) return std::nullopt;
  if (closed == Complex(0.0, 0.0)) {
    const double scale = std::abs(companion);
    return scale == 0.0 ? std::abs(*oracle) : std::abs(*oracle) / scale;
  }
  return residual(closed, Complex(*oracle, 0.0));
}

int cmd_rmt(const RmtFlags& f, std::ostream& out) {
  if (f.s.empty() == f.q.empty()) throw CLI::ValidationError("rmt: give exactly one of --s or --q");
  const rmt::EnsembleSpec ens = ensemble_from_flags(f);
  ens.validate();
  const rmt::Parity parity = f.parity == "minus" ? rmt::Parity::Minus : rmt::Parity::Plus;

  std::vector<MomentRow> rows;
  for (const std::string& literal : f.s) {
    const Complex s = complex_flag("s", literal);
    MomentRow row{"s=" + format_complex(s), parity, rmt::mellin_closed(ens, s, parity).value, {}, {}};
    if (!f.closed_only && s.imag() == 0.0) {
      row.oracle = rmt::mellin_quadrature(ens, s.real(), parity);
      const Complex companion =
          parity == rmt::Parity::Minus ? rmt::mellin_closed(ens, s, rmt::Parity::Plus).value : row.value;
      row.residual = moment_residual(row.value, row.oracle, companion);
    }
    rows.push_back(row);
  }
  for (int q : f.q) {
    const rmt::Parity qp = q % 2 == 0 ? rmt::Parity::Plus : rmt::Parity::Minus;
    MomentRow row{"q=" + std::to_string(q), qp, Complex(rmt::integer_moment(ens, q), 0.0), {}, {}};
    if (!f.closed_only) {
      const Complex s(q + 1.0, 0.0);
      row.oracle = 2.0 * rmt::mellin_quadrature(ens, s.real(), qp);
      row.residual =
          moment_residual(row.value, row.oracle, 2.0 * rmt::mellin_closed(ens, s, rmt::Parity::Plus).value);
    }
    rows.push_back(row);
  }

  bool violation = false;
  for (const auto& row : rows) violation = violation || (row.residual && !(*row.residual <= f.threshold));

  std::string params;
  for (std::size_t k = 0; k < f.params.size(); ++k) params += (k ? ";" : "") + format_real(f.params[k]);
  const std::string name(rmt::ensemble_name(ens.kind));

  std::string body;
  if (f.output.format == "json") {
    Json table = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["ensemble"] = name;
      j["params"] = f.params;
      j["n"] = f.n;
      j["point"] = row.point;
      j["parity"] = std::string(rmt::parity_name(row.parity));
      j["value"] = complex_pair(row.value);
      j["oracle"] = row.oracle ? Json(*row.oracle) : Json(nullptr);
      j["residual"] = row.residual ? Json(*row.residual) : Json(nullptr);
      table.push_back(j);
    }
    body = table.dump() + "\n";
  } else if (f.output.format == "csv") {
    body = "ensemble,params,n,point,parity,value,oracle,residual\n";
    for (const auto& row : rows) {
      body += name + "," + csv_field(params) + "," + std::to_string(f.n) + "," + row.point + "," +
              std::string(rmt::parity_name(row.parity)) + "," + csv_field(format_complex(row.value)) + "," +
              (row.oracle ? format_real(*row.oracle) : "") + "," + (row.residual ? scientific(*row.residual) : "") +
              "\n";
    }
  } else {
    for (const auto& row : rows) {
      body += name + (params.empty() ? "" : "(" + params + ")") + " n=" + std::to_string(f.n) + " " + row.point +
              " parity=" + std::string(rmt::parity_name(row.parity)) + "  value " + format_complex(row.value);
      if (row.oracle) body += "  oracle " + format_real(*row.oracle) + "  residual " + scientific(*row.residual);
      body += "\n";
    }
  }
  emit(f.output, body, out);
  return violation ? kExitViolation : kExitOk;
}

// ---- selftest -----------------------------------------------------------

struct SelftestFlags {
  std::string suite = "all";
  int trials = 0;
  std::optional<std::uint64_t> seed;
  OutputFlags output;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("SHIFTFACT_SEED");
  if (env == nullptr || *env == '\0') return 1;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("SHIFTFACT_SEED: '") + env + "' is not a nonnegative integer");
  }
}

int cmd_selftest(const SelftestFlags& f, std::ostream& out) {
  verify::SuiteOptions options;
  options.trials = f.trials;
  options.seed = f.seed ? *f.seed : default_seed();
  const auto reports = verify::run_suites(f.suite, options);
  std::string body = f.output.format == "json"  ? verify::reports_to_json(reports)
                     : f.output.format == "csv" ? verify::reports_to_csv(reports)
                                                : verify::reports_to_text(reports);
  emit(f.output, body, out);
  for (const auto& r : reports) {
    if (!r.passed()) return kExitViolation;
  }
  return kExitOk;
}

std::vector<std::string> suite_choices() {
  std::vector<std::string> names = verify::suite_names();
  names.emplace_back("all");
  return names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("s-shifted factorials, closed-form determinants and random-matrix Mellin moments", "shiftfact");
  app.require_subcommand(1);

  EvalFlags ev;
  auto* eval = app.add_subcommand("eval", "Evaluate (z)_{s;n}, (z)_{s;-q} or the generalized (z)_{s;t}");
  eval->add_option("--z", ev.z, "Base, complex literal such as 1-2i or 3/4")->required();
  eval->add_option("--s", ev.s, "Shift")->required();
  auto* ev_n = eval->add_option("--n", ev.n, "Nonnegative integer index")->check(CLI::NonNegativeNumber);
  auto* ev_q = eval->add_option("--q", ev.q, "Integer index, negative allowed");
  auto* ev_t = eval->add_option("--t", ev.t, "Complex index");
  ev_n->excludes(ev_q)->excludes(ev_t);
  ev_q->excludes(ev_t);
  eval->add_flag("--exact", ev.exact, "Rational arithmetic (integer index only)");
  add_output_flags(*eval, ev.output);

  DetFlags df;
  auto* det = app.add_subcommand("det", "Closed form and oracle of a determinant family");
  auto* det_spec = det->add_option("--spec", df.spec_path, "JSON document path, '-' for stdin");
  det->add_option("--kind", df.kind, "Family name, e.g. SShifted")->excludes(det_spec);
  det->add_option("--nodes", df.nodes, "Comma-separated nodes z_j")->excludes(det_spec);
  det->add_option("--s", df.s, "Shift")->excludes(det_spec);
  det->add_option("--a", df.a, "Affine parameter a")->excludes(det_spec);
  det->add_option("--b", df.b, "Affine parameter b")->excludes(det_spec);
  det->add_option("--t", df.t, "Complex index offset")->excludes(det_spec);
  det->add_option("--w", df.w, "Comma-separated second node set")->excludes(det_spec);
  det->add_option("--offsets", df.offsets, "Comma-separated row offsets b_i")->excludes(det_spec);
  det->add_flag("--exact", df.exact, "Rational arithmetic with the Bareiss oracle");
  auto* oracle_only = det->add_flag("--oracle-only", df.oracle_only, "Skip the closed form");
  det->add_flag("--closed-only", df.closed_only, "Skip the oracle")->excludes(oracle_only);
  det->add_option("--threshold", df.threshold, "Largest accepted relative residual")->capture_default_str();
  add_output_flags(*det, df.output);

  SumFlags sf;
  auto* sum = app.add_subcommand("sum", "Power sums of shifted factorials over an arithmetic progression");
  sum->add_option("--a", sf.a, "First term")->required();
  sum->add_option("--r", sf.r, "Common difference")->required();
  sum->add_option("--s", sf.s, "Shift")->required();
  sum->add_option("--p", sf.p, "Order")->required()->check(CLI::NonNegativeNumber);
  sum->add_option("--n", sf.n, "Number of terms")->required()->check(CLI::PositiveNumber);
  sum->add_option("--method", sf.method, "Evaluation route; 'all' cross-checks every applicable one")
      ->check(CLI::IsMember({"direct", "recurrence", "closed", "all"}))
      ->capture_default_str();
  sum->add_flag("--exact", sf.exact, "Rational arithmetic");
  sum->add_option("--threshold", sf.threshold, "Largest accepted relative disagreement")->capture_default_str();
  add_output_flags(*sum, sf.output);

  RmtFlags rf;
  auto* rmt_cmd = app.add_subcommand("rmt", "Mellin and integer moments of the characteristic determinant");
  rmt_cmd->add_option("--ensemble", rf.ensemble, "hermite, laguerre, gegenbauer or jacobi")->required();
  rmt_cmd->add_option("--param", rf.params, "alpha, lambda, or a then b; repeat as needed")
      ->allow_extra_args(false);
  rmt_cmd->add_option("--n", rf.n, "Matrix size")->required()->check(CLI::PositiveNumber);
  auto* rmt_s = rmt_cmd->add_option("--s", rf.s, "Mellin variable; repeat for a table")->allow_extra_args(false);
  rmt_cmd->add_option("--q", rf.q, "Integer moment order; repeat for a table")
      ->allow_extra_args(false)
      ->excludes(rmt_s);
  rmt_cmd->add_option("--parity", rf.parity, "Parity part for --s")
      ->check(CLI::IsMember({"plus", "minus"}))
      ->capture_default_str();
  rmt_cmd->add_flag("--closed-only", rf.closed_only, "Skip the quadrature oracle");
  rmt_cmd->add_option("--threshold", rf.threshold, "Largest accepted relative residual")->capture_default_str();
  add_output_flags(*rmt_cmd, rf.output);

  SelftestFlags st;
  auto* selftest = app.add_subcommand("selftest", "Run the property suites and report per-check residuals");
  selftest->add_option("--suite", st.suite, "Suite name")->check(CLI::IsMember(suite_choices()))->capture_default_str();
  selftest->add_option("--trials", st.trials, "Trials per property, 0 for the suite default")
      ->check(CLI::NonNegativeNumber);
  selftest->add_option("--seed", st.seed, "Random seed (default $SHIFTFACT_SEED, else 1)");
  add_output_flags(*selftest, st.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.back()->help());
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(ev, out);
    if (det->parsed()) return cmd_det(df, out);
    if (sum->parsed()) return sf.exact ? run_sum<Rational>(sf, out) : run_sum<Complex>(sf, out);
    if (rmt_cmd->parsed()) return cmd_rmt(rf, out);
    if (selftest->parsed()) return cmd_selftest(st, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const det::DocumentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "pole: " << e.what() << "\n";
    return kExitViolation;
  } catch (const DomainError& e) {
    err << "domain: " << e.what() << "\n";
    return kExitViolation;
  } catch (const UnsupportedCase& e) {
    err << "unsupported: " << e.what() << "\n";
    return kExitViolation;
  } catch (const ConvergenceError& e) {
    err << "convergence: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}

}  // namespace shiftfact::cli
