#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "verify_internal.hpp"

namespace shiftfact::verify {

namespace detail {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace detail

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Complex Rng::in_disc(double radius) {
  for (;;) {
    const double x = uniform(-1.0, 1.0);
    const double y = uniform(-1.0, 1.0);
    if (x * x + y * y <= 1.0) return {radius * x, radius * y};
  }
}

Rational Rng::small_rational(int max_num, int max_den) {
  return Rational(integer(-max_num, max_num), integer(1, max_den));
}

bool SuiteReport::passed() const { return !checks.empty() && failed_checks() == 0; }

std::size_t SuiteReport::failed_checks() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.passed() ? 0 : 1;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"sfact", "detform", "apsum", "rmtpdd"};
  return names;
}

int default_trials(std::string_view suite) {
  if (suite == "sfact") return 200;
  if (suite == "detform") return 100;
  if (suite == "apsum") return 50;
  if (suite == "rmtpdd") return 10;
  throw DomainError("unknown suite '" + std::string(suite) + "'");
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  if (name == "sfact") return run_sfact_suite(options);
  if (name == "detform") return run_detform_suite(options);
  if (name == "apsum") return run_apsum_suite(options);
  if (name == "rmtpdd") return run_rmtpdd_suite(options);
  throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_suites(std::string_view name, const SuiteOptions& options) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& suite : suite_names()) out.push_back(run_suite(suite, options));
  } else {
    out.push_back(run_suite(name, options));
  }
  return out;
}

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  using nlohmann::ordered_json;
  ordered_json root;
  bool all_passed = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json suite;
    suite["suite"] = r.suite;
    suite["seed"] = r.seed;
    suite["trials"] = r.trials;
    suite["passed"] = r.passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json item;
      item["name"] = c.name;
      item["group"] = c.group;
      item["mode"] = c.exact ? "exact" : "relative";
      item["tolerance"] = c.tolerance;
      item["trials"] = c.trials;
      item["failures"] = c.failures;
      item["max_residual"] = detail::sci(c.max_residual);
      item["passed"] = c.passed();
      if (!c.first_failure.empty()) item["first_failure"] = c.first_failure;
      checks.push_back(std::move(item));
    }
    suite["checks"] = std::move(checks);
    all_passed = all_passed && r.passed();
    suites.push_back(std::move(suite));
  }
  root["schema"] = 1;
  root["passed"] = all_passed;
  root["suites"] = std::move(suites);
  return root.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "suite " << r.suite << " seed=" << r.seed << " trials=" << r.trials << '\n';
    for (const auto& c : r.checks) {
      char line[256];
      std::snprintf(line, sizeof line, "  %-4s %-44s %6zu trials  max %s  %s\n", c.passed() ? "ok" : "FAIL",
                    c.name.c_str(), c.trials, detail::sci(c.max_residual).c_str(),
                    c.exact ? "(exact)" : ("(tol " + detail::sci(c.tolerance) + ")").c_str());
      out << line;
      if (!c.passed() && !c.first_failure.empty()) out << "       first failure: " << c.first_failure << '\n';
    }
    out << "  " << (r.passed() ? "PASS" : "FAIL") << ' ' << r.checks.size() - r.failed_checks() << '/'
        << r.checks.size() << " checks\n";
  }
  return out.str();
}

std::string reports_to_csv(const std::vector<SuiteReport>& reports) {
  std::ostringstream out;
  out << "suite,check,group,mode,trials,failures,max_residual,tolerance,status\n";
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      out << r.suite << ',' << c.name << ',' << c.group << ',' << (c.exact ? "exact" : "relative") << ','
          << c.trials << ',' << c.failures << ',' << detail::sci(c.max_residual) << ','
          << detail::sci(c.tolerance) << ',' << (c.passed() ? "pass" : "fail") << '\n';
    }
  }
  return out.str();
}

}  // namespace shiftfact::verify
