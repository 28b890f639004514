// Acceptance runner: one pass/fail line per criterion.
//
// Usage: shiftfact_acceptance [seed]   (default $SHIFTFACT_SEED, else 1)

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "shiftfact/verify.hpp"

#ifndef SHIFTFACT_CLI_PATH
#error "SHIFTFACT_CLI_PATH must name the shiftfact executable"
#endif

namespace {

using shiftfact::verify::CheckResult;
using shiftfact::verify::SuiteReport;

struct Criterion {
  int id;
  std::string title;
  std::set<std::string> groups;
  double limit_seconds;  // 0: no runtime bound
};

struct Line {
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::size_t exact = 0;
  // Relative check closest to its tolerance.
  std::string worst;
  double worst_residual = 0.0;
  double worst_tolerance = 0.0;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

void print(const Criterion& c, const Line& line) {
  std::string text = std::string(line.passed ? "[PASS]" : "[FAIL]") + " criterion " + std::to_string(c.id) + "  " +
                     c.title;
  text.resize(std::max<std::size_t>(text.size(), 56), ' ');
  text += std::to_string(line.checks - line.failed) + "/" + std::to_string(line.checks) + " checks";
  if (line.exact > 0) text += ", " + std::to_string(line.exact) + " exact";
  if (!line.worst.empty()) {
    text += "  worst " + line.worst + " " + sci(line.worst_residual) + " (tol " + sci(line.worst_tolerance) + ")";
  }
  text += "  " + fixed(line.seconds, 2) + " s";
  if (c.limit_seconds > 0) text += " (limit " + fixed(c.limit_seconds, 0) + " s)";
  std::cout << text << '\n';
  for (const auto& note : line.notes) std::cout << "         " << note << '\n';
}

Line summarize(const Criterion& c, const std::vector<SuiteReport>& reports) {
  Line line;
  for (const auto& r : reports) {
    for (const CheckResult& check : r.checks) {
      if (!c.groups.count(check.group)) continue;
      ++line.checks;
      if (check.exact) {
        ++line.exact;
      } else if (line.worst.empty() ||
                 check.max_residual / check.tolerance > line.worst_residual / line.worst_tolerance) {
        line.worst = check.name;
        line.worst_residual = check.max_residual;
        line.worst_tolerance = check.tolerance;
      }
      if (!check.passed()) {
        ++line.failed;
        line.notes.push_back(check.name + ": " + std::to_string(check.failures) + "/" + std::to_string(check.trials) +
                             " failing, max " + sci(check.max_residual) +
                             (check.first_failure.empty() ? "" : "; " + check.first_failure));
      }
    }
    for (const auto& [group, seconds] : r.group_seconds) {
      if (c.groups.count(group)) line.seconds += seconds;
    }
  }
  line.passed = line.checks > 0 && line.failed == 0;
  if (line.checks == 0) line.notes.push_back("no checks were recorded for this criterion");
  if (c.limit_seconds > 0 && line.seconds > c.limit_seconds) {
    line.passed = false;
    line.notes.push_back("runtime " + fixed(line.seconds, 2) + " s exceeds the limit");
  }
  return line;
}

struct Process {
  int code = -1;
  std::string out;
};

Process capture(const std::string& args) {
  const std::string command = std::string("\"") + SHIFTFACT_CLI_PATH + "\" " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return p;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) p.out.append(buf.data(), got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

Line cli_criterion(std::uint64_t seed) {
  Line line;
  const auto start = std::chrono::steady_clock::now();
  auto expect = [&](bool ok, const std::string& what) {
    ++line.checks;
    if (!ok) {
      ++line.failed;
      line.notes.push_back(what);
    }
  };

  const std::string selftest = "selftest --suite all --seed " + std::to_string(seed);
  const Process first = capture(selftest);
  const Process second = capture(selftest);
  expect(first.code == 0, "selftest --suite all exited " + std::to_string(first.code));
  expect(!first.out.empty() && first.out == second.out, "selftest --suite all output differs between runs");

  const std::array<std::pair<const char*, const char*>, 3> evals{{
      {"eval --z 1 --s 1 --n 4", "24\n"},
      {"eval --z 3 --s 1 --n 0", "1\n"},
      {"eval --z 3 --s 1 --q -1", "0.5\n"},
  }};
  for (const auto& [args, want] : evals) {
    const Process p = capture(args);
    expect(p.code == 0 && p.out == want, std::string(args) + " printed '" + p.out + "'");
  }

  const std::array<std::pair<const char*, const char*>, 2> dets{{
      {"det --kind SShifted --s 1 --nodes 0,1,2 --format csv", "SShifted,3,2,2,"},
      {"det --kind GammaShift --nodes 1,2,3 --format csv", "GammaShift,3,4,4,"},
  }};
  for (const auto& [args, want] : dets) {
    const Process p = capture(args);
    expect(p.code == 0 && p.out.find(want) != std::string::npos, std::string(args) + " printed '" + p.out + "'");
  }
  const Process malformed = capture("det --spec /dev/null");
  expect(malformed.code == 2, "malformed JSON exited " + std::to_string(malformed.code));

  line.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  line.passed = line.failed == 0;
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t seed = 1;
  if (const char* env = std::getenv("SHIFTFACT_SEED"); env != nullptr && *env != '\0') seed = std::stoull(env);
  if (argc > 1) seed = std::stoull(argv[1]);

  std::cout << "shiftfact acceptance, seed " << seed << '\n';
  shiftfact::verify::SuiteOptions options;
  options.seed = seed;
  const auto reports = shiftfact::verify::run_suites("all", options);

  const std::vector<Criterion> criteria{
      {1, "identity suite", {"identities", "numkernel"}, 60},
      {2, "generating function", {"generating"}, 5},
      {3, "connecting coefficients", {"connecting"}, 0},
      {4, "determinant oracle equivalence", {"det_oracle", "det_properties"}, 600},
      {5, "triangularization identities", {"triangular"}, 0},
      {6, "arithmetic-progression sums", {"apsum"}, 0},
      {7, "random-matrix module", {"rmt_phi", "rmt_blocks", "rmt_normalization"}, 300},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const Line line = summarize(c, reports);
    print(c, line);
    if (!line.passed) ++failed;
  }
  const Criterion cli{8, "command-line interface", {}, 0};
  const Line line = cli_criterion(seed);
  print(cli, line);
  if (!line.passed) ++failed;

  std::cout << (failed == 0 ? "all 8 criteria pass" : std::to_string(failed) + " of 8 criteria fail") << '\n';
  return failed == 0 ? 0 : 1;
}
