// One PASS/FAIL line per acceptance criterion.  Exit status is nonzero if
// any line fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "sgkit/acceptance.hpp"

namespace {

  // Seconds allowed per criterion.
  constexpr std::array<double, 10> kBudget{0, 30, 60, 60, 120, 120, 120, 120,
                                           5, 240};

  struct Captured {
    int         status = -1;
    std::string out;
  };

  Captured capture(std::string const& cmd) {
    Captured c;
    FILE*    p = popen(cmd.c_str(), "r");
    if (p == nullptr) {
      return c;
    }
    std::array<char, 4096> buf;
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) {
      c.out.append(buf.data(), n);
    }
    int st   = pclose(p);
    c.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return c;
  }

  void line(int id, bool pass, std::string const& title, double secs,
            std::string const& extra = "") {
    std::ostringstream t;
    t << std::fixed << std::setprecision(2) << secs << "s < " << kBudget[id]
      << "s";
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " "
              << title << " [" << t.str() << "]" << extra << "\n";
  }

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  bool all    = true;
  for (int id = 1; id <= sgkit::kCriteria; ++id) {
    auto start = clock::now();
    auto r     = sgkit::run_criterion(id);
    auto secs  = std::chrono::duration<double>(clock::now() - start).count();
    bool pass  = r.pass && secs < kBudget[id];
    all        = all && pass;
    line(id, pass, r.title, secs);
    if (!pass) {
      std::cout << sgkit::format_result(r);
    }
  }

  // Two separate processes, so nothing is shared between the runs.
  auto start = clock::now();
  auto cmd   = std::string("\"") + SGKIT_CLI_PATH + "\" selftest";
  auto a     = capture(cmd);
  auto b     = capture(cmd);
  auto secs  = std::chrono::duration<double>(clock::now() - start).count();
  bool pass  = a.status == 0 && b.status == 0 && !a.out.empty()
              && a.out == b.out && secs < kBudget[9];
  all = all && pass;
  line(9, pass, "determinism: two selftest runs are byte-identical", secs,
       " bytes=" + std::to_string(a.out.size()));
  return all ? 0 : 1;
}
