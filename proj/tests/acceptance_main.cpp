// Runs the acceptance criteria and prints one pass/fail line per criterion.
// Exit status 0 means every criterion passed.

#include <cstring>
#include <iostream>
#include <string>
#include <thread>

#include "orbalg/checks.hpp"

int main(int argc, char** argv) {
  orbalg::checks::Options options;
  options.jobs = std::max(1u, std::thread::hardware_concurrency());
  bool timings = false;

  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next_value = [&](const char* flag) -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << flag << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--extended")
      options.extended = true;
    else if (arg == "--timings")
      timings = true;
    else if (arg == "--seed")
      options.seed = std::stoull(next_value("--seed"));
    else if (arg == "--jobs")
      options.jobs = static_cast<unsigned>(std::stoul(next_value("--jobs")));
    else {
      std::cerr << "usage: orbalg_acceptance [--extended] [--seed S] [--jobs N] [--timings]\n";
      return 2;
    }
  }

  auto results = orbalg::checks::run_all(options);
  std::size_t passed = 0;
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << " " << (r.pass ? "PASS" : "FAIL") << " " << r.name
              << ": " << r.detail;
    if (timings) std::cout << " (" << r.seconds << "s)";
    std::cout << "\n";
    if (r.pass) ++passed;
  }
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == results.size() ? 0 : 1;
}
