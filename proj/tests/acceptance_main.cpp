// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: repst_acceptance <path-to-repst-cli> [seed]
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "repst/acceptance.hpp"

namespace {

struct RunOutput {
  std::string text;
  int status = -1;
};

RunOutput capture(const std::string& command) {
  RunOutput out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.text.append(buf.data(), got);
  out.status = pclose(pipe);
  return out;
}

void report(int id, const std::string& title, bool pass, double seconds, const std::string& note = {}) {
  std::printf("%s criterion %d: %s (%.1fs)%s\n", pass ? "PASS" : "FAIL", id, title.c_str(), seconds,
              note.empty() ? "" : ("  " + note).c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: repst_acceptance <repst-cli> [seed]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::uint64_t seed = argc > 2 ? std::stoull(argv[2]) : 0x5eed;
  bool all = true;

  for (int id = 1; id <= repst::kInProcessCriteria; ++id) {
    repst::CriterionResult r;
    try {
      r = repst::run_criterion(id, seed);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = std::string("raised ") + e.what();
      r.pass = false;
    }
    all = all && r.pass;
    report(id, r.title, r.pass, r.seconds, r.pass ? "" : r.details.dump());
  }

  // 12: two independent CLI runs of the suite, with different thread counts,
  // must print byte-identical results.
  {
    const auto start = std::chrono::steady_clock::now();
    const std::string base = "'" + cli + "' --seed " + std::to_string(seed);
    const RunOutput first = capture(base + " --jobs 1 selftest 2>/dev/null");
    const RunOutput second = capture(base + " --jobs 2 selftest 2>/dev/null");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = first.status == 0 && second.status == 0 && !first.text.empty() && first.text == second.text;
    all = all && pass;
    report(12, "repeated CLI runs are byte-identical", pass, secs,
           pass ? "" : "status " + std::to_string(first.status) + "/" + std::to_string(second.status));
  }
  return all ? 0 : 1;
}
