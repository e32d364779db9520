#pragma once

// Subprocess helper for CLI tests: runs a command line, captures stdout and
// the exit code. Stderr is dropped unless the command redirects it.

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

inline Result run(const std::string& cmd) {
  Result r;
  std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), got);
  int rc = pclose(pipe);
  if (WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
  return r;
}

} // namespace cli
