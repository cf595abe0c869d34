#pragma once

#include <unistd.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

// Drives the installed CLI binary (path from the TAURIG_CLI environment
// variable, set by CMake) through a shell, capturing stdout and exit code.
namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

inline std::string binary_path() {
  const char* p = std::getenv("TAURIG_CLI");
  if (!p || !*p) throw std::runtime_error("TAURIG_CLI is not set");
  return p;
}

inline Result run(const std::string& args, const std::string& env_prefix = {}) {
  std::string cmd = env_prefix + binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  Result r;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Writes quiver text to a fresh temp file and returns its path.
inline std::string temp_quiver_file(const std::string& text) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() /
              ("taurig_test_" + std::to_string(getpid()) + "_" + std::to_string(counter++) +
               ".quiver");
  std::ofstream f(path);
  f << text;
  f.close();
  return path.string();
}

inline Result run_on(const std::string& subcommand_and_flags, const std::string& quiver_text) {
  return run(subcommand_and_flags + " " + temp_quiver_file(quiver_text));
}

}  // namespace cli
