#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cliutil {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void spit_file(const std::filesystem::path& path,
                      const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

/// A unique scratch directory per call, left behind for post-mortems.
inline std::filesystem::path fresh_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  const auto dir = std::filesystem::temp_directory_path() /
                   ("agorank-" + tag + "-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter++));
  std::filesystem::create_directories(dir);
  return dir;
}

/// Run the built CLI with the given argument string through the shell.
/// `env` is prepended verbatim (for VAR=value prefixes).
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  const auto dir = fresh_dir("cli");
  const auto out_path = dir / "stdout.txt";
  const auto err_path = dir / "stderr.txt";
  std::string command;
  if (!env.empty()) command += env + " ";
  command += std::string(AGORANK_CLI_PATH) + " " + args + " >" +
             out_path.string() + " 2>" + err_path.string();
  const int status = std::system(command.c_str());
  CliResult result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  result.out = slurp_file(out_path);
  result.err = slurp_file(err_path);
  return result;
}

}  // namespace cliutil
