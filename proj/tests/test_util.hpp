#pragma once

// Shared helpers for the test binaries: locating the built CLI and data
// files, running the CLI as a subprocess, and temp-file management.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace testutil {

inline std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

inline std::string cli_path() { return env_or("BIQUAD_CLI", "./biquad"); }
inline std::string registry_path() { return env_or("BIQUAD_REGISTRY", "data/registry.json"); }

struct CliResult {
    int exit_code;
    std::string out;
};

// Runs `<cli> <args>` through /bin/sh, capturing stdout; stderr is dropped.
// An env prefix like "BIQUAD_REGISTRY=/x.json" may be prepended.
inline CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + cli_path() + " " +
                            args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

inline std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

inline std::string last_line(std::string text) {
    while (!text.empty() && text.back() == '\n') text.pop_back();
    const auto pos = text.rfind('\n');
    return pos == std::string::npos ? text : text.substr(pos + 1);
}

class TempDir {
  public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 10000; ++i) {
            auto candidate = base / ("biquad_test_" + std::to_string(::getpid()) + "_" +
                                     std::to_string(i));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("cannot create temp dir");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace testutil
