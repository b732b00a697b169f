#pragma once

#include "ccforge/bundle.hpp"
#include "ccforge/series.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <sys/wait.h>

namespace ccforge::testing {

/// Deterministic random series: up to `max_terms` monomials of weight <= the
/// ring truncation, coefficients p/q with p in [-9,9], q in [1,9].
inline GradedSeries random_series(std::mt19937& rng, const GeneratorTablePtr& table,
                                  int truncation, int max_terms,
                                  bool nonzero_constant = false) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> exp(0, truncation);
    GradedSeries s(table, truncation);
    for (int t = 0; t < max_terms; ++t) {
        Monomial mono(table->size(), 0);
        int weight = 0;
        for (std::size_t i = 0; i < table->size(); ++i) {
            mono[i] = exp(rng) % (truncation + 1);
            weight += mono[i] * table->at(i).weight;
        }
        if (weight > truncation) continue;
        s.add_term(mono, Rat::of(num(rng), den(rng)));
    }
    if (nonzero_constant && s.constant_term().is_zero())
        s.add_term(Monomial(table->size(), 0), Rat(1));
    return s;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
};

/// Runs the CLI binary with the given argument string; captures stdout.
inline CliResult run_cli(const std::string& args) {
#ifndef CCFORGE_CLI_PATH
#error "CCFORGE_CLI_PATH must be defined by the build"
#endif
    const std::string cmd = std::string(CCFORGE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {};
    CliResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Scratch directory removed on destruction.
class TempDir {
public:
    TempDir() {
        auto base = std::filesystem::temp_directory_path();
        for (int i = 0; i < 1000; ++i) {
            auto candidate = base / ("ccforge_test_" + std::to_string(::getpid()) + "_" +
                                     std::to_string(counter_++));
            if (std::filesystem::create_directory(candidate)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("TempDir: cannot create scratch directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path file(const std::string& name) const { return path_ / name; }

    std::filesystem::path write(const std::string& name, const std::string& content) const {
        auto p = file(name);
        std::ofstream out(p);
        out << content;
        return p;
    }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace ccforge::testing
