#pragma once

#include <optional>
#include <string>

#include "hankel_dual/verify.hpp"

namespace hdual::cli {

// Contents of a run configuration file.  Grammar (docs/config.md):
//
//   # comment
//   key = value
//
// Keys: entries, groups, seeds, jobs, format, out, tol, tol.decaying,
// tol.oscillatory, tol.singular, inject_rhs_error, grid.<ENTRY>.  List
// values are comma separated; grid points are separated by ';'.
struct FileConfig {
    verify::RunConfig run;
    std::optional<unsigned> jobs;
    std::optional<std::string> format;
    std::optional<std::string> out;
};

// Throws UsageError with the offending line number.
FileConfig parse_config(const std::string& text);
FileConfig load_config(const std::string& path);

// Positive integer or UsageError.
unsigned parse_jobs(const std::string& text, const std::string& source);

}  // namespace hdual::cli
