#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "triolab/classify.hpp"
#include "triolab/suites.hpp"

namespace triolab::cli {

inline constexpr int kSchemaVersion = 1;

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

// Runs the command line; output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Group descriptor, or a JSON object {"order": n, "table": [[...]], "names": [...]}.
FiniteGroup group_from_arg(const std::string& arg);
// Comma separated element names or indices; empty string is the empty set.
Mask subset_from_arg(const FiniteGroup& g, const std::string& arg);

nlohmann::json mask_json(const FiniteGroup& g, Mask m);
nlohmann::json certificate_json(const FiniteGroup& g, const Certificate& c);
nlohmann::json suite_json(const SuiteResult& r);
nlohmann::json report_json(const FiniteGroup& g, const Report& r);

// Indented key: value rendering of a JSON record.
std::string render_text(const nlohmann::json& j);

}  // namespace triolab::cli
