#pragma once

#include <optional>
#include <string>
#include <utility>

#include "gmf/serialize.hpp"

namespace gmf {

// Structured reports behind the command-line verbs. Input errors throw
// std::invalid_argument (GraphError for graphs); the status separates complete
// results from uncertified ones and from failed internal invariants.
enum class Status { ok, partial, invariant };

struct ReportOptions {
  int n = 2;
  int unit = 0;  // 0: 1 for compile and close, 2 for verify-moy
  std::optional<std::pair<int, int>> window;
  bool certify = false;  // search equivalences regardless of rank
  std::string route = "theorem";  // theorem | direct | excluded
};

// graph text or braid word "m=..: ..."
Status compile_report(const std::string& text, const ReportOptions& o, Json& out);
Status close_report(const std::string& text, const ReportOptions& o, Json& out);
// relation file JSON
Status verify_hecke_report(const std::string& text, const ReportOptions& o, Json& out);
Status verify_moy_report(const std::string& text, const ReportOptions& o, Json& out);
// {"ring": {...}, "ideal": [...], "potential": "..."}
Status stabilize_report(const std::string& text, const ReportOptions& o, Json& out);
// factorization JSON
Status reduce_report(const std::string& text, const ReportOptions& o, Json& out);

}  // namespace gmf
