#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "k3/classifier.hpp"

namespace k3 {

/// Flat, serialization-ready view of one classification. All list fields are
/// sorted, so identical queries always produce byte-identical output.
struct OutputRecord {
  Int n = 0, d = 0, g = 0, lambda = 0;
  std::string theorem_case;                 // "I".."IV" or "hodge"
  bool exists = false;
  std::vector<std::string> exceptions;      // sorted tokens, see README
  std::string quadrics;                     // quadrics_only | quadrics_and_cubics | na
  int picard_rank = 2;
  std::vector<std::string> picard_witnesses;  // "k:m" pairs, or "H","C"
  bool birational_only = false;
  std::string mode;                         // embedded | birational
  std::optional<Int> ci_hypersurface_degree;  // ci tables only

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

std::string case_label(TheoremCase c);
std::string quadrics_label(Quadrics q);
std::string exception_token(ExceptionClause e);
std::string mode_label(Mode m);

OutputRecord make_record(const CurveQuery& q, const ClassificationResult& r);

// Exact header: n,d,g,lambda,case,exists,exceptions,quadrics,picard_rank,birational_only
std::string csv_header();
std::string csv_header_ci();
std::string to_csv_row(const OutputRecord& r);
std::string to_csv_row_ci(const OutputRecord& r);

// JSON object with lexicographically sorted keys.
nlohmann::json to_json(const OutputRecord& r);
OutputRecord record_from_json(const nlohmann::json& j);

}  // namespace k3
