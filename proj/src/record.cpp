#include "k3/record.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3 {

std::string case_label(TheoremCase c) {
  switch (c) {
    case TheoremCase::I: return "I";
    case TheoremCase::II: return "II";
    case TheoremCase::III: return "III";
    case TheoremCase::IV: return "IV";
    case TheoremCase::HodgeViolation: return "hodge";
  }
  throw std::logic_error("case_label: bad case");
}

std::string quadrics_label(Quadrics q) {
  switch (q) {
    case Quadrics::Only: return "quadrics_only";
    case Quadrics::AndCubics: return "quadrics_and_cubics";
    case Quadrics::NotApplicable: return "na";
  }
  throw std::logic_error("quadrics_label: bad value");
}

std::string exception_token(ExceptionClause e) {
  switch (e) {
    case ExceptionClause::A: return "a";
    case ExceptionClause::B: return "b";
    case ExceptionClause::C: return "c";
    case ExceptionClause::D: return "d";
    case ExceptionClause::RankOneFail: return "rank1";
    case ExceptionClause::DDivisible: return "ddiv";
    case ExceptionClause::Exceptional2n1: return "d2n1";
  }
  throw std::logic_error("exception_token: bad value");
}

std::string mode_label(Mode m) {
  return m == Mode::Embedded ? "embedded" : "birational";
}

OutputRecord make_record(const CurveQuery& q, const ClassificationResult& r) {
  OutputRecord rec;
  rec.n = q.n;
  rec.d = q.d;
  rec.g = q.g;
  rec.lambda = r.lambda;
  rec.theorem_case = case_label(r.theorem_case);
  rec.exists = r.exists;
  for (const auto e : r.exceptions) rec.exceptions.push_back(exception_token(e));
  std::sort(rec.exceptions.begin(), rec.exceptions.end());
  rec.quadrics = quadrics_label(r.quadrics);
  rec.picard_rank = r.picard.rank;
  if (r.picard.rank == 1) {
    for (const auto& w : r.picard.witnesses)
      rec.picard_witnesses.push_back(std::to_string(w.k) + ":" +
                                     std::to_string(w.m));
  } else {
    rec.picard_witnesses = {"H", "C"};
  }
  rec.birational_only = r.birational_only;
  rec.mode = mode_label(q.mode);
  return rec;
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos) return s;
  return "\"" + s + "\"";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string csv_header() {
  return "n,d,g,lambda,case,exists,exceptions,quadrics,picard_rank,"
         "birational_only";
}

std::string csv_header_ci() { return csv_header() + ",ci_hypersurface_degree"; }

std::string to_csv_row(const OutputRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.d << ',' << r.g << ',' << r.lambda << ','
     << r.theorem_case << ',' << bool_str(r.exists) << ','
     << csv_field(join(r.exceptions, ",")) << ',' << r.quadrics << ','
     << r.picard_rank << ',' << bool_str(r.birational_only);
  return os.str();
}

std::string to_csv_row_ci(const OutputRecord& r) {
  std::string row = to_csv_row(r) + ",";
  if (r.ci_hypersurface_degree)
    row += std::to_string(*r.ci_hypersurface_degree);
  return row;
}

nlohmann::json to_json(const OutputRecord& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["g"] = r.g;
  j["lambda"] = r.lambda;
  j["case"] = r.theorem_case;
  j["exists"] = r.exists;
  j["exceptions"] = r.exceptions;
  j["quadrics"] = r.quadrics;
  j["picard"] = {{"rank", r.picard_rank}, {"witnesses", r.picard_witnesses}};
  j["birational_only"] = r.birational_only;
  j["mode"] = r.mode;
  if (r.ci_hypersurface_degree)
    j["ci_hypersurface_degree"] = *r.ci_hypersurface_degree;
  return j;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  r.n = j.at("n").get<Int>();
  r.d = j.at("d").get<Int>();
  r.g = j.at("g").get<Int>();
  r.lambda = j.at("lambda").get<Int>();
  r.theorem_case = j.at("case").get<std::string>();
  r.exists = j.at("exists").get<bool>();
  r.exceptions = j.at("exceptions").get<std::vector<std::string>>();
  r.quadrics = j.at("quadrics").get<std::string>();
  r.picard_rank = j.at("picard").at("rank").get<int>();
  r.picard_witnesses =
      j.at("picard").at("witnesses").get<std::vector<std::string>>();
  r.birational_only = j.at("birational_only").get<bool>();
  r.mode = j.at("mode").get<std::string>();
  if (j.contains("ci_hypersurface_degree"))
    r.ci_hypersurface_degree = j.at("ci_hypersurface_degree").get<Int>();
  return r;
}

}  // namespace k3
