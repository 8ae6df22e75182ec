#include "report.hpp"

namespace flatcyc::cli {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

void Report::write(std::ostream& os, Format f) const {
  if (f == Format::ReportJson) {
    Json doc = Json::object();
    doc["command"] = command;
    for (auto it = meta.begin(); it != meta.end(); ++it) doc[it.key()] = it.value();
    doc["records"] = records;
    os << doc.dump(2) << "\n";
    return;
  }
  if (records.empty()) {
    os << "\n";
    return;
  }
  std::vector<std::string> keys;
  for (auto it = records.front().begin(); it != records.front().end(); ++it) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << csv_escape(keys[i]);
  os << "\n";
  for (const auto& r : records) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "");
      if (r.contains(keys[i])) os << csv_escape(cell(r.at(keys[i])));
    }
    os << "\n";
  }
}

Json to_json(const IntPoly& f) {
  Json a = Json::array();
  for (const auto& c : f.coefficients()) a.push_back(to_string(c));
  return a;
}

Json to_json(const IntMatrix& A) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(to_string(A(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const ResidueRing& R, const RingElement& e) {
  if (R.residue_degree() == 1) return to_string(R.scalar(e));
  Json a = Json::array();
  for (const auto& c : e.c) a.push_back(to_string(c));
  return a;
}

Json to_json(const ResidueRing& R, const RingMatrix& A) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(to_json(R, A(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string ring_label(const ResidueRing& R) {
  if (R.residue_degree() == 1) return "Z/" + to_string(R.modulus());
  return "Z[x]/(" + to_string(R.local_poly()) + ", " + to_string(R.modulus()) + ")";
}

Json to_json(const PrimeVerdict& v) {
  Json j = Json::object();
  j["p"] = to_string(v.p);
  j["class_mod_40"] = v.class_mod_40;
  j["three_mod_four"] = v.three_mod_four;
  j["splits_completely"] = v.splits_completely;
  j["square_free_mod_p"] = v.square_free_mod_p;
  j["root_count"] = v.root_count;
  j["field_split"] = v.field_split ? to_string(*v.field_split) : "";
  j["excluded"] = v.excluded.value_or("");
  std::string fired;
  for (const auto& f : v.fired) fired += (fired.empty() ? "" : ";") + f;
  j["fired"] = fired;
  return j;
}

namespace {

std::string rational_string(const std::optional<Rational>& r) { return r ? to_string(*r) : "undefined"; }

}  // namespace

Json to_json(const GrowthReport& g) {
  Json j = Json::object();
  j["case"] = g.case_label;
  j["p"] = to_string(g.spec.p);
  j["k"] = g.spec.k;
  j["l"] = g.spec.l;
  j["c"] = to_string(g.spec.c);
  j["W"] = to_string(g.orders.W);
  j["W1"] = to_string(g.orders.W1);
  j["W2"] = to_string(g.orders.W2);
  j["bound"] = to_string(g.bound);
  j["volume_proxy"] = to_string(g.volume_proxy);
  j["kappa_printed"] = g.kappa.kappa_printed ? format_high(*g.kappa.kappa_printed) : "";
  j["kappa_kernel"] = rational_string(g.kappa.kappa_kernel);
  j["paper_exponent"] = g.kappa.exponent;
  j["kappa_difference"] = g.kappa_difference ? format_high(*g.kappa_difference) : "";
  j["base_constant"] = to_string(g.orders.base_constant);
  switch (g.spec.kind) {
    case CaseKind::SL:
      j["source"] =
          "W = |SL_{n+1}(Z/p^l)|/|SL_{n+1}(Z/p^k)|; W1 = split torus ratio in SL_{n+1}; W2 = |SL_n| ratio; "
          "exponent (n+1)/(n^2+2n)";
      break;
    case CaseKind::Hilbert:
      j["source"] = "W = |SL_2(O/P^l)|/|SL_2(O/P^k)|; W1 = W2 = unit group ratio; exponent 1/3";
      break;
    case CaseKind::SO:
      j["source"] =
          "W = Omega(Q_n) ratio; W1 = SO-centralizer ratio of B+...+B^m; W2 = Omega(Q~_{n-1}) ratio; "
          "kappa_printed = 1 - log(p^(n^2-n+1)+2p^((n^2-n+2)/2)+p^(2n-1))/log(p^(n^2)+p^(n(n-1)/2)); "
          "paper_exponent = (n-1-log_p 3)/n^2";
      break;
  }
  return j;
}

Json to_json(const ResidueRing& R, const EigenData& e) {
  Json j = Json::object();
  Json ev = Json::array();
  for (const auto& l : e.eigenvalues) ev.push_back(to_json(R, l));
  j["eigenvalues"] = ev;
  j["P"] = to_json(R, e.P);
  j["P_inv"] = to_json(R, e.P_inv);
  return j;
}

}  // namespace flatcyc::cli
