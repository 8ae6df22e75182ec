#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "flatcyc/growth.hpp"
#include "flatcyc/primes.hpp"
#include "flatcyc/tori.hpp"

namespace flatcyc::cli {

using Json = nlohmann::ordered_json;

enum class Format { ReportJson, TableCsv };

/// A list of flat records plus command-level metadata. JSON output keeps the
/// metadata; CSV output writes one header row (keys of the first record) and
/// one row per record.
struct Report {
  std::string command;
  Json meta = Json::object();
  std::vector<Json> records;

  void write(std::ostream& os, Format f) const;
};

Json to_json(const IntPoly& f);
Json to_json(const IntMatrix& A);
Json to_json(const ResidueRing& R, const RingMatrix& A);
Json to_json(const ResidueRing& R, const RingElement& e);
Json to_json(const PrimeVerdict& v);
Json to_json(const GrowthReport& g);
Json to_json(const ResidueRing& R, const EigenData& e);

std::string ring_label(const ResidueRing& R);
std::string csv_escape(const std::string& s);

}  // namespace flatcyc::cli
