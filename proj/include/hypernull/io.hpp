#pragma once

#include "nullvariety.hpp"
#include "oracle.hpp"
#include "report.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace hypernull::io {

using nlohmann::json;

inline constexpr int kCsvVersion = 1;

enum class Format { Text, Json, Csv };

inline Format parse_format(const std::string& s)
{
  if (s == "text")
    return Format::Text;
  if (s == "json")
    return Format::Json;
  if (s == "csv")
    return Format::Csv;
  throw std::invalid_argument("unknown format '" + s + "'");
}

inline void csv_preamble(std::ostream& os, const char* kind)
{
  os << "# hypernull " << kind << " csv v" << kCsvVersion << '\n';
}

// Components --------------------------------------------------------------

inline json component_to_json(const Component& c)
{
  std::vector<std::string> gens;
  for (const auto& g : c.generator_set.generators)
    gens.push_back(g.to_string());
  return {{"S", c.generator_set.source.members()},
          {"generators", gens},
          {"codim", c.codim()},
          {"dim", c.dim()}};
}

inline json components_to_json(int n, const std::vector<Component>& cs)
{
  json arr = json::array();
  for (const auto& c : cs)
    arr.push_back(component_to_json(c));
  return {{"n", n}, {"count", cs.size()}, {"components", arr}};
}

//! Inverse of components_to_json. codim/dim are checked against the
//! generators.
inline std::vector<Component> components_from_json(const json& j)
{
  const int n = j.at("n").get<int>();
  std::vector<Component> out;
  for (const auto& item : j.at("components")) {
    GeneratorSet b{n, FibonacciSubset(n, item.at("S").get<std::vector<int>>()), {}};
    for (const auto& tok : item.at("generators"))
      b.generators.push_back(Generator::parse(tok.get<std::string>()));
    detail::normalize(b.generators);
    Component c{std::move(b)};
    if (c.codim() != item.at("codim").get<int>() || c.dim() != item.at("dim").get<int>())
      throw std::invalid_argument("codim/dim do not match generator list");
    out.push_back(std::move(c));
  }
  if (out.size() != j.at("count").get<std::size_t>())
    throw std::invalid_argument("component count mismatch");
  return out;
}

inline void write_components(std::ostream& os, int n, const std::vector<Component>& cs, Format f)
{
  switch (f) {
  case Format::Json:
    os << components_to_json(n, cs).dump(2) << '\n';
    break;
  case Format::Csv:
    csv_preamble(os, "components");
    os << "n,S,ideal,codim,dim\n";
    for (const auto& c : cs) {
      std::string s;
      for (int a : c.generator_set.source.members())
        s += (s.empty() ? "" : " ") + std::to_string(a);
      os << n << ",\"" << s << "\",\"" << render_ideal(c) << "\"," << c.codim() << ',' << c.dim() << '\n';
    }
    break;
  case Format::Text:
    for (const auto& c : cs)
      os << render_ideal(c) << '\n';
    break;
  }
}

// Verification rows ---------------------------------------------------------

inline json rows_to_json(const std::vector<VerificationRow>& rows)
{
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"n", r.n},
                   {"am", r.am.str()},
                   {"gm", r.gm.str()},
                   {"holds", r.holds},
                   {"sources", {{"am", r.am_source}, {"gm", r.gm_source}}}});
  return {{"rows", arr}, {"all_hold", all_hold(rows)}};
}

inline std::vector<VerificationRow> rows_from_json(const json& j)
{
  std::vector<VerificationRow> rows;
  for (const auto& item : j.at("rows")) {
    VerificationRow r;
    r.n = item.at("n").get<int>();
    r.am = BigInt(item.at("am").get<std::string>());
    r.gm = BigInt(item.at("gm").get<std::string>());
    r.holds = item.at("holds").get<bool>();
    r.am_source = item.at("sources").at("am").get<std::string>();
    r.gm_source = item.at("sources").at("gm").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

inline void write_rows(std::ostream& os, const std::vector<VerificationRow>& rows, Format f)
{
  switch (f) {
  case Format::Json:
    os << rows_to_json(rows).dump(2) << '\n';
    break;
  case Format::Csv:
    csv_preamble(os, "verify");
    os << "n,am,gm,holds,am_source,gm_source\n";
    for (const auto& r : rows)
      os << r.n << ',' << r.am << ',' << r.gm << ',' << (r.holds ? "true" : "false") << ',' << r.am_source << ','
         << r.gm_source << '\n';
    break;
  case Format::Text:
    os << std::setw(4) << "n" << "  " << std::setw(24) << "am(0) = D_{n,3}" << "  " << std::setw(24) << "gm(0)"
       << "  holds\n";
    for (const auto& r : rows)
      os << std::setw(4) << r.n << "  " << std::setw(24) << r.am << "  " << std::setw(24) << r.gm << "  "
         << (r.holds ? "yes" : "NO") << '\n';
    os << (all_hold(rows) ? "gm(0) <= am(0) holds for every row\n" : "VIOLATION: gm(0) > am(0) in some row\n");
    break;
  }
}

// Nullity rows ----------------------------------------------------------------

inline void write_nullity(std::ostream& os, const std::vector<NullityRow>& rows, Format f)
{
  switch (f) {
  case Format::Json: {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n}, {"k", r.k}, {"D_rec", r.rec.str()}, {"D_closed", r.closed.str()}, {"match", r.match()}});
    os << json{{"rows", arr}}.dump(2) << '\n';
    break;
  }
  case Format::Csv:
    csv_preamble(os, "am");
    os << "n,k,D_rec,D_closed,match\n";
    for (const auto& r : rows)
      os << r.n << ',' << r.k << ',' << r.rec << ',' << r.closed << ',' << (r.match() ? "true" : "false") << '\n';
    break;
  case Format::Text:
    for (const auto& r : rows)
      os << "n=" << r.n << " k=" << r.k << " D=" << r.closed << (r.match() ? "" : "  MISMATCH rec=" + r.rec.str())
         << '\n';
    break;
  }
}

// Series rows -------------------------------------------------------------

inline void write_series(std::ostream& os, const std::vector<SeriesRow>& rows, Format f)
{
  switch (f) {
  case Format::Json: {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"n", r.n},
                     {"eta", r.eta.str()},
                     {"eta_prime", r.eta_prime.str()},
                     {"gm_zero", r.gm_zero.str()},
                     {"provenance", to_string(r.source)}});
    os << json{{"rows", arr}}.dump(2) << '\n';
    break;
  }
  case Format::Csv:
    csv_preamble(os, "series");
    os << "n,eta,eta_prime,gm_zero,provenance\n";
    for (const auto& r : rows)
      os << r.n << ',' << r.eta << ',' << r.eta_prime << ',' << r.gm_zero << ',' << to_string(r.source) << '\n';
    break;
  case Format::Text:
    for (const auto& r : rows)
      os << "n=" << r.n << " eta=" << r.eta << " eta'=" << r.eta_prime << " gm=" << r.gm_zero << " ("
         << to_string(r.source) << ")\n";
    break;
  }
}

// Oracle ------------------------------------------------------------------

inline void write_oracle_result(std::ostream& os, const oracle::CheckResult& r)
{
  if (r.ok()) {
    os << "n=" << r.n << " OK (" << r.oracle_count << " components)\n";
    return;
  }
  os << "n=" << r.n << " MISMATCH (oracle " << r.oracle_count << ", enumeration " << r.enumeration_count << ")\n";
  for (const auto& s : r.only_in_oracle)
    os << "  + oracle only:      " << s << '\n';
  for (const auto& s : r.only_in_enumeration)
    os << "  - enumeration only: " << s << '\n';
}

}  // namespace hypernull::io
