#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "newtonleaf/adlv.hpp"
#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/display.hpp"
#include "newtonleaf/newton.hpp"

namespace newtonleaf {

using Json = nlohmann::ordered_json;

// Accepts JSON plus bare identifiers: {lambda:[1,0],w:s} reads as
// {"lambda":[1,0],"w":"s"}.
Json parse_relaxed_json(const std::string& text);

// {lambda:[..], w:"s1s2" | [1,2] | "e"}
ExtendedAffineElement parse_element(const DatumPtr& d, const std::string& text);
ExtendedAffineElement element_from_json(const DatumPtr& d, const Json& j);
// Canonical text "{lambda:[1,0],w:s1}", accepted by parse_element.
std::string format_element(const ExtendedAffineElement& x);

// {group:"GL2"} | {group:"GL", n:2} | {group:"custom", roots, coroots, pairing}
DatumPtr datum_from_json(const Json& j);
DatumPtr parse_datum(const std::string& text);

// {permutation:[..], exponents:[..], signs:[..], period:r}
MonomialIsocrystal monomial_from_json(const Json& j);
Json monomial_to_json(const MonomialIsocrystal& m);

IntVector parse_int_list(const std::string& text);
std::vector<std::string> format_rationals(const RatVector& v);

// CSV with a "# schema=1" comment line and RFC 4180 quoting.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void row(const std::vector<std::string>& fields);
  std::string str() const { return out_; }

 private:
  std::size_t width_;
  std::string out_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvTable parse_csv(const std::string& text);

std::vector<std::string> leaf_report_header();
std::vector<std::string> leaf_report_row(const LeafReport& r);
LeafReport leaf_report_from_row(const DatumPtr& d, const std::vector<std::string>& header,
                                const std::vector<std::string>& row);
Json leaf_report_to_json(const LeafReport& r);
LeafReport leaf_report_from_json(const DatumPtr& d, const Json& j);
bool same_report(const LeafReport& a, const LeafReport& b);

// Lattice form as "[[a,b],[c,d]]".
std::string format_lattice(const LatticeModel& l);

// Matrices serialized entrywise as Witt components of W_K(F_p).
Json display_to_json(const DisplayDatum& d);
Json display_check_to_json(const DisplayCheck& c);

}  // namespace newtonleaf
