#include "newtonleaf/io.hpp"

#include <cctype>
#include <set>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/witt.hpp"

namespace newtonleaf {

Json parse_relaxed_json(const std::string& text) {
  std::string strict;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '"') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != '"') j += text[j] == '\\' ? 2 : 1;
      strict += text.substr(i, j - i + 1);
      i = j + 1;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      std::string word = text.substr(i, j - i);
      strict += (word == "true" || word == "false" || word == "null") ? word : "\"" + word + "\"";
      i = j;
    } else {
      strict += c;
      ++i;
    }
  }
  try {
    return Json::parse(strict);
  } catch (const Json::exception& e) {
    throw ConfigurationError("cannot parse '" + text + "': " + e.what());
  }
}

namespace {

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& what) {
  if (!j.is_object()) throw ConfigurationError(what + " must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigurationError("unknown key '" + k + "' in " + what);
}

IntVector int_vector(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_int_list(j.get<std::string>());
  if (!j.is_array()) throw ConfigurationError(what + " must be a list of integers");
  IntVector out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ConfigurationError(what + " must contain integers");
    out.push_back(Integer(x.get<long long>()));
  }
  return out;
}

Json int_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_long(x));
  return a;
}

RatVector parse_rational_tuple(std::string text) {
  if (!text.empty() && text.front() == '(') text = text.substr(1);
  if (!text.empty() && text.back() == ')') text.pop_back();
  RatVector out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, end == std::string::npos ? std::string::npos : end - start)));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw ConfigurationError("expected true or false, got '" + s + "'");
}

FrobeniusAction sigma_by_name(const DatumPtr& d, const std::string& name) {
  if (name == "trivial") return FrobeniusAction::trivial(d);
  if (name == "opposition") return FrobeniusAction::opposition(d);
  throw ConfigurationError("unknown Frobenius action '" + name + "'");
}

}  // namespace

IntVector parse_int_list(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '[' && c != ']') t += c;
  IntVector out;
  if (t.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t end = t.find(',', start);
    std::string item = t.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(Integer(v));
    } catch (const std::exception&) {
      throw ConfigurationError("not an integer list: '" + text + "'");
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> format_rationals(const RatVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

ExtendedAffineElement element_from_json(const DatumPtr& d, const Json& j) {
  reject_unknown(j, {"lambda", "w"}, "element");
  IntVector lambda = j.contains("lambda") ? int_vector(j.at("lambda"), "lambda") : IntVector(d->cochar_rank(), Integer(0));
  std::size_t w = 0;
  if (j.contains("w")) {
    const Json& jw = j.at("w");
    if (jw.is_string()) {
      w = parse_word(*d, jw.get<std::string>());
    } else if (jw.is_array()) {
      std::vector<int> word;
      for (const auto& x : jw) {
        if (!x.is_number_integer()) throw ConfigurationError("Weyl word entries must be integers");
        int k = x.get<int>();
        if (k < 1 || static_cast<std::size_t>(k) > d->weyl().rank())
          throw ConfigurationError("simple reflection index out of range");
        word.push_back(k - 1);
      }
      w = d->weyl().from_word(word);
    } else {
      throw ConfigurationError("w must be a word such as \"s1s2\" or a list of indices");
    }
  }
  if (lambda.size() != d->cochar_rank())
    throw ConfigurationError("lambda has " + std::to_string(lambda.size()) + " entries, expected " +
                             std::to_string(d->cochar_rank()));
  return ExtendedAffineElement(d, lambda, w);
}

ExtendedAffineElement parse_element(const DatumPtr& d, const std::string& text) {
  return element_from_json(d, parse_relaxed_json(text));
}

std::string format_element(const ExtendedAffineElement& x) {
  std::string s = "{lambda:[";
  const auto& l = x.translation_part();
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + to_string(l[i]);
  return s + "],w:" + format_word(x.datum(), x.finite_part()) + "}";
}

DatumPtr datum_from_json(const Json& j) {
  if (j.is_string()) return datum_from_name(j.get<std::string>());
  reject_unknown(j, {"group", "n", "roots", "coroots", "pairing"}, "group");
  if (!j.contains("group") || !j.at("group").is_string()) throw ConfigurationError("group needs a 'group' name");
  const std::string g = j.at("group").get<std::string>();
  if (g == "custom") {
    if (!j.contains("roots") || !j.contains("coroots")) throw ConfigurationError("custom group needs roots and coroots");
    std::vector<IntVector> roots, coroots;
    for (const auto& r : j.at("roots")) roots.push_back(int_vector(r, "root"));
    for (const auto& r : j.at("coroots")) coroots.push_back(int_vector(r, "coroot"));
    std::size_t k = !coroots.empty() ? coroots.front().size() : 0;
    IntMatrix pairing = IntMatrix::identity(k);
    if (j.contains("pairing")) {
      std::vector<IntVector> rows;
      for (const auto& r : j.at("pairing")) rows.push_back(int_vector(r, "pairing row"));
      pairing = IntMatrix::from_rows(rows);
    }
    return RootDatum::custom(roots, coroots, pairing);
  }
  if (j.contains("roots") || j.contains("coroots") || j.contains("pairing"))
    throw ConfigurationError("roots/coroots/pairing are only accepted with group \"custom\"");
  if (j.contains("n")) return build_classical(g, j.at("n").get<int>());
  return datum_from_name(g);
}

DatumPtr parse_datum(const std::string& text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return datum_from_json(parse_relaxed_json(text));
  return datum_from_name(text);
}

MonomialIsocrystal monomial_from_json(const Json& j) {
  reject_unknown(j, {"permutation", "exponents", "signs", "period"}, "isocrystal");
  MonomialIsocrystal m;
  if (!j.contains("permutation") || !j.contains("exponents"))
    throw ConfigurationError("isocrystal needs permutation and exponents");
  for (const auto& x : int_vector(j.at("permutation"), "permutation")) {
    if (x < 0) throw ConfigurationError("permutation entries must be nonnegative");
    m.permutation.push_back(static_cast<std::size_t>(to_long(x)));
  }
  m.exponents = int_vector(j.at("exponents"), "exponents");
  if (j.contains("signs"))
    for (const auto& x : int_vector(j.at("signs"), "signs")) m.signs.push_back(to_int(x));
  if (j.contains("period")) m.frobenius_power = j.at("period").get<int>();
  try {
    m.validate();
  } catch (const Error& e) {
    throw ConfigurationError(std::string("invalid isocrystal: ") + e.what());
  }
  return m;
}

Json monomial_to_json(const MonomialIsocrystal& m) {
  Json j;
  Json perm = Json::array();
  for (auto x : m.permutation) perm.push_back(x);
  j["permutation"] = perm;
  j["exponents"] = int_json(m.exponents);
  if (!m.signs.empty()) {
    Json s = Json::array();
    for (int x : m.signs) s.push_back(x);
    j["signs"] = s;
  }
  j["period"] = m.frobenius_power;
  return j;
}

// ---- CSV ----

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : width_(header.size()) {
  out_ = "# schema=1\n";
  row(header);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  if (fields.size() != width_) throw ConsistencyError("CSV row width does not match the header");
  for (std::size_t i = 0; i < fields.size(); ++i) out_ += (i ? "," : "") + csv_field(fields[i]);
  out_ += "\n";
}

CsvTable parse_csv(const std::string& text) {
  CsvTable t;
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false, at_line_start = true, in_record = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (at_line_start && c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      ++i;
      continue;
    }
    at_line_start = false;
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        i += 2;
        continue;
      }
      if (c == '"') quoted = false;
      else field += c;
      ++i;
      continue;
    }
    in_record = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      rec.push_back(field);
      field.clear();
    } else if (c == '\n') {
      rec.push_back(field);
      field.clear();
      records.push_back(rec);
      rec.clear();
      at_line_start = true;
      in_record = false;
    } else if (c != '\r') {
      field += c;
    }
    ++i;
  }
  if (quoted) throw ConfigurationError("unterminated quote in CSV");
  if (in_record) {
    rec.push_back(field);
    records.push_back(rec);
  }
  if (records.empty()) throw ConfigurationError("CSV without a header");
  t.header = records.front();
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != t.header.size()) throw ConfigurationError("CSV row width does not match the header");
    t.rows.push_back(records[r]);
  }
  return t;
}

// ---- leaf reports ----

std::vector<std::string> leaf_report_header() {
  return {"group", "sigma", "element", "nu", "kappa", "basic", "leaf_dim", "jb_dim", "adjoint_slopes", "checked"};
}

std::vector<std::string> leaf_report_row(const LeafReport& r) {
  return {r.element.datum().name(),
          r.sigma,
          format_element(r.element),
          format_vector(r.nu_dominant),
          format_class(r.kappa),
          r.basic ? "true" : "false",
          std::to_string(r.leaf_dim),
          std::to_string(r.jb_dim),
          format_slopes(r.adjoint_slopes),
          r.checked ? "true" : "false"};
}

LeafReport leaf_report_from_row(const DatumPtr& d, const std::vector<std::string>& header,
                                const std::vector<std::string>& row) {
  if (header != leaf_report_header()) throw ConfigurationError("not a leaf report header");
  if (row.size() != header.size()) throw ConfigurationError("leaf report row has the wrong width");
  if (row[0] != d->name()) throw MismatchError("report for " + row[0] + " read against " + d->name());
  const FrobeniusAction sigma = sigma_by_name(d, row[1]);
  const CoinvariantLattice shape = sigma.is_trivial() ? d->fundamental_group() : fundamental_group_sigma(sigma);
  LeafReport r{parse_element(d, row[2]),
               parse_rational_tuple(row[3]),
               parse_class(row[4], shape),
               parse_bool(row[5]),
               std::stoll(row[6]),
               std::stoll(row[7]),
               parse_slopes(row[8]),
               parse_bool(row[9]),
               row[1]};
  return r;
}

Json leaf_report_to_json(const LeafReport& r) {
  Json j;
  auto row = leaf_report_row(r);
  j["group"] = row[0];
  j["sigma"] = row[1];
  j["element"] = row[2];
  j["nu_dominant"] = format_rationals(r.nu_dominant);
  j["kappa"] = row[4];
  j["basic"] = r.basic;
  j["leaf_dim"] = r.leaf_dim;
  j["jb_dim"] = r.jb_dim;
  j["adjoint_slopes"] = format_rationals(r.adjoint_slopes);
  j["checked"] = r.checked;
  return j;
}

LeafReport leaf_report_from_json(const DatumPtr& d, const Json& j) {
  reject_unknown(j, {"group", "sigma", "element", "nu_dominant", "kappa", "basic", "leaf_dim", "jb_dim",
                     "adjoint_slopes", "checked"},
                 "leaf report");
  std::vector<std::string> row = leaf_report_header();
  auto join = [](const Json& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].get<std::string>();
    return s;
  };
  row = {j.at("group").get<std::string>(),
         j.at("sigma").get<std::string>(),
         j.at("element").get<std::string>(),
         "(" + join(j.at("nu_dominant")) + ")",
         j.at("kappa").get<std::string>(),
         j.at("basic").get<bool>() ? "true" : "false",
         std::to_string(j.at("leaf_dim").get<long long>()),
         std::to_string(j.at("jb_dim").get<long long>()),
         join(j.at("adjoint_slopes")),
         j.at("checked").get<bool>() ? "true" : "false"};
  return leaf_report_from_row(d, leaf_report_header(), row);
}

bool same_report(const LeafReport& a, const LeafReport& b) {
  return a.element == b.element && a.nu_dominant == b.nu_dominant && a.kappa == b.kappa && a.basic == b.basic &&
         a.leaf_dim == b.leaf_dim && a.jb_dim == b.jb_dim && a.adjoint_slopes == b.adjoint_slopes &&
         a.checked == b.checked && a.sigma == b.sigma;
}

std::string format_lattice(const LatticeModel& l) { return format_matrix(l.form()); }

// ---- displays ----

namespace {

Json witt_matrix(const IntMatrix& m, const Integer& p, int length) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(witt_digits(m(i, j), p, length)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json display_to_json(const DisplayDatum& d) {
  Json j;
  j["prime"] = to_long(d.prime);
  j["witt_length"] = d.witt_length;
  j["rank"] = d.rank;
  j["M1"] = witt_matrix(d.m1, d.prime, d.witt_length);
  j["Phi"] = witt_matrix(d.phi, d.prime, d.witt_length);
  j["Phi1"] = witt_matrix(d.phi1, d.prime, d.witt_length);
  return j;
}

Json display_check_to_json(const DisplayCheck& c) {
  Json j;
  j["contains_pM"] = c.contains_pm;
  j["quotient_free"] = c.quotient_free;
  j["p_Phi1_equals_Phi"] = c.compatible;
  j["Phi1_generates"] = c.generates;
  j["witness_column"] = c.witness_column ? Json(*c.witness_column) : Json(nullptr);
  j["quotient_rank"] = c.quotient_rank;
  j["psi"] = format_matrix(c.psi);
  j["psi_invertible"] = c.psi_invertible;
  return j;
}

}  // namespace newtonleaf
