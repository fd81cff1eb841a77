#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "newtonleaf/errors.hpp"
#include "newtonleaf/witt.hpp"

namespace newtonleaf::cli {

namespace {

const std::set<std::string> kCommands = {"report", "classes", "adm", "adlv", "witt-selfcheck", "crosscheck"};

template <class T>
T get_as(const Json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigurationError("spec key '" + key + "' has the wrong type");
  }
}

FrobeniusAction make_sigma(const DatumPtr& d, const std::string& name) {
  if (name == "trivial") return FrobeniusAction::trivial(d);
  if (name == "opposition") return FrobeniusAction::opposition(d);
  throw ConfigurationError("unknown sigma '" + name + "' (expected trivial or opposition)");
}

Json table_document(const std::string& command, const CsvTable& t) {
  Json doc;
  doc["schema"] = 1;
  doc["command"] = command;
  doc["columns"] = t.header;
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json rec;
    for (std::size_t i = 0; i < t.header.size(); ++i) rec[t.header[i]] = r[i];
    rows.push_back(rec);
  }
  doc["rows"] = rows;
  return doc;
}

std::string format_exponents(const std::vector<long long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::vector<ExtendedAffineElement> parse_elements(const DatumPtr& d, const JobSpec& job) {
  if (job.elements.empty()) throw ConfigurationError(job.command + " needs at least one element");
  std::vector<ExtendedAffineElement> out;
  for (const auto& e : job.elements) out.push_back(parse_element(d, e));
  return out;
}

Result run_report(const JobSpec& job, const DatumPtr& d) {
  const FrobeniusAction sigma = make_sigma(d, job.sigma);
  Result r;
  r.table.header = leaf_report_header();
  Json records = Json::array();
  for (const auto& x : parse_elements(d, job)) {
    LeafReport rep = leaf_report(x, sigma);
    r.table.rows.push_back(leaf_report_row(rep));
    records.push_back(leaf_report_to_json(rep));
  }
  r.document["schema"] = 1;
  r.document["command"] = "report";
  r.document["reports"] = records;
  return r;
}

Result run_classes(const JobSpec& job, const DatumPtr& d) {
  const FrobeniusAction sigma = make_sigma(d, job.sigma);
  ClassEnumerationConfig cfg;
  cfg.length_cap = job.length_cap < 0 ? 1 : job.length_cap;
  cfg.conj_cap = job.conj_cap;
  cfg.slack = job.slack;
  cfg.window = {job.kappa_lo, job.kappa_hi};
  const auto part = enumerate_sigma_classes(d, cfg, sigma);
  Result r;
  r.table.header = {"block", "element", "length", "seed", "nu", "kappa", "leaf_dim"};
  for (std::size_t b = 0; b < part.blocks.size(); ++b) {
    const auto& blk = part.blocks[b];
    const long long dim = to_long(numerator_of(d->pair(d->two_rho(), blk.nu_dominant)));
    for (std::size_t i = 0; i < blk.members.size(); ++i)
      r.table.rows.push_back({std::to_string(b), format_element(blk.members[i]),
                              std::to_string(length(blk.members[i])), blk.seed[i] ? "true" : "false",
                              format_vector(blk.nu_dominant), format_class(blk.kappa), std::to_string(dim)});
  }
  r.document = table_document("classes", r.table);
  r.document["conj_cap"] = part.conj_cap;
  return r;
}

Result run_adm(const JobSpec& job, const DatumPtr& d) {
  if (!job.mu) throw ConfigurationError("adm needs --mu");
  const Level level = parse_level(job.level);
  const auto adm = admissible_set(d, *job.mu, level);
  Result r;
  if (level == Level::Iwahori) {
    r.table.header = {"element", "length"};
    for (const auto& x : adm.elements) r.table.rows.push_back({format_element(x), std::to_string(length(x))});
  } else {
    r.table.header = {"translation"};
    for (const auto& t : adm.dominant_translations) r.table.rows.push_back({format_vector(t)});
  }
  r.document = table_document("adm", r.table);
  r.document["level"] = level_name(level);
  return r;
}

Result run_adlv(const JobSpec& job, const DatumPtr& d) {
  if (!job.mu) throw ConfigurationError("adlv needs --mu");
  MonomialIsocrystal b;
  std::optional<ExtendedAffineElement> x;
  if (job.isocrystal) {
    b = monomial_from_json(*job.isocrystal);
  } else {
    if (d->family() != GroupFamily::GL) throw UnsupportedOperation("lattice censuses are implemented for GL_n only");
    x = parse_elements(d, job).front();
    b = monomial_lift(*x);
  }
  LatticeBudget budget;
  budget.max_candidates = job.max_candidates;
  const auto census = adlv_points(b, *job.mu, Integer(job.p), job.depth, budget);
  Result r;
  r.table.header = {"lattice", "inv", "kappa", "slope_divisible", "certificate_verified"};
  for (const auto& pt : census.points)
    r.table.rows.push_back({format_lattice(pt.lattice), format_exponents(pt.inv), std::to_string(pt.kappa),
                            pt.certificate.divisible ? "true" : "false", pt.certificate_verified ? "true" : "false"});
  for (const auto& pt : census.points)
    if (!pt.certificate_verified) throw ConsistencyError("slope-divisibility certificate failed re-verification");
  r.document = table_document("adlv", r.table);
  r.document["isocrystal"] = monomial_to_json(b);
  r.document["lattices_tested"] = census.candidates;
  r.document["complete_up_to_depth"] = job.depth;
  if (x && d->is_dominant(to_rationals(*job.mu))) r.document["neutral_acceptable"] = neutral_acceptable(*x, *job.mu);
  return r;
}

Result run_witt(const JobSpec& job) {
  const Integer p(job.p);
  Result r;
  r.table.header = {"check", "trials", "pass", "witness"};
  for (const auto& c : witt_self_check(p, job.witt_length, job.coefficient_precision, job.pairs, job.seed))
    r.table.rows.push_back({c.name, std::to_string(c.trials), c.pass ? "true" : "false", c.witness});

  // Display axioms on the grid of monomial b with exponents in {-1,0}.
  std::size_t grid = 0, good = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        MonomialIsocrystal b;
        b.permutation = perm;
        for (std::size_t i = 0; i < n; ++i) b.exponents.push_back((mask >> i) & 1 ? -1 : 0);
        ++grid;
        if (display_check(display_from_element(b, p, job.witt_length)).ok()) ++good;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  r.table.rows.push_back({"display axioms on monomial grid n<=3", std::to_string(grid), good == grid ? "true" : "false",
                          good == grid ? "" : std::to_string(grid - good) + " failures"});
  bool rejected = false;
  try {
    display_from_element(MonomialIsocrystal::diagonal(to_integers({0, 1})), p, job.witt_length);
  } catch (const NotPDivisibleGroup&) {
    rejected = true;
  }
  r.table.rows.push_back({"display rejects diag(1,p)", "1", rejected ? "true" : "false", ""});
  r.document = table_document("witt-selfcheck", r.table);
  return r;
}

Result run_crosscheck(const JobSpec& job, const DatumPtr& d) {
  const int cap = job.length_cap < 0 ? 2 : job.length_cap;
  std::vector<ExtendedAffineElement> sample;
  if (!job.elements.empty())
    sample = parse_elements(d, job);
  else
    sample = elements_up_to_length(d, cap, {job.kappa_lo, job.kappa_hi});
  std::sort(sample.begin(), sample.end(), output_order);
  const auto rep = cross_check_dimension(sample);
  Result r;
  r.table.header = {"element", "nu", "two_rho_pairing", "positive_root_sum", "pass"};
  for (const auto& row : rep.rows)
    r.table.rows.push_back({format_element(row.element), format_vector(row.nu_dominant), to_string(row.two_rho_side),
                            to_string(row.root_sum_side), row.pass ? "true" : "false"});
  if (!rep.all_pass) throw ConsistencyError("dimension cross-check failed");
  r.document = table_document("crosscheck", r.table);
  return r;
}

}  // namespace

JobSpec job_from_json(const Json& j) {
  static const std::set<std::string> keys = {
      "command", "group", "sigma", "element", "elements", "isocrystal", "mu", "level", "p", "depth", "length",
      "precision", "pairs", "seed", "length_cap", "conj_cap", "slack", "kappa_lo", "kappa_hi", "max_candidates",
      "output", "format"};
  if (!j.is_object()) throw ConfigurationError("job spec must be an object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw ConfigurationError("unknown spec key '" + k + "'");
  JobSpec job;
  if (!j.contains("command")) throw ConfigurationError("spec needs a command");
  job.command = get_as<std::string>(j, "command");
  if (!kCommands.count(job.command)) throw ConfigurationError("unknown command '" + job.command + "'");
  if (j.contains("group")) job.group = j.at("group");
  if (j.contains("sigma")) job.sigma = get_as<std::string>(j, "sigma");
  if (j.contains("element")) {
    const Json& e = j.at("element");
    job.elements.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  }
  if (j.contains("elements")) {
    if (!j.at("elements").is_array()) throw ConfigurationError("elements must be a list");
    for (const auto& e : j.at("elements")) job.elements.push_back(e.is_string() ? e.get<std::string>() : e.dump());
  }
  if (j.contains("isocrystal")) {
    const Json& e = j.at("isocrystal");
    job.isocrystal = e.is_string() ? parse_relaxed_json(e.get<std::string>()) : e;
  }
  if (j.contains("mu")) {
    const Json& m = j.at("mu");
    if (m.is_string()) {
      job.mu = parse_int_list(m.get<std::string>());
    } else {
      IntVector v;
      for (const auto& x : m) {
        if (!x.is_number_integer()) throw ConfigurationError("mu must contain integers");
        v.push_back(Integer(x.get<long long>()));
      }
      job.mu = v;
    }
  }
  if (j.contains("level")) job.level = get_as<std::string>(j, "level");
  if (j.contains("p")) job.p = get_as<long long>(j, "p");
  if (j.contains("depth")) job.depth = get_as<int>(j, "depth");
  if (j.contains("length")) job.witt_length = get_as<int>(j, "length");
  if (j.contains("precision")) job.coefficient_precision = get_as<int>(j, "precision");
  if (j.contains("pairs")) job.pairs = get_as<std::size_t>(j, "pairs");
  if (j.contains("seed")) job.seed = get_as<std::uint64_t>(j, "seed");
  if (j.contains("length_cap")) job.length_cap = get_as<int>(j, "length_cap");
  if (j.contains("conj_cap")) job.conj_cap = get_as<int>(j, "conj_cap");
  if (j.contains("slack")) job.slack = get_as<int>(j, "slack");
  if (j.contains("kappa_lo")) job.kappa_lo = get_as<long long>(j, "kappa_lo");
  if (j.contains("kappa_hi")) job.kappa_hi = get_as<long long>(j, "kappa_hi");
  if (j.contains("max_candidates")) job.max_candidates = get_as<std::size_t>(j, "max_candidates");
  if (j.contains("output")) job.output = get_as<std::string>(j, "output");
  if (j.contains("format")) job.format = get_as<std::string>(j, "format");

  if (job.format != "csv" && job.format != "json") throw ConfigurationError("format must be csv or json");
  if (job.p < 2) throw ConfigurationError("p must be a prime >= 2");
  for (long long d = 2; d * d <= job.p; ++d)
    if (job.p % d == 0) throw ConfigurationError("p must be prime");
  if (job.kappa_lo > job.kappa_hi) throw ConfigurationError("kappa_lo exceeds kappa_hi");
  return job;
}

Json job_to_json(const JobSpec& job) {
  Json j;
  j["command"] = job.command;
  j["group"] = job.group;
  j["sigma"] = job.sigma;
  j["elements"] = job.elements;
  if (job.isocrystal) j["isocrystal"] = *job.isocrystal;
  if (job.mu) {
    Json m = Json::array();
    for (const auto& x : *job.mu) m.push_back(to_long(x));
    j["mu"] = m;
  }
  j["level"] = job.level;
  j["p"] = job.p;
  j["depth"] = job.depth;
  j["length"] = job.witt_length;
  j["precision"] = job.coefficient_precision;
  j["pairs"] = job.pairs;
  j["seed"] = job.seed;
  j["length_cap"] = job.length_cap;
  j["conj_cap"] = job.conj_cap;
  j["slack"] = job.slack;
  j["kappa_lo"] = job.kappa_lo;
  j["kappa_hi"] = job.kappa_hi;
  j["max_candidates"] = job.max_candidates;
  j["output"] = job.output;
  j["format"] = job.format;
  return j;
}

Result execute(const JobSpec& job) {
  if (job.command == "witt-selfcheck") return run_witt(job);
  const DatumPtr d = job.group.is_string() ? parse_datum(job.group.get<std::string>()) : datum_from_json(job.group);
  if (job.command == "report") return run_report(job, d);
  if (job.command == "classes") return run_classes(job, d);
  if (job.command == "adm") return run_adm(job, d);
  if (job.command == "adlv") return run_adlv(job, d);
  if (job.command == "crosscheck") return run_crosscheck(job, d);
  throw ConfigurationError("unknown command '" + job.command + "'");
}

std::string render(const JobSpec& job, const Result& r) {
  if (job.format == "json") return r.document.dump(2) + "\n";
  CsvWriter w(r.table.header);
  for (const auto& row : r.table.rows) w.row(row);
  return w.str();
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    const Result r = execute(job);
    const std::string text = render(job, r);
    if (job.output.empty()) {
      out << text;
    } else {
      std::filesystem::path path(job.output);
      if (const char* dir = std::getenv("NEWTONLEAF_OUTPUT_DIR"); dir && *dir && path.is_relative())
        path = std::filesystem::path(dir) / path;
      if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
      std::ofstream f(path, std::ios::binary);
      if (!f) throw ConfigurationError("cannot write " + path.string());
      f << text;
    }
    if (job.command == "witt-selfcheck")
      for (const auto& row : r.table.rows)
        if (row[2] != "true") {
          err << "newtonleaf: check failed: " << row[0] << "\n";
          return kInconsistent;
        }
    return kOk;
  } catch (const ConsistencyError& e) {
    err << "newtonleaf: internal consistency failure: " << e.what() << "\n";
    return kInconsistent;
  } catch (const ResourceError& e) {
    err << "newtonleaf: budget exhausted: " << e.what() << "\n";
    if (!e.partial().empty()) err << e.partial() << "\n";
    return kBudget;
  } catch (const InconclusiveError& e) {
    err << "newtonleaf: budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "newtonleaf: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "newtonleaf: invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "newtonleaf: internal error: " << e.what() << "\n";
    return kInconsistent;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton points, central-leaf dimensions and lattice censuses for reductive groups"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  for (const auto& c : kCommands) app.add_subcommand(c, "run the " + c + " job");

  std::string spec_path, group, sigma, isocrystal, mu, level, output, format;
  std::vector<std::string> elements;
  long long p = 0, kappa_lo = 0, kappa_hi = 0;
  int depth = 0, length = 0, precision = 0, length_cap = 0, conj_cap = 0, slack = 0;
  std::size_t pairs = 0, max_candidates = 0;
  std::uint64_t seed = 0;
  app.add_option("--spec", spec_path, "read the job spec (JSON) from a file; flags override its keys");
  auto* o_group = app.add_option("--group", group, "GL2, SL3, Sp4, GSp4 or a JSON root datum");
  auto* o_sigma = app.add_option("--sigma", sigma, "Frobenius action: trivial (default) or opposition");
  auto* o_elem = app.add_option("--element", elements, "element such as {lambda:[1,0],w:s}; repeatable");
  auto* o_iso = app.add_option("--isocrystal", isocrystal, "adlv: {permutation:[..],exponents:[..]}");
  auto* o_mu = app.add_option("--mu", mu, "cocharacter, e.g. 1,0");
  auto* o_level = app.add_option("--level", level, "iwahori (default) or hyperspecial");
  auto* o_p = app.add_option("--p", p, "prime (default 2)");
  auto* o_depth = app.add_option("--depth", depth, "lattice depth N (default 1)");
  auto* o_length = app.add_option("--length", length, "Witt length (default 3)");
  auto* o_prec = app.add_option("--precision", precision, "Witt coefficient ring Z/p^k (default 5)");
  auto* o_pairs = app.add_option("--pairs", pairs, "random pairs for witt-selfcheck (default 500)");
  auto* o_seed = app.add_option("--seed", seed, "random seed (default 20240601)");
  auto* o_cap = app.add_option("--length-cap", length_cap, "length cap (classes 1, crosscheck 2)");
  auto* o_conj = app.add_option("--conj-cap", conj_cap, "conjugator length cap (default length cap + 2)");
  auto* o_slack = app.add_option("--slack", slack, "extra length for intermediate conjugates (default 1)");
  auto* o_klo = app.add_option("--kappa-lo", kappa_lo, "lower Kottwitz window bound (default -1)");
  auto* o_khi = app.add_option("--kappa-hi", kappa_hi, "upper Kottwitz window bound (default 1)");
  auto* o_maxc = app.add_option("--max-candidates", max_candidates, "lattice candidate budget (default 2000000)");
  auto* o_out = app.add_option("--output", output, "output path (default stdout)");
  auto* o_fmt = app.add_option("--format", format, "csv (default) or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "newtonleaf: invalid arguments: " << e.what() << "\n";
    return kInvalid;
  }

  try {
    Json j = Json::object();
    if (!spec_path.empty()) {
      std::ifstream f(spec_path);
      if (!f) throw ConfigurationError("cannot read spec file " + spec_path);
      std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
      j = parse_relaxed_json(text);
      if (!j.is_object()) throw ConfigurationError("spec file must hold an object");
    }
    for (auto* sub : app.get_subcommands()) j["command"] = sub->get_name();
    if (*o_group) j["group"] = group.find('{') != std::string::npos ? parse_relaxed_json(group) : Json(group);
    if (*o_sigma) j["sigma"] = sigma;
    if (*o_elem) {
      j.erase("element");
      j["elements"] = elements;
    }
    if (*o_iso) j["isocrystal"] = isocrystal;
    if (*o_mu) j["mu"] = mu;
    if (*o_level) j["level"] = level;
    if (*o_p) j["p"] = p;
    if (*o_depth) j["depth"] = depth;
    if (*o_length) j["length"] = length;
    if (*o_prec) j["precision"] = precision;
    if (*o_pairs) j["pairs"] = pairs;
    if (*o_seed) j["seed"] = seed;
    if (*o_cap) j["length_cap"] = length_cap;
    if (*o_conj) j["conj_cap"] = conj_cap;
    if (*o_slack) j["slack"] = slack;
    if (*o_klo) j["kappa_lo"] = kappa_lo;
    if (*o_khi) j["kappa_hi"] = kappa_hi;
    if (*o_maxc) j["max_candidates"] = max_candidates;
    if (*o_out) j["output"] = output;
    if (*o_fmt) j["format"] = format;
    return run(job_from_json(j), out, err);
  } catch (const Error& e) {
    err << "newtonleaf: invalid input: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace newtonleaf::cli
