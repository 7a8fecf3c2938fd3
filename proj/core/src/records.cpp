#include "bicolor/records.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace bicolor {

using nlohmann::ordered_json;

bool operator==(const SeriesRecord& a, const SeriesRecord& b) {
  if (a.name != b.name || a.num_vars != b.num_vars || a.reliable != b.reliable) return false;
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t k = 0; k < a.terms.size(); ++k) {
    if (a.terms[k].exponents != b.terms[k].exponents || a.terms[k].coeff != b.terms[k].coeff) return false;
  }
  return true;
}

SeriesRecord make_record(std::string name, const MSeries& s) {
  SeriesRecord r{std::move(name), s.num_vars(), s.reliable(), {}};
  for (auto& t : s.terms()) {
    if (total_degree(t.exponents) > s.reliable()) break;
    r.terms.push_back(std::move(t));
  }
  return r;
}

MSeries record_series(const SeriesRecord& r) {
  return MSeries::from_terms(r.num_vars, std::max(r.reliable, 0), r.terms);
}

namespace {

ordered_json record_json(const SeriesRecord& r) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : r.terms) {
    ordered_json e = ordered_json::array();
    for (int k = 0; k < r.num_vars; ++k) e.push_back(t.exponents[static_cast<std::size_t>(k)]);
    terms.push_back({{"exponents", e},
                     {"numerator", t.coeff.get_num().get_str()},
                     {"denominator", t.coeff.get_den().get_str()}});
  }
  return {{"name", r.name}, {"variables", r.num_vars}, {"reliable", r.reliable}, {"terms", terms}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string to_json(const Document& doc) {
  ordered_json j;
  j["command"] = doc.command;
  j["family"] = doc.family;
  if (!doc.g.empty()) {
    ordered_json g = ordered_json::array();
    for (const auto& v : doc.g) g.push_back(to_string(v));
    j["g"] = g;
  }
  j["order"] = doc.order;
  j["i_max"] = doc.i_max;
  j["seed"] = doc.seed;
  ordered_json records = ordered_json::array();
  for (const auto& r : doc.records) records.push_back(record_json(r));
  j["records"] = records;
  if (!doc.checks.empty()) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : doc.checks) {
      checks.push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["checks"] = checks;
  }
  return j.dump(2) + "\n";
}

std::string to_csv(const Document& doc) {
  std::ostringstream os;
  if (!doc.records.empty()) {
    int nv = 0;
    for (const auto& r : doc.records) nv = std::max(nv, r.num_vars);
    os << "name";
    for (int k = 0; k < nv; ++k) os << ",e" << k;
    os << ",numerator,denominator\n";
    for (const auto& r : doc.records) {
      for (const auto& t : r.terms) {
        os << csv_field(r.name);
        for (int k = 0; k < nv; ++k) os << ',' << t.exponents[static_cast<std::size_t>(k)];
        os << ',' << t.coeff.get_num().get_str() << ',' << t.coeff.get_den().get_str() << '\n';
      }
    }
  }
  if (!doc.checks.empty()) {
    if (!doc.records.empty()) os << '\n';
    os << "suite,check,status,detail\n";
    for (const auto& c : doc.checks) {
      os << csv_field(c.suite) << ',' << csv_field(c.name) << ',' << (c.pass ? "pass" : "fail") << ','
         << csv_field(c.detail) << '\n';
    }
  }
  return os.str();
}

Document parse_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON document: ") + e.what());
  }
  Document doc;
  try {
    doc.command = j.at("command").get<std::string>();
    doc.family = j.at("family").get<std::string>();
    if (j.contains("g")) {
      for (const auto& v : j["g"]) doc.g.push_back(parse_rat(v.get<std::string>()));
    }
    doc.order = j.at("order").get<int>();
    doc.i_max = j.at("i_max").get<int>();
    doc.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& r : j.at("records")) {
      SeriesRecord rec;
      rec.name = r.at("name").get<std::string>();
      rec.reliable = r.at("reliable").get<int>();
      rec.num_vars = r.value("variables", 2);
      if (rec.num_vars < 1 || rec.num_vars > kMaxVars) throw std::invalid_argument("bad variable count");
      for (const auto& t : r.at("terms")) {
        Term term;
        const auto& e = t.at("exponents");
        if (e.size() != static_cast<std::size_t>(rec.num_vars)) throw std::invalid_argument("exponent count mismatch");
        for (std::size_t k = 0; k < e.size(); ++k) term.exponents[k] = e[k].get<int>();
        const mpz_class den(t.at("denominator").get<std::string>());
        if (den == 0) throw std::invalid_argument("zero denominator in record " + rec.name);
        term.coeff = Rat(mpz_class(t.at("numerator").get<std::string>()), den);
        term.coeff.canonicalize();
        rec.terms.push_back(term);
      }
      doc.records.push_back(std::move(rec));
    }
    if (j.contains("checks")) {
      for (const auto& c : j["checks"]) {
        doc.checks.push_back({c.at("suite").get<std::string>(), c.at("name").get<std::string>(),
                              c.at("pass").get<bool>(), c.at("detail").get<std::string>()});
      }
    }
  } catch (const ordered_json::exception& e) {
    throw std::invalid_argument(std::string("unexpected document shape: ") + e.what());
  }
  return doc;
}

}  // namespace bicolor
