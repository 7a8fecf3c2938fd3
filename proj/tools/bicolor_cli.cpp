// Command-line front end: emits series tables as JSON or CSV and runs the
// verification suites. Exit codes: 0 success, 1 failed check, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bicolor/closedform.hpp"
#include "bicolor/dimers.hpp"
#include "bicolor/extensions.hpp"
#include "bicolor/hankel.hpp"
#include "bicolor/records.hpp"
#include "bicolor/slices.hpp"
#include "bicolor/verify.hpp"

namespace {

using namespace bicolor;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family = "quad";
  std::string g_list;
  std::string method;
  std::string format = "json";
  std::string suite = "all";
  int order = 6;
  int i_max = 3;
  int links = -1;
  std::uint64_t seed = 1;
};

std::vector<Rat> parse_g(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rat(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("bad --g entry: ") + e.what());
    }
  }
  return out;
}

FaceWeights face_weights(const Config& c, Document& doc) {
  if (c.family == "quad") return FaceWeights::quadrangulations();
  if (c.family == "hex") return FaceWeights::hexangulations();
  if (c.family == "general") {
    if (c.g_list.empty()) throw UsageError("--family general needs --g");
    doc.g = parse_g(c.g_list);
    try {
      return FaceWeights(doc.g);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("family " + c.family + " has no face weights");
}

std::string idx(const std::string& name, int i) { return name + "_" + std::to_string(i); }

int default_height(const FaceWeights& g, int order, int i_max) { return std::max(order + g.p() + 1, i_max); }

// The requested ladder for the map families, by the chosen route.
WeightLadder map_ladder(const Config& c, const FaceWeights& g) {
  const std::string m = c.method.empty() ? "ladder" : c.method;
  if (m == "ladder") return ladder_solve(g, c.order, default_height(g, c.order, c.i_max));
  if (m == "hankel") return ladder_from_hankel(g, (c.i_max + 1) / 2, c.order);
  if (m == "closed") {
    const Tails t = tail_solve(g, c.order);
    if (c.family == "quad") return quad_ladder_closed(t, c.i_max);
    if (c.family == "hex") return hex_ladder_closed(t, c.i_max);
    throw UsageError("closed forms exist for quad and hex only");
  }
  throw UsageError("unknown method " + m);
}

void emit_ladder(Document& doc, const WeightLadder& l, const std::string& first, const std::string& second, int count) {
  for (int i = 1; i <= count; ++i) doc.records.push_back(make_record(idx(first, i), l.B(i)));
  for (int i = 1; i <= count; ++i) doc.records.push_back(make_record(idx(second, i), l.W(i)));
}

void run_twopoint(const Config& c, Document& doc) {
  const FaceWeights g = face_weights(c, doc);
  const TwoPointTable t = twopoint_from_ladder(map_ladder(c, g), c.i_max);
  for (int j = 1; j <= c.i_max; ++j) doc.records.push_back(make_record(idx("G", j) + "_black", t.black[j - 1]));
  for (int j = 1; j <= c.i_max; ++j) doc.records.push_back(make_record(idx("G", j) + "_white", t.white[j - 1]));
}

void run_ladder(const Config& c, Document& doc) {
  const std::string m = c.method.empty() ? "ladder" : c.method;
  if (c.family == "ternary" || c.family == "binary") {
    const MSeries zb = MSeries::variable(2, c.order, 0), zw = MSeries::variable(2, c.order, 1);
    const bool ternary = c.family == "ternary";
    const int height = std::max(tree_height(c.order), c.i_max);
    WeightLadder l = [&] {
      if (m == "ladder") return ternary ? ternary_ladder(zb, zw, height) : binary_ladder(zb, zw, height);
      if (m == "closed") return ternary ? ternary_closed(zb, zw, c.i_max) : binary_closed(zb, zw, c.i_max);
      throw UsageError("tree systems support the ladder and closed methods");
    }();
    emit_ladder(doc, l, ternary ? "P" : "R", ternary ? "Q" : "S", c.i_max);
    return;
  }
  if (c.family == "tricolor") throw UsageError("use the tricolor command for the three-color system");
  emit_ladder(doc, map_ladder(c, face_weights(c, doc)), "B", "W", c.i_max);
}

void run_hankel(const Config& c, Document& doc) {
  const FaceWeights g = face_weights(c, doc);
  const std::string m = c.method.empty() ? "det" : c.method;
  const Moments mo = hankel_moments(g, 2 * c.i_max + 2, c.order);
  for (std::size_t n = 0; n < mo.black.size(); ++n) {
    doc.records.push_back(make_record(idx("F", static_cast<int>(n)) + "_black", mo.black[n]));
  }
  for (std::size_t n = 0; n < mo.white.size(); ++n) {
    doc.records.push_back(make_record(idx("F", static_cast<int>(n)) + "_white", mo.white[n]));
  }
  if (m == "det") {
    const HankelFamily fam = hankel_family(mo.black, mo.white, c.i_max);
    for (int i = 0; i <= c.i_max; ++i) {
      doc.records.push_back(make_record(idx("h0", i), HankelFamily::at(fam.h0, i)));
      doc.records.push_back(make_record(idx("h1", i), HankelFamily::at(fam.h1, i)));
      doc.records.push_back(make_record(idx("h0_tilde", i), HankelFamily::at(fam.h0_tilde, i)));
      doc.records.push_back(make_record(idx("h1_tilde", i), HankelFamily::at(fam.h1_tilde, i)));
    }
    return;
  }
  if (m != "lgv") throw UsageError("hankel supports the det and lgv methods");
  if (c.family != "quad" && c.family != "hex") throw UsageError("the lgv method covers quad and hex");
  const Tails t = tail_solve(g, c.order + 2);
  const auto a = alpha_coeffs(Color::Black, g, t);
  const auto at = alpha_coeffs(Color::White, g, t);
  const auto lgv = c.family == "quad" ? lgv_quad : lgv_hex;
  for (int i = 0; i <= c.i_max; ++i) {
    const HankelPair p = lgv(i, t.B, t.W, a);
    const HankelPair pt = lgv(i, t.W, t.B, at);
    doc.records.push_back(make_record(idx("h0", i), p.h0));
    doc.records.push_back(make_record(idx("h1", i), p.h1));
    doc.records.push_back(make_record(idx("h0_tilde", i), pt.h0));
    doc.records.push_back(make_record(idx("h1_tilde", i), pt.h1));
  }
}

// Dimer polynomials use exponents (s1, s2); reliable is the top dimer count.
void run_dimers(const Config& c, Document& doc) {
  const int top = c.links >= 0 ? c.links : 2 * c.i_max;
  const std::pair<DimerEnds, const char*> kinds[] = {
      {DimerEnds::BB, "BB"}, {DimerEnds::BW, "BW"}, {DimerEnds::WW, "WW"}, {DimerEnds::WB, "WB"}};
  for (const auto& [ends, name] : kinds) {
    for (int links = 0; links <= top; ++links) {
      if ((ends == DimerEnds::BB || ends == DimerEnds::WW) != (links % 2 == 0)) continue;
      const DimerPoly p = zhd(ends, links);
      SeriesRecord r{"Z_" + std::string(name) + "_" + std::to_string(links), 2, p.max_dimers(), {}};
      for (const auto& [e, v] : p.coeffs()) r.terms.push_back({{e.first, e.second, 0}, Rat(v)});
      std::sort(r.terms.begin(), r.terms.end(), [](const Term& x, const Term& y) {
        const int dx = total_degree(x.exponents), dy = total_degree(y.exponents);
        return dx != dy ? dx < dy : x.exponents < y.exponents;
      });
      doc.records.push_back(std::move(r));
    }
  }
}

void run_tricolor(const Config& c, Document& doc) {
  const std::string m = c.method.empty() ? "ladder" : c.method;
  if (m == "closed") {
    const TricolorClosed cl = tricolor_closed(c.order, c.i_max);
    for (std::size_t k = 0; k < cl.T3.size(); ++k) {
      const int i = 3 * static_cast<int>(k + 1);
      doc.records.push_back(make_record(idx("T", i), cl.T3[k]));
      doc.records.push_back(make_record(idx("U", i), cl.U3[k]));
      doc.records.push_back(make_record(idx("V", i), cl.V3[k]));
    }
    return;
  }
  if (m != "ladder") throw UsageError("tricolor supports the ladder and closed methods");
  const TricolorLadder l = tricolor_ladder(c.order, std::max(c.order + 3, c.i_max));
  for (const auto& [name, list] : {std::pair{"T", &l.T}, std::pair{"U", &l.U}, std::pair{"V", &l.V}}) {
    for (int i = 1; i <= c.i_max; ++i) doc.records.push_back(make_record(idx(name, i), (*list)[i - 1]));
  }
  const TricolorParams p = tricolor_params(l.tail_T, l.tail_U, l.tail_V);
  doc.records.push_back(make_record("y", p.y));
  doc.records.push_back(make_record("d", p.d));
  doc.records.push_back(make_record("e", p.e));
  doc.records.push_back(make_record("a_hat", p.a_hat));
}

void add_common(CLI::App* sub, Config& c, bool family, bool i_max) {
  if (family) {
    sub->add_option("--family", c.family, "quad, hex, general, ternary, binary or tricolor")
        ->check(CLI::IsMember({"quad", "hex", "general", "ternary", "binary", "tricolor"}));
    sub->add_option("--g", c.g_list, "face weights g_1,...,g_{p+1} for --family general");
    sub->add_option("--method", c.method, "route: ladder, closed, hankel (ladders); det, lgv (hankel)");
  }
  sub->add_option("--order", c.order, "truncation order")->envname("BICOLOR_ORDER")->check(CLI::Range(1, 60));
  if (i_max) sub->add_option("--i-max", c.i_max, "largest index emitted")->check(CLI::Range(1, 40));
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", c.seed, "seed for random sample points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bicolored map generating functions as exact series"};
  app.require_subcommand(1);
  Config c;
  auto* twopoint = app.add_subcommand("twopoint", "two-point functions G_j");
  auto* ladder = app.add_subcommand("ladder", "slice or tree ladders");
  auto* hankel = app.add_subcommand("hankel", "moments and Hankel determinants");
  auto* dimers = app.add_subcommand("dimers", "hard-dimer polynomials");
  auto* tricolor = app.add_subcommand("tricolor", "three-color system");
  auto* verify = app.add_subcommand("verify", "run verification suites");
  for (auto* s : {twopoint, ladder, hankel}) add_common(s, c, true, true);
  add_common(dimers, c, false, true);
  dimers->add_option("--links", c.links, "largest segment length (default 2 i_max)")->check(CLI::Range(0, 40));
  add_common(tricolor, c, false, true);
  tricolor->add_option("--method", c.method, "ladder or closed");
  add_common(verify, c, false, false);
  verify->add_option("--suite", c.suite, "suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Document doc;
  doc.command = app.get_subcommands().front()->get_name();
  doc.family = doc.command == "tricolor" ? "tricolor" : doc.command == "dimers" || doc.command == "verify" ? "" : c.family;
  doc.order = c.order;
  doc.i_max = doc.command == "verify" ? 0 : c.i_max;
  doc.seed = c.seed;
  bool failed = false;
  try {
    if (doc.command == "twopoint") run_twopoint(c, doc);
    else if (doc.command == "ladder") run_ladder(c, doc);
    else if (doc.command == "hankel") run_hankel(c, doc);
    else if (doc.command == "dimers") run_dimers(c, doc);
    else if (doc.command == "tricolor") run_tricolor(c, doc);
    else {
      if (c.suite != "all" && std::find(suite_names().begin(), suite_names().end(), c.suite) == suite_names().end()) {
        throw UsageError("unknown suite " + c.suite);
      }
      doc.checks = run_suite(c.suite, {c.order, c.seed});
      for (const auto& r : doc.checks) failed = failed || !r.pass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  std::cout << (c.format == "json" ? to_json(doc) : to_csv(doc));
  return failed ? 1 : 0;
}
