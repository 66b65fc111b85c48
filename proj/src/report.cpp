#include "ncres/report.hpp"

#include "ncres/functionals.hpp"
#include "ncres/symbol.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ncres {

using nlohmann::ordered_json;

#ifndef NCRES_VERSION
#define NCRES_VERSION "0.0.0"
#endif

const char* engine_version() { return NCRES_VERSION; }

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<Symbol> expand_group(const std::string& name) {
  const Alphabet& al = Alphabet::instance();
  std::vector<Symbol> out;
  if (name == "dU" || name == "dV" || name == "dW") {
    for (int a = 1; a <= 4; ++a) {
      for (int j = 1; j <= 4; ++j) out.push_back(al.at(name + std::to_string(a) + "_" + std::to_string(j)));
    }
    return out;
  }
  if (name == "W") {
    for (int a = 1; a <= 4; ++a) out.push_back(sym::W(a));
    return out;
  }
  for (int j = 1; j <= 3; ++j) {
    if (name == al.name(sym::xi(j))) throw std::invalid_argument("cannot substitute integration variable " + name);
  }
  const auto s = al.find(name);
  if (!s) throw std::invalid_argument("unknown symbol " + name);
  out.push_back(*s);
  return out;
}

ordered_json comparison_json(const Comparison& c) {
  ordered_json j;
  j["target_ref"] = c.target_ref;
  j["engine_expr"] = c.engine_expr;
  j["paper_expr"] = c.paper_expr;
  j["verdict"] = to_string(c.verdict);
  if (c.verdict == Verdict::mismatch) j["difference"] = c.difference;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

void append_rows(ordered_json& arr, const std::vector<Comparison>& rows, bool& mismatch) {
  for (const auto& r : rows) {
    arr.push_back(comparison_json(r));
    mismatch = mismatch || r.verdict == Verdict::mismatch;
  }
}

ordered_json phi_section(Pairing p, unsigned threads, bool& mismatch) {
  const PhiReport rep = phi_total(p, threads);
  ordered_json s;
  s["kind"] = "phi";
  s["pairing"] = to_string(p);
  s["cases"] = ordered_json::array();
  for (const auto& c : rep.cases) {
    ordered_json cj;
    cj["label"] = c.spec.label;
    cj["r"] = c.spec.r;
    cj["l"] = c.spec.l;
    cj["k"] = c.spec.k;
    cj["j"] = c.spec.j;
    cj["alpha_order"] = c.spec.alpha_order;
    cj["engine"] = apply_substitution(c.engine).str();
    cj["paper"] = apply_substitution(c.paper).str();
    cj["comparisons"] = ordered_json::array();
    append_rows(cj["comparisons"], c.components, mismatch);
    s["cases"].push_back(std::move(cj));
  }
  s["totals"] = {{"engine", apply_substitution(rep.total).str()},
                 {"paper", apply_substitution(rep.paper_total).str()},
                 {"total_is_case_sum", rep.total_is_sum}};
  s["comparisons"] = ordered_json::array();
  append_rows(s["comparisons"], rep.total_components, mismatch);
  append_rows(s["comparisons"], rep.intermediates, mismatch);
  return s;
}

ordered_json catalog_section() {
  ordered_json s;
  s["kind"] = "catalog";
  s["rows"] = ordered_json::array();
  for (const auto& name : catalog_names()) {
    for (const auto& [order, m] : boundary_evaluate(catalog(name))) {
      const XiRational tr = trace(m).map_coeffs(apply_substitution).on_unit_sphere();
      s["rows"].push_back({{"symbol", name}, {"order", order}, {"boundary_trace", tr.str()}});
    }
  }
  return s;
}

}  // namespace

Substitution parse_assignments(const std::vector<std::string>& args) {
  Substitution out;
  for (const auto& arg : args) {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got " + item);
      const std::string name = trim(item.substr(0, eq));
      const GaussianRational value = parse_gaussian(trim(item.substr(eq + 1)));
      for (Symbol s : expand_group(name)) out[s] = ScalarExpr{value};
    }
  }
  return out;
}

RunResult run(const RunConfig& config) {
  static const std::vector<std::string> commands{"phi", "verify-traces", "functional", "all"};
  if (std::find(commands.begin(), commands.end(), config.command) == commands.end()) {
    throw std::invalid_argument("unknown command " + config.command);
  }
  ScopedSubstitution guard(parse_assignments(config.assignments));

  RunResult res;
  ordered_json& doc = res.document;
  doc["schema"] = 1;
  doc["version"] = engine_version();
  doc["command"] = config.command;
  ordered_json cfg;
  ordered_json pairings = ordered_json::array();
  for (Pairing p : config.pairings) pairings.push_back(to_string(p));
  cfg["pairing"] = pairings;
  cfg["set"] = config.assignments;
  cfg["omega"] = config.omega == OmegaModel::formal ? "formal" : "normal_form";
  doc["config"] = cfg;
  doc["sections"] = ordered_json::array();

  bool mismatch = false;
  const bool all = config.command == "all";
  if (all || config.command == "verify-traces") {
    ordered_json s;
    s["kind"] = "trace-identities";
    s["comparisons"] = ordered_json::array();
    append_rows(s["comparisons"], verify_trace_block(config.omega), mismatch);
    doc["sections"].push_back(std::move(s));
  }
  if (all || config.command == "phi") {
    for (Pairing p : config.pairings) doc["sections"].push_back(phi_section(p, config.threads, mismatch));
  }
  if (all || config.command == "functional") {
    ordered_json s;
    s["kind"] = "functional";
    s["comparisons"] = ordered_json::array();
    append_rows(s["comparisons"], functional_report(), mismatch);
    doc["sections"].push_back(std::move(s));
  }
  if (all) doc["sections"].push_back(catalog_section());
  res.exit_code = mismatch ? 2 : 0;
  return res;
}

namespace {

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : s + std::string(w - s.size(), ' '); }

void render_comparisons(std::ostringstream& os, const ordered_json& rows, const std::string& indent) {
  for (const auto& r : rows) {
    os << indent << pad(r["verdict"].get<std::string>(), 9) << r["target_ref"].get<std::string>() << '\n';
    os << indent << "         engine: " << r["engine_expr"].get<std::string>() << '\n';
    os << indent << "         paper:  " << r["paper_expr"].get<std::string>() << '\n';
    if (r.contains("difference")) os << indent << "         diff:   " << r["difference"].get<std::string>() << '\n';
    if (r.contains("note")) os << indent << "         note:   " << r["note"].get<std::string>() << '\n';
  }
}

}  // namespace

std::string render_text(const ordered_json& doc) {
  std::ostringstream os;
  os << "ncres " << doc["version"].get<std::string>() << "  schema " << doc["schema"].get<int>() << "  command "
     << doc["command"].get<std::string>() << '\n';
  os << "config: " << doc["config"].dump() << "\n";
  for (const auto& s : doc["sections"]) {
    const std::string kind = s["kind"].get<std::string>();
    os << "\n== " << kind;
    if (s.contains("pairing")) os << " " << s["pairing"].get<std::string>();
    os << " ==\n";
    if (s.contains("cases")) {
      for (const auto& c : s["cases"]) {
        os << "case " << pad(c["label"].get<std::string>(), 6) << "r=" << pad(std::to_string(c["r"].get<int>()), 4)
           << "l=" << pad(std::to_string(c["l"].get<int>()), 4) << "k=" << c["k"].get<int>() << " j=" << c["j"].get<int>()
           << " |alpha|=" << c["alpha_order"].get<int>() << '\n';
        os << "  engine: " << c["engine"].get<std::string>() << '\n';
        os << "  paper:  " << c["paper"].get<std::string>() << '\n';
        render_comparisons(os, c["comparisons"], "  ");
      }
    }
    if (s.contains("totals")) {
      os << "total engine: " << s["totals"]["engine"].get<std::string>() << '\n';
      os << "total paper:  " << s["totals"]["paper"].get<std::string>() << '\n';
    }
    if (s.contains("rows")) {
      for (const auto& r : s["rows"]) {
        os << pad(r["symbol"].get<std::string>(), 12) << pad(std::to_string(r["order"].get<int>()), 5)
           << r["boundary_trace"].get<std::string>() << '\n';
      }
    }
    if (s.contains("comparisons")) render_comparisons(os, s["comparisons"], "");
  }
  return os.str();
}

}  // namespace ncres
