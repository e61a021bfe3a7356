#include "hwcat/report.hpp"

#include <regex>
#include <set>
#include <sstream>

#include "hwcat/homology.hpp"
#include "hwcat/indlab.hpp"
#include "hwcat/order_engine.hpp"
#include "hwcat/weyl.hpp"

namespace hwcat::report {

namespace {

using nlohmann::json;

const std::vector<std::string>& labels_of(const io::AlgebraDocument& doc) { return doc.algebra->vertex_labels(); }

json covering(const WeightOrder& o, const std::vector<std::string>& labels) {
  json out = json::array();
  for (auto [a, b] : o.covering_pairs()) out.push_back(labels[a] + "<" + labels[b]);
  return out;
}

std::string order_text(const WeightOrder& o, const std::vector<std::string>& labels) {
  auto s = o.to_string(labels);
  return s.empty() ? "(discrete)" : s;
}

json mask_labels(VertexMask m, const std::vector<std::string>& labels) {
  json out = json::array();
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (in_mask(m, v)) out.push_back(labels[v]);
  return out;
}

json weight_list(const std::vector<std::size_t>& ws, const std::vector<std::string>& labels) {
  json out = json::array();
  for (auto w : ws) out.push_back(labels[w]);
  return out;
}

json by_label(const std::vector<std::size_t>& values, const std::vector<std::string>& labels) {
  json out = json::object();
  for (std::size_t v = 0; v < values.size(); ++v) out[labels[v]] = values[v];
  return out;
}

std::string witness(const Verdict& v, const std::vector<std::string>& labels) {
  std::string s = "(" + v.axiom + "): ";
  if (!v.note.empty()) return s + v.note;
  s += "weight " + labels[v.weight];
  if (v.other) s += ", other " + labels[*v.other];
  if (v.degree) s += ", degree " + std::to_string(*v.degree);
  if (v.found) s += ", found " + std::to_string(*v.found);
  if (v.expected) s += ", expected " + std::to_string(*v.expected);
  return s;
}

json verdict_json(const Verdict& v, const std::vector<std::string>& labels) {
  json j{{"axiom", v.axiom}, {"weight", labels[v.weight]}, {"pass", v.pass}};
  if (v.other) j["other"] = labels[*v.other];
  if (v.degree) j["degree"] = *v.degree;
  if (v.found) j["found"] = *v.found;
  if (v.expected) j["expected"] = *v.expected;
  if (!v.note.empty()) j["note"] = v.note;
  if (!v.pass) j["witness"] = witness(v, labels);
  return j;
}

json suite_json(const AxiomReport& r, const std::vector<std::string>& labels) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_json(v, labels));
  return {{"suite", r.suite}, {"pass", r.pass()}, {"verdicts", verdicts}};
}

void suite_text(std::ostringstream& os, const AxiomReport& r, const std::vector<std::string>& labels) {
  os << r.suite << " axioms: " << (r.pass() ? "pass" : "FAIL") << "\n";
  for (const auto& v : r.failures()) os << "  " << witness(v, labels) << "\n";
}

// The verified structure, or nothing with `o` set to the negative verdict.
std::optional<HwStructure> require_structure(HwEngine& eng, const io::AlgebraDocument& doc, const WeightOrder& order, Outcome& o) {
  if (auto hw = verified_structure(eng, order)) return hw;
  auto rep = check_dagger_axioms(eng, order);
  o.exit_code = kNegative;
  o.result["verdict"] = "the order does not give a highest weight structure";
  o.result["dagger"] = suite_json(rep, labels_of(doc));
  std::ostringstream os;
  os << "order " << order_text(order, labels_of(doc)) << " is not a highest weight structure\n";
  suite_text(os, rep, labels_of(doc));
  o.text = os.str();
  return std::nullopt;
}

template <class F>
Outcome with_structure(const io::AlgebraDocument& doc, const WeightOrder& order, F body) {
  Outcome o;
  HwEngine eng(doc.algebra);
  if (auto hw = require_structure(eng, doc, order, o)) body(eng, *hw, o);
  return o;
}

ModuleRep parse_object(HwEngine& eng, const WeightOrder& order, const std::string& text) {
  static const std::regex re(R"(^\s*(L|P|I|Delta|nabla)\((.+)\)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw InputError("object \"" + text + "\": expected L(v), P(v), I(v), Delta(v) or nabla(v)");
  const std::size_t v = eng.algebra()->vertex_index(m[2].str());
  const auto kind = m[1].str();
  if (kind == "L") return eng.simple(v);
  if (kind == "P") return eng.projective(v);
  if (kind == "I") return eng.injective(v);
  if (kind == "Delta") return eng.standard(v, order.down(v));
  return eng.costandard(v, order.down(v));
}

}  // namespace

WeightOrder resolve_order(const io::AlgebraDocument& doc, const std::optional<std::string>& order) {
  if (order) return WeightOrder::parse(*doc.algebra, *order);
  if (doc.order) return WeightOrder::parse(*doc.algebra, *doc.order);
  return WeightOrder(doc.algebra->num_vertices());
}

Outcome check(const io::AlgebraDocument& doc, const WeightOrder& order, bool all_ideals) {
  HwEngine eng(doc.algebra);
  const auto& labels = labels_of(doc);
  auto star = check_star_axioms(eng, order);
  auto dagger = check_dagger_axioms(eng, order, all_ideals && eng.size() <= 4);
  if (star.pass() != dagger.pass())
    throw InternalError("the star and dagger axiom suites disagree on order " + order_text(order, labels));
  Outcome o;
  o.result = {{"order", covering(order, labels)},
              {"star", suite_json(star, labels)},
              {"dagger", suite_json(dagger, labels)},
              {"highest_weight", star.pass()}};
  std::ostringstream os;
  os << "order " << order_text(order, labels) << "\n";
  suite_text(os, star, labels);
  suite_text(os, dagger, labels);
  os << (star.pass() ? "highest weight structure" : "not a highest weight structure") << "\n";
  o.text = os.str();
  o.exit_code = star.pass() ? kOk : kNegative;
  return o;
}

Outcome essential_order(const io::AlgebraDocument& doc, const WeightOrder& order) {
  return with_structure(doc, order, [&](HwEngine&, const HwStructure& hw, Outcome& o) {
    const auto& labels = labels_of(doc);
    auto e = hwcat::essential_order(hw);
    std::vector<std::size_t> sd, cd;
    for (const auto& m : hw.standards) sd.push_back(m.total_dim());
    for (const auto& m : hw.costandards) cd.push_back(m.total_dim());
    o.result = {{"order", covering(order, labels)},
                {"essential", covering(e, labels)},
                {"standard_dims", by_label(sd, labels)},
                {"costandard_dims", by_label(cd, labels)}};
    o.text = "essential order: " + order_text(e, labels) + "\n";
  });
}

Outcome enumerate(const io::AlgebraDocument& doc) {
  HwEngine eng(doc.algebra);
  const auto& labels = labels_of(doc);
  auto en = enumerate_hw_structures(eng);
  Outcome o;
  json classes = json::array();
  std::ostringstream os;
  os << en.total_orders_checked << " total orders checked, " << en.classes.size() << " structure(s)\n";
  for (const auto& c : en.classes) {
    classes.push_back({{"essential", covering(c.essential, labels)},
                       {"representative", weight_list(c.representative, labels)},
                       {"passing_total_orders", c.passing_total_orders}});
    os << "  essential order " << order_text(c.essential, labels) << " (" << c.passing_total_orders << " total orders)\n";
  }
  o.result = {{"total_orders_checked", en.total_orders_checked}, {"classes", classes}, {"count", en.classes.size()}};
  o.text = os.str();
  o.exit_code = en.classes.empty() ? kNegative : kOk;
  return o;
}

namespace {

json steps_json(const std::vector<PeelStep>& steps, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& s : steps) {
    json ext2 = json::object();
    for (auto [w, d] : s.self_ext2) ext2[labels[w]] = d;
    out.push_back({{"remaining", mask_labels(s.remaining, labels)},
                   {"self_ext2", ext2},
                   {"chosen", s.chosen ? json(labels[*s.chosen]) : json(nullptr)}});
  }
  return out;
}

void steps_text(std::ostringstream& os, const std::vector<PeelStep>& steps, const std::vector<std::string>& labels) {
  for (const auto& s : steps) {
    os << "  remaining {";
    bool first = true;
    for (std::size_t v = 0; v < labels.size(); ++v)
      if (in_mask(s.remaining, v)) os << (first ? "" : ",") << labels[v], first = false;
    os << "}:";
    for (auto [w, d] : s.self_ext2) os << " Ext^2(L(" << labels[w] << "),L(" << labels[w] << "))=" << d;
    os << (s.chosen ? " -> peel " + labels[*s.chosen] : std::string(" -> stuck")) << "\n";
  }
}

}  // namespace

Outcome reconstruct(const io::AlgebraDocument& doc) {
  const auto& labels = labels_of(doc);
  Outcome o;
  std::ostringstream os;
  try {
    auto r = reconstruct_unique_order(doc.algebra);
    o.result = {{"essential", covering(r.order, labels)},
                {"peel", weight_list(r.peel, labels)},
                {"steps", steps_json(r.steps, labels)},
                {"peels_explored", r.peels_explored}};
    os << "essential order: " << order_text(r.order, labels) << "\n";
    steps_text(os, r.steps, labels);
  } catch (const NotHighestWeight& e) {
    o.exit_code = kNegative;
    o.result = {{"verdict", "not a highest weight category"}, {"message", e.what()}, {"steps", steps_json(e.steps(), labels)}};
    os << e.what() << "\n";
    steps_text(os, e.steps(), labels);
  }
  o.text = os.str();
  return o;
}

Outcome tilting(const io::AlgebraDocument& doc, const WeightOrder& order) {
  return with_structure(doc, order, [&](HwEngine& eng, const HwStructure& hw, Outcome& o) {
    const auto& labels = labels_of(doc);
    std::vector<TiltingModule> ts;
    json mods = json::array();
    std::ostringstream os;
    auto flag_list = [&](const Flag& f) {
      std::vector<std::size_t> ws;
      for (const auto& s : f.sections)
        for (std::size_t k = 0; k < s.multiplicity; ++k) ws.push_back(s.weight);
      return ws;
    };
    for (std::size_t lam = 0; lam < eng.size(); ++lam) {
      auto t = tilting_module(eng, hw, lam);
      mods.push_back({{"weight", labels[lam]},
                      {"dim", t.module.total_dim()},
                      {"standard_multiplicities", by_label(t.standard_multiplicities, labels)},
                      {"costandard_multiplicities", by_label(t.costandard_multiplicities, labels)},
                      {"standard_flag", weight_list(flag_list(t.standard_flag), labels)},
                      {"costandard_flag", weight_list(flag_list(t.costandard_flag), labels)},
                      {"extensions", t.extensions}});
      os << "T(" << labels[lam] << "): dim " << t.module.total_dim() << ", " << t.extensions << " universal extension(s)\n";
      ts.push_back(std::move(t));
    }
    auto to = tilting_order(ts, eng.size());
    auto eo = hwcat::essential_order(hw);
    o.result = {{"tilting_modules", mods},
                {"tilting_order", covering(to, labels)},
                {"essential_order", covering(eo, labels)},
                {"orders_agree", to == eo}};
    os << "tilting order: " << order_text(to, labels) << "\nessential order: " << order_text(eo, labels) << "\n";
    o.text = os.str();
    o.exit_code = to == eo ? kOk : kNegative;
  });
}

Outcome bgg(const io::AlgebraDocument& doc, const WeightOrder& order) {
  return with_structure(doc, order, [&](HwEngine& eng, const HwStructure& hw, Outcome& o) {
    const auto& labels = labels_of(doc);
    json rows = json::array();
    bool all = true;
    std::ostringstream os;
    for (const auto& r : bgg_check(eng, hw)) {
      json row{{"lambda", labels[r.lambda]}, {"mu", labels[r.mu]}, {"decomposition", r.decomposition}, {"equal", r.equal()}};
      row["flag_multiplicity"] = r.flag_multiplicity ? json(*r.flag_multiplicity) : json(nullptr);
      rows.push_back(row);
      all = all && r.equal();
      os << "(I(" << labels[r.lambda] << "):nabla(" << labels[r.mu] << ")) = "
         << (r.flag_multiplicity ? std::to_string(*r.flag_multiplicity) : std::string("none")) << ", [Delta(" << labels[r.mu]
         << "):L(" << labels[r.lambda] << ")] = " << r.decomposition << (r.equal() ? "" : "  MISMATCH") << "\n";
    }
    o.result = {{"rows", rows}, {"all_equal", all}};
    o.text = os.str();
    o.exit_code = all ? kOk : kNegative;
  });
}

Outcome fullness(const io::AlgebraDocument& doc, const WeightOrder& order, const std::optional<std::string>& omega,
                 std::optional<std::size_t> depth) {
  const auto& labels = labels_of(doc);
  std::vector<VertexMask> omegas;
  std::optional<WeightOrder> essential;
  if (omega) {
    VertexMask m = 0;
    std::stringstream ss(*omega);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (!item.empty()) m |= bit(doc.algebra->vertex_index(item));
    }
    if (!m) throw InputError("--omega names no weights");
    omegas.push_back(m);
  }
  Outcome o;
  if (!omega) {
    HwEngine eng(doc.algebra);
    auto hw = require_structure(eng, doc, order, o);
    if (!hw) return o;
    essential = hwcat::essential_order(*hw);
    for (VertexMask m = 1; m <= doc.algebra->all_vertices(); ++m)
      if (essential->is_ideal(m)) omegas.push_back(m);
  }
  json reports = json::array();
  bool all = true;
  std::ostringstream os;
  for (auto m : omegas) {
    auto r = extension_fullness_report(doc.algebra, m, depth);
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"source", labels[row.source]},
                      {"target", labels[row.target]},
                      {"degree", row.degree},
                      {"dim_ambient", row.dim_ambient},
                      {"dim_sub", row.dim_sub},
                      {"equal", row.equal()}});
      if (!row.equal())
        os << "  Ext^" << row.degree << "(L(" << labels[row.source] << "),L(" << labels[row.target] << ")): " << row.dim_ambient
           << " over A, " << row.dim_sub << " over the quotient\n";
    }
    json rep{{"omega", mask_labels(m, labels)}, {"max_degree", r.max_degree}, {"rows", rows}, {"all_equal", r.all_equal()}};
    bool is_ideal = essential ? true : order.is_ideal(m);
    rep["omega_is_ideal"] = is_ideal;
    reports.push_back(rep);
    os << "omega {";
    bool first = true;
    for (std::size_t v = 0; v < labels.size(); ++v)
      if (in_mask(m, v)) os << (first ? "" : ",") << labels[v], first = false;
    os << "}" << (is_ideal ? " (ideal)" : " (not an ideal)") << ": " << (r.all_equal() ? "extension full" : "NOT extension full")
       << " up to degree " << r.max_degree << "\n";
    all = all && r.all_equal();
  }
  o.result = {{"reports", reports}, {"all_equal", all}};
  if (essential) o.result["essential"] = covering(*essential, labels);
  o.text = os.str();
  o.exit_code = all ? kOk : kNegative;
  return o;
}

Outcome ext(const io::AlgebraDocument& doc, const WeightOrder& order, const std::string& from, const std::string& to,
            std::size_t depth) {
  HwEngine eng(doc.algebra);
  auto m = parse_object(eng, order, from);
  auto n = parse_object(eng, order, to);
  auto res = min_proj_resolution(m, depth + 1);
  json dims = json::array();
  std::ostringstream os;
  for (std::size_t d = 0; d <= depth; ++d) {
    auto e = ext_dim(res, n, d);
    dims.push_back(e);
    os << "Ext^" << d << "(" << from << ", " << to << ") = " << e << "\n";
  }
  Outcome o;
  o.result = {{"from", from}, {"to", to}, {"order", covering(order, labels_of(doc))}, {"dims", dims}};
  o.text = os.str();
  return o;
}

Outcome weyl(const std::string& type, long p, std::size_t max_length) {
  auto rd = weyl::RootData::parse(type);
  auto rep = weyl::linkage_report(rd, p, max_length);
  json reps = json::array();
  for (std::size_t i = 0; i < rep.reps.size(); ++i)
    reps.push_back({{"index", i}, {"length", rep.reps[i].length}, {"word", rep.reps[i].word}, {"weight", rep.reps[i].weight}});
  auto pair_json = [](const std::vector<weyl::PairVerdict>& ps) {
    json out = json::array();
    for (const auto& v : ps) out.push_back({{"x", v.x}, {"y", v.y}, {"bruhat", v.bruhat}, {"up", v.up}});
    return out;
  };
  // A chain relates every pair of representatives one way or the other.
  auto is_chain = [&](bool weyl::PairVerdict::* rel) {
    std::set<std::pair<std::size_t, std::size_t>> related;
    for (const auto& v : rep.pairs)
      if (v.*rel) related.insert({std::min(v.x, v.y), std::max(v.x, v.y)});
    const std::size_t n = rep.reps.size();
    return related.size() == n * (n - 1) / 2;
  };
  Outcome o;
  std::vector<weyl::Weight> weights;
  for (const auto& r : rep.reps) weights.push_back(r.weight);
  o.result = {{"type", rep.type},
              {"p", rep.p},
              {"coxeter_number", rep.coxeter_number},
              {"max_length", rep.max_length},
              {"p_exceeds_h", rep.p_exceeds_h()},
              {"representatives", reps},
              {"pairs", pair_json(rep.pairs)},
              {"implication_failures", pair_json(rep.implication_failures)},
              {"mismatches", pair_json(rep.mismatches)},
              {"summary",
               {{"weights", weights},
                {"count", rep.reps.size()},
                {"weights_distinct_dominant", rep.weights_distinct_dominant},
                {"bruhat_is_chain", is_chain(&weyl::PairVerdict::bruhat)},
                {"up_is_chain", is_chain(&weyl::PairVerdict::up)},
                {"bruhat_implies_up", rep.implication_failures.empty()},
                {"coincidence", rep.p_exceeds_h() ? json(rep.mismatches.empty()) : json("not asserted: p <= h")}}}};
  std::ostringstream os;
  os << rep.type << ", p = " << p << ", h = " << rep.coxeter_number << ", lengths <= " << max_length << ": " << rep.reps.size()
     << " representatives\n";
  for (std::size_t i = 0; i < rep.reps.size(); ++i) {
    os << "  #" << i << " length " << rep.reps[i].length << " weight " << weyl::weight_to_string(rep.reps[i].weight) << " word ";
    for (auto s : rep.reps[i].word) os << "s" << s;
    os << "\n";
  }
  os << "Bruhat implies up: " << (rep.implication_failures.empty() ? "yes" : "NO") << " ("
     << rep.implication_failures.size() << " exception(s))\n";
  if (rep.p_exceeds_h())
    os << "Bruhat equals up: " << (rep.mismatches.empty() ? "yes" : "NO") << " (" << rep.mismatches.size() << " mismatch(es))\n";
  else
    os << "p <= h: coincidence not asserted, " << rep.mismatches.size() << " mismatch(es) recorded\n";
  for (const auto& v : rep.mismatches)
    os << "  #" << v.x << " vs #" << v.y << ": bruhat " << v.bruhat << ", up " << v.up << "\n";
  o.text = os.str();
  o.exit_code = rep.pass() ? kOk : kNegative;
  return o;
}

Outcome indlab(std::size_t i_max, std::size_t m, const FieldCtx& ctx) {
  auto sys = indlab::inverse_system_report(i_max, m, ctx);
  json levels = json::array();
  std::ostringstream os;
  os << "field " << ctx.to_string() << ", V cut to " << m << " coordinates\n" << indlab::InverseSystemReport::scope_note() << "\n";
  bool ok = true;
  for (std::size_t i = 1; i <= i_max; ++i) {
    auto e = indlab::ext1_nilpotent(i, indlab::first_summands(m), ctx);
    const std::size_t k = sys.k_dims[i - 1], limit = i * (i - 1) / 2;
    const bool agree = e.value() == sys.ext_dims[i - 1];
    ok = ok && agree && (m + 1 < i || k == limit);
    levels.push_back({{"i", i},
                      {"k_dim", k},
                      {"k_limit", limit},
                      {"ext_by_resolution", e.by_resolution},
                      {"ext_by_extensions", e.by_extensions},
                      {"ext_from_row", sys.ext_dims[i - 1]},
                      {"truncation", e.truncation},
                      {"ext_agree", agree}});
    os << "  i=" << i << ": dim K=" << k << " (limit " << limit << "), Ext^1(M_i,N_m)=" << e.value() << " by resolution, "
       << e.by_extensions << " by extensions, " << sys.ext_dims[i - 1] << " from the row\n";
  }
  json restrictions = json::array();
  for (const auto& r : sys.rows) {
    restrictions.push_back({{"i", r.i},
                            {"k_source", r.k_source},
                            {"k_target", r.k_target},
                            {"k_rank", r.k_rank},
                            {"k_surjective", r.k_surjective()},
                            {"ext_source", r.ext_source},
                            {"ext_target", r.ext_target},
                            {"ext_rank", r.ext_rank},
                            {"ext_kernel", r.ext_kernel()},
                            {"ext_surjective", r.ext_surjective()}});
    os << "  K_" << r.i + 1 << " -> K_" << r.i << ": rank " << r.k_rank << " of " << r.k_target
       << (r.k_surjective() ? " (onto)" : " (NOT onto)") << "; Ext kernel " << r.ext_kernel() << "\n";
  }
  ok = ok && sys.all_surjective();
  Outcome o;
  o.result = {{"field", ctx.to_string()},
              {"i_max", i_max},
              {"m", m},
              {"scope", indlab::InverseSystemReport::scope_note()},
              {"levels", levels},
              {"restrictions", restrictions},
              {"all_surjective", sys.all_surjective()}};
  o.text = os.str();
  o.exit_code = ok ? kOk : kNegative;
  return o;
}

json envelope(const std::string& command, const json& input, const Outcome& o) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"input", input}, {"exit_code", o.exit_code}, {"result", o.result}};
}

std::string render(const std::string& command, const json& input, const Outcome& o, bool structured) {
  if (structured) return envelope(command, input, o).dump(2) + "\n";
  return o.text;
}

Outcome error_outcome(const std::string& kind, const std::string& message, int exit_code) {
  Outcome o;
  o.exit_code = exit_code;
  o.result = {{"error", {{"kind", kind}, {"message", message}}}};
  o.text = kind + ": " + message + "\n";
  return o;
}

}  // namespace hwcat::report
