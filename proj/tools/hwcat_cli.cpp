#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hwcat/corpus.hpp"
#include "hwcat/io.hpp"
#include "hwcat/order_engine.hpp"
#include "hwcat/report.hpp"

using namespace hwcat;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::optional<std::string> field;
  std::optional<std::string> order;
  std::optional<std::size_t> depth;
  std::optional<std::uint64_t> seed;
  bool dual = false;
  std::string format = "text";
  bool all_ideals = false;
  std::optional<std::string> omega;
  std::string from, to;
  std::string type = "A2";
  long p = 5;
  std::size_t maxlen = 6;
  std::size_t imax = 8;
  std::size_t m = 10;
};

std::optional<FieldCtx> field_override(const Options& o) {
  if (!o.field) return std::nullopt;
  return FieldCtx::parse(*o.field);
}

io::AlgebraDocument load(const Options& o) {
  if (o.seed) {
    const auto ctx = field_override(o).value_or(FieldCtx::rationals());
    auto r = o.dual ? corpus::random_dual_algebra(*o.seed, ctx) : corpus::random_algebra(*o.seed, ctx);
    io::AlgebraDocument doc;
    doc.name = (o.dual ? "random-dual-" : "random-") + std::to_string(*o.seed);
    doc.field = ctx;
    doc.quiver = r.quiver;
    doc.relations = r.relations;
    doc.algebra = r.algebra;
    return doc;
  }
  if (o.input.empty()) throw InputError("an algebra file or --seed is required");
  return io::load_algebra_document(o.input, field_override(o));
}

json input_json(const std::string& command, const Options& o) {
  json in{{"command", command}};
  if (!o.input.empty()) in["file"] = o.input;
  if (o.seed) in["seed"] = *o.seed, in["dual"] = o.dual;
  if (o.field) in["field"] = *o.field;
  if (o.order) in["order"] = *o.order;
  if (o.depth) in["depth"] = *o.depth;
  if (command == "check") in["all_ideals"] = o.all_ideals;
  if (command == "fullness" && o.omega) in["omega"] = *o.omega;
  if (command == "ext") in["from"] = o.from, in["to"] = o.to;
  if (command == "weyl") in["type"] = o.type, in["p"] = o.p, in["maxlen"] = o.maxlen;
  if (command == "indlab") in["imax"] = o.imax, in["m"] = o.m;
  return in;
}

report::Outcome dispatch(const std::string& command, const Options& o) {
  if (command == "weyl") return report::weyl(o.type, o.p, o.maxlen);
  if (command == "indlab") return report::indlab(o.imax, o.m, field_override(o).value_or(FieldCtx::prime(101)));
  auto doc = load(o);
  if (command == "enumerate") return report::enumerate(doc);
  if (command == "reconstruct") return report::reconstruct(doc);
  auto order = report::resolve_order(doc, o.order);
  if (command == "check") return report::check(doc, order, o.all_ideals);
  if (command == "essential-order") return report::essential_order(doc, order);
  if (command == "tilting") return report::tilting(doc, order);
  if (command == "bgg") return report::bgg(doc, order);
  if (command == "fullness") return report::fullness(doc, order, o.omega, o.depth);
  if (command == "ext") return report::ext(doc, order, o.from, o.to, o.depth.value_or(3));
  throw InputError("unknown command " + command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Highest weight structures on bound quiver algebras"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool algebra) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->add_option("--field", o.field, "Ground field override: Q or Fp:<p>");
    if (!algebra) return;
    sub->add_option("input", o.input, "Algebra document (JSON)");
    sub->add_option("--seed", o.seed, "Use the seeded random algebra instead of a file");
    sub->add_flag("--dual", o.dual, "With --seed: draw an algebra carrying a duality");
    sub->add_option("--order", o.order, "Weight order as covering pairs, e.g. \"2<1,3<1\"");
    sub->add_option("--depth", o.depth, "Ext degree bound");
  };
  auto* check = app.add_subcommand("check", "Evaluate both axiom suites on an order");
  common(check, true);
  check->add_flag("--all-ideals", o.all_ideals, "Also test injectivity on every ideal (at most 4 weights)");
  common(app.add_subcommand("essential-order", "Essential order of a highest weight structure"), true);
  common(app.add_subcommand("enumerate", "All highest weight structures up to equivalence"), true);
  common(app.add_subcommand("reconstruct", "Recover the unique structure from Ext^2 data (needs a duality)"), true);
  common(app.add_subcommand("tilting", "Tilting modules and the tilting order"), true);
  common(app.add_subcommand("bgg", "BGG reciprocity table"), true);
  auto* full = app.add_subcommand("fullness", "Extension fullness of Serre subcategories");
  common(full, true);
  full->add_option("--omega", o.omega, "Comma separated weights; default: every ideal of the essential order");
  auto* ext = app.add_subcommand("ext", "Ext dimensions between two objects");
  common(ext, true);
  ext->add_option("--from", o.from, "L(v), P(v), I(v), Delta(v) or nabla(v)")->required();
  ext->add_option("--to", o.to, "L(v), P(v), I(v), Delta(v) or nabla(v)")->required();
  auto* weyl = app.add_subcommand("weyl", "Bruhat and up-arrow orders on minimal coset representatives");
  common(weyl, false);
  weyl->add_option("--type", o.type, "A1 or A2");
  weyl->add_option("--p", o.p, "Dilation p >= 2");
  weyl->add_option("--maxlen", o.maxlen, "Length bound (at most 12)");
  auto* ind = app.add_subcommand("indlab", "Ext^1 and K_i for Jordan modules over k[theta]");
  common(ind, false);
  ind->add_option("--imax", o.imax, "Largest Jordan block");
  ind->add_option("--m", o.m, "Number of summands of N");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return report::kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const bool structured = o.format == "structured";
  report::Outcome out;
  try {
    out = dispatch(command, o);
  } catch (const NotHighestWeight& e) {
    out = report::error_outcome("not a highest weight category", e.what(), report::kNegative);
  } catch (const InputError& e) {
    out = report::error_outcome("input error", e.what(), report::kInputError);
  } catch (const PreconditionError& e) {
    out = report::error_outcome("precondition", e.what(), report::kInputError);
  } catch (const InternalError& e) {
    out = report::error_outcome("internal error", e.what(), report::kInternalError);
  }
  const auto text = report::render(command, input_json(command, o), out, structured);
  (out.exit_code == report::kOk || out.exit_code == report::kNegative || structured ? std::cout : std::cerr) << text;
  return out.exit_code;
}
