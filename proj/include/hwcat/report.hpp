#pragma once

#include <optional>
#include <string>

#include "hwcat/highest_weight.hpp"
#include "hwcat/io.hpp"
#include "json.hpp"

namespace hwcat::report {

inline constexpr int kSchemaVersion = 1;

/// Exit codes shared by the CLI and the Python bindings.
enum Exit : int { kOk = 0, kNegative = 1, kInputError = 2, kInternalError = 3 };

/// One command's result: the structured payload, a human-readable
/// rendering and the exit code it maps to.
struct Outcome {
  nlohmann::json result = nlohmann::json::object();
  std::string text;
  int exit_code = kOk;
};

/// The order given on the command line, else the document's, else the
/// discrete order.
WeightOrder resolve_order(const io::AlgebraDocument& doc, const std::optional<std::string>& order);

Outcome check(const io::AlgebraDocument& doc, const WeightOrder& order, bool all_ideals = false);
Outcome essential_order(const io::AlgebraDocument& doc, const WeightOrder& order);
Outcome enumerate(const io::AlgebraDocument& doc);
Outcome reconstruct(const io::AlgebraDocument& doc);
Outcome tilting(const io::AlgebraDocument& doc, const WeightOrder& order);
Outcome bgg(const io::AlgebraDocument& doc, const WeightOrder& order);
/// Without `omega`, every nonempty ideal of the essential order of the
/// verified structure on `order`.
Outcome fullness(const io::AlgebraDocument& doc, const WeightOrder& order, const std::optional<std::string>& omega,
                 std::optional<std::size_t> depth);
/// Objects are written L(v), P(v), I(v), Delta(v) or nabla(v).
Outcome ext(const io::AlgebraDocument& doc, const WeightOrder& order, const std::string& from, const std::string& to,
            std::size_t depth);
Outcome weyl(const std::string& type, long p, std::size_t max_length);
Outcome indlab(std::size_t i_max, std::size_t m, const FieldCtx& ctx);

/// The versioned document around a result. Keys are sorted, so equal
/// inputs give byte-identical output.
nlohmann::json envelope(const std::string& command, const nlohmann::json& input, const Outcome& o);
std::string render(const std::string& command, const nlohmann::json& input, const Outcome& o, bool structured);

/// The outcome reported for InputError, PreconditionError and InternalError.
Outcome error_outcome(const std::string& kind, const std::string& message, int exit_code);

}  // namespace hwcat::report
