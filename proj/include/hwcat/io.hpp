#pragma once

#include <optional>
#include <string>

#include "hwcat/algebra.hpp"

namespace hwcat::io {

/// An algebra document:
///   {"field": "Q" | "Fp:<p>", "vertices": [...],
///    "arrows": [{"name", "src", "tgt"}],
///    "relations": [{"terms": [{"coeff", "path": [arrow names]}]}],
///    "duality": {arrow: [{"coeff", "path"}]},   (optional)
///    "order": ["2<1", ...],                       (optional)
///    "name": "..."}                               (optional)
/// Coefficients are integers or strings such as "-3/2".
struct AlgebraDocument {
  std::string name;
  FieldCtx field = FieldCtx::rationals();
  Quiver quiver;
  std::vector<Relation> relations;
  std::optional<DualityCertificate> duality;
  std::optional<std::string> order;  // covering pairs joined by commas
  AlgebraPtr algebra;                // compiled, with the duality attached when present
};

/// Malformed documents raise InputError naming the offending location:
/// line and column for syntax errors, a JSON pointer for content errors.
/// `field` overrides the document's field.
AlgebraDocument parse_algebra_document(const std::string& text, std::optional<FieldCtx> field = {});
AlgebraDocument load_algebra_document(const std::string& path, std::optional<FieldCtx> field = {});

/// Inverse of parse_algebra_document for documents built in code.
std::string dump_algebra_document(const AlgebraDocument& doc);

}  // namespace hwcat::io
