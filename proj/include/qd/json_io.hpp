#pragma once

#include "qd/grothendieck.hpp"

#include <json.hpp>

#include <string>

namespace qd {

using Json = nlohmann::json;

/// Builds a group from {"kind":"named","name":...,"param":...},
/// {"kind":"permutation","degree":n,"generators":[[cycles]]} with cycles as
/// lists of 1-based points, or {"kind":"table","mul":[[...]]}.
/// Throws std::invalid_argument on malformed input.
GroupPtr group_from_json(const Json& j);

/// Builds phi : F -> G from {"G": <group>, "F": <group>,
/// "phi": {"images": [...]}}. Validates the homomorphism law; injectivity is
/// the caller's concern (GroupHom::require_injective).
GroupHom pair_from_json(const Json& j);

/// Echo of the instance: group names, orders, and the phi images.
Json context_json(const GroupHom& phi);

/// {"conductor": m, "coefficients": ["p/q", ...], "str": "a0+a1*zm..."}
Json cyclotomic_json(const Cyclotomic& c);

/// Irreducible character table: class representatives, class sizes, and one
/// row of cyclotomic values per character.
Json chartable_json(const GroupPtr& g);

/// CSV form: header "character,<class reps>"; one row per character with
/// values rendered by Cyclotomic::str().
std::string chartable_csv(const GroupPtr& g);

/// Catalog of simples: context echo plus labels
/// [{g, g_name, orbit, M_index, M_degree, degree}]; optionally the stabilizer
/// character tables keyed by orbit representative.
Json catalog_json(const IrrepCatalog& cat, bool with_tables);

/// "g:M" rendering of a label, using the element name when available.
std::string label_string(const IrrepCatalog& cat, const SimpleLabel& l);

/// One product: {"left": {...}, "right": {...}, "terms": [{g, M, mult}, ...]}.
Json fusion_json(const IrrepCatalog& cat, const FusionOutcome& out);

/// One square matrix block per fixed left label: rows = right labels,
/// columns = result labels, entries N_{ij}^k.
std::string fusion_csv(const FusionRing& ring);

/// Structure-constant tensor plus the Phi-images as ZG coefficient maps.
Json ring_json(const FusionRing& ring);

/// [{"check": ..., "pass": ...} (+ "witness" when failing), ...]
Json report_json(const Report& rep);

/// Structure constants of a Hopf algebra: basis labels and sparse
/// mult/comult/antipode triples with exact rational string coefficients.
Json hopf_json(const HopfData& a);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string dump_json(const Json& j);

} // namespace qd
