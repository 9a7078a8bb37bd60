#pragma once

#include <json.hpp>
#include <string>

#include "gcat/fincat.hpp"
#include "gcat/gaction.hpp"
#include "gcat/group.hpp"
#include "gcat/sset.hpp"

namespace gcat {

using Json = nlohmann::ordered_json;

// Manifest envelope: {"schema": 1, "kind": <kind>, "payload": {...}}.
// Kinds: category, group, gaction, sset, ogdiagram, functor.
inline constexpr int kSchemaVersion = 1;

Json wrap(const std::string& kind, Json payload);

// Category files list identities implicitly: identity morphisms and their
// composition entries are dropped on write and synthesized as "id_<object>"
// on read. Categories whose identity ids differ keep an explicit
// "identities" field so that round trips are exact.
Json category_payload(const FinCat& c);
Result<FinCat> category_from_payload(const Json& payload);

Json group_payload(const FinGroup& g);
Result<FinGroup> group_from_payload(const Json& payload);

Json gaction_payload(const GCategory& x);
Result<GCategory> gaction_from_payload(const Json& payload);

Json sset_payload(const TruncSSet& x);
Result<TruncSSet> sset_from_payload(const Json& payload);

Json ogdiagram_payload(const OGDiagram& y);
Result<OGDiagram> ogdiagram_from_payload(const Json& payload);

Json functor_payload(const FinFunctor& f);
Result<FinFunctor> functor_from_payload(const Json& payload);

// File helpers; throw Error("IoError") on filesystem trouble and
// Error("BadManifest") on malformed envelopes.
Json read_manifest(const std::string& path, const std::string& expect_kind = "");
void write_manifest(const std::string& path, const std::string& kind, Json payload);

// Subgroup names as written by subgroup_name: "{e,a}", also accepted as a
// bare comma list "e,a".
Result<Subgroup> parse_subgroup(const FinGroup& g, const std::string& name);

}  // namespace gcat
