#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rrb/brace.hpp"
#include "rrb/enumerate.hpp"
#include "rrb/isoclinism.hpp"
#include "rrb/relrb.hpp"

namespace rrb {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

/// Sorted keys, two-space indent, arrays of scalars on one line, one line per
/// element for arrays of arrays or objects; ends with a newline.
std::string canonical_json(const Json& j);

/// Parse errors and wrong shapes raise MalformedInput.
Json parse_json(std::string_view text, std::string_view what);
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// {"degree", "generators"} when the group came from permutations, else
/// {"table"}; "label" when present.
Json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const Json& j, const Limits& limits = {});
GroupPtr read_group_file(const std::filesystem::path& path, const Limits& limits = {});

/// {"phi": one permutation of H per element of G}
Json action_to_json(const ActionTable& phi);
/// Accepts an array of permutations or the strings "trivial" / "adjoint".
ActionTable action_from_json(const Json& j, const GroupPtr& g, const GroupPtr& h);

/// Groups are written inline so that the file is self-contained.
Json relrb_to_json(const RelRB& rrb);
/// "h" and "g" are inline group objects or paths relative to `base_dir`;
/// identical references resolve to one shared group.
RelRB relrb_from_json(const Json& j, const std::filesystem::path& base_dir,
                      const Limits& limits = {});
RelRB read_relrb_file(const std::filesystem::path& path, const Limits& limits = {});

Json brace_to_json(const SkewBrace& b);
/// Both tables must keep the identity at index 0.
SkewBrace brace_from_json(const Json& j);
SkewBrace read_brace_file(const std::filesystem::path& path);

/// Rows (a, b, f_a(b), g_b(a)) in row-major order of (a, b).
Json ybe_to_json(const YBEMap& m);

Json witness_to_json(const IsoclinismWitness& w);
IsoclinismWitness witness_from_json(const Json& j);

Json report_to_json(const EnumerationReport& r, bool timing);

Json error_to_json(const Error& e);

}  // namespace rrb
