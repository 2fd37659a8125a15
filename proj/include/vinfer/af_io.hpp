#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "vinfer/argumentation.hpp"
#include "vinfer/scenario_io.hpp"

namespace vinfer {

enum class AfFormat { Apx, Tgf, Dot };

std::optional<AfFormat> af_format_from_name(std::string_view name);

/// Exports a framework. APX: "arg(id)." lines then "att(a,b)." lines, both
/// lexicographic. TGF: ids, "#", "a b" edge lines. DOT: a digraph in which
/// ids listed in `blocking` get a dashed border.
std::string export_af(const ArgumentationFramework& af, AfFormat format,
                      const std::set<std::string>& blocking = {});

/// Parses "arg(name)." / "att(a,b)." lines ('%' comments allowed).
ArgumentationFramework parse_apx(std::string_view text);

/// Parses a node-id list, "#", then edge lines.
ArgumentationFramework parse_tgf(std::string_view text);

}  // namespace vinfer
