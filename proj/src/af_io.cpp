#include "vinfer/af_io.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace vinfer {

std::optional<AfFormat> af_format_from_name(std::string_view name) {
  if (name == "apx") return AfFormat::Apx;
  if (name == "tgf") return AfFormat::Tgf;
  if (name == "dot") return AfFormat::Dot;
  return std::nullopt;
}

namespace {

std::string export_apx(const ArgumentationFramework& af) {
  std::ostringstream out;
  for (const auto& id : af.arguments) out << "arg(" << id << ").\n";
  for (const auto& [from, to] : af.attacks) out << "att(" << from << "," << to << ").\n";
  return out.str();
}

std::string export_tgf(const ArgumentationFramework& af) {
  std::ostringstream out;
  for (const auto& id : af.arguments) out << id << "\n";
  out << "#\n";
  for (const auto& [from, to] : af.attacks) out << from << " " << to << "\n";
  return out.str();
}

std::string export_dot(const ArgumentationFramework& af,
                       const std::set<std::string>& blocking) {
  std::ostringstream out;
  out << "digraph af {\n";
  for (const auto& id : af.arguments) {
    out << "  \"" << id << "\"";
    if (blocking.contains(id)) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& [from, to] : af.attacks) {
    out << "  \"" << from << "\" -> \"" << to << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::string export_af(const ArgumentationFramework& af, AfFormat format,
                      const std::set<std::string>& blocking) {
  switch (format) {
    case AfFormat::Apx:
      return export_apx(af);
    case AfFormat::Tgf:
      return export_tgf(af);
    case AfFormat::Dot:
      return export_dot(af, blocking);
  }
  throw FrameworkError("unknown export format");
}

namespace {

// Splits into lines, strips CR, drops blanks; keeps 1-based line numbers.
std::vector<std::pair<int, std::string_view>> lines_of(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        eol == std::string_view::npos ? text.substr(pos) : text.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t b = line.find_first_not_of(" \t");
    std::size_t e = line.find_last_not_of(" \t");
    if (b != std::string_view::npos) out.push_back({line_no, line.substr(b, e - b + 1)});
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return out;
}

[[noreturn]] void apx_fail(int line, const std::string& msg) {
  throw FrameworkError("apx line " + std::to_string(line) + ": " + msg);
}

// Matches head(args). and returns the comma-split args, or nullopt if the
// head differs.
std::optional<std::vector<std::string>> clause(std::string_view line,
                                               std::string_view head, int line_no) {
  if (line.substr(0, head.size()) != head) return std::nullopt;
  std::string_view rest = line.substr(head.size());
  if (rest.empty() || rest.front() != '(') return std::nullopt;
  if (rest.size() < 3 || rest.substr(rest.size() - 2) != ").") {
    apx_fail(line_no, "expected '" + std::string(head) + "(...).'");
  }
  std::string_view body = rest.substr(1, rest.size() - 3);
  std::vector<std::string> args;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view piece =
        comma == std::string_view::npos ? body.substr(pos) : body.substr(pos, comma - pos);
    std::size_t b = piece.find_first_not_of(" \t");
    if (b == std::string_view::npos) apx_fail(line_no, "empty argument name");
    std::size_t e = piece.find_last_not_of(" \t");
    args.push_back(std::string(piece.substr(b, e - b + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return args;
}

}  // namespace

ArgumentationFramework parse_apx(std::string_view text) {
  ArgumentationFramework af;
  std::set<Attack> pending;
  for (const auto& [line_no, line] : lines_of(text)) {
    if (line.front() == '%') continue;
    if (auto args = clause(line, "arg", line_no)) {
      if (args->size() != 1) apx_fail(line_no, "arg takes one name");
      if (!af.arguments.insert((*args)[0]).second) {
        apx_fail(line_no, "duplicate argument '" + (*args)[0] + "'");
      }
    } else if (auto att = clause(line, "att", line_no)) {
      if (att->size() != 2) apx_fail(line_no, "att takes two names");
      pending.insert({(*att)[0], (*att)[1]});
    } else {
      apx_fail(line_no, "expected 'arg(name).' or 'att(a,b).'");
    }
  }
  for (const auto& [from, to] : pending) {
    if (!af.arguments.contains(from)) {
      throw FrameworkError("apx: attack references unknown argument '" + from + "'");
    }
    if (!af.arguments.contains(to)) {
      throw FrameworkError("apx: attack references unknown argument '" + to + "'");
    }
  }
  af.attacks = std::move(pending);
  return af;
}

ArgumentationFramework parse_tgf(std::string_view text) {
  ArgumentationFramework af;
  bool in_edges = false;
  for (const auto& [line_no, line] : lines_of(text)) {
    if (line == "#") {
      if (in_edges) {
        throw FrameworkError("tgf line " + std::to_string(line_no) + ": second '#'");
      }
      in_edges = true;
      continue;
    }
    std::istringstream words{std::string(line)};
    if (!in_edges) {
      std::string id, extra;
      words >> id >> extra;
      if (!extra.empty()) {
        throw FrameworkError("tgf line " + std::to_string(line_no) +
                             ": node lines hold a single id");
      }
      if (!af.arguments.insert(id).second) {
        throw FrameworkError("tgf line " + std::to_string(line_no) + ": duplicate node '" +
                             id + "'");
      }
    } else {
      std::string from, to, extra;
      words >> from >> to >> extra;
      if (to.empty() || !extra.empty()) {
        throw FrameworkError("tgf line " + std::to_string(line_no) +
                             ": edge lines are 'from to'");
      }
      for (const auto& endpoint : {from, to}) {
        if (!af.arguments.contains(endpoint)) {
          throw FrameworkError("tgf line " + std::to_string(line_no) +
                               ": unknown node '" + endpoint + "'");
        }
      }
      af.attacks.insert({std::move(from), std::move(to)});
    }
  }
  return af;
}

}  // namespace vinfer
