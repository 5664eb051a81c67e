#include "uaw/spec_io.hpp"

#include <cctype>
#include <sstream>

namespace uaw {

std::string export_spec(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "alphabet:";
  for (const auto& g : spec.alphabet->generators()) out << " " << g.name;
  out << "\n";
  for (const RewriteRule& r : spec.system.rules()) {
    out << spec.alphabet->name(r.lhs[0]) << "*" << spec.alphabet->name(r.lhs[1])
        << " -> " << r.rhs.str() << " ; kind=" << rule_kind_name(r.kind) << "\n";
  }
  return out.str();
}

AlgebraSpec import_spec(const std::string& text, AlgebraName name,
                        const std::string& display_name) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("alphabet:", 0) != 0)
    throw std::runtime_error("algebra-spec: missing alphabet header");
  std::vector<std::string> names;
  {
    std::istringstream hs(line.substr(9));
    std::string n;
    while (hs >> n) names.push_back(n);
  }
  auto alphabet = std::make_shared<Alphabet>(names);
  AlgebraSpec spec{name, display_name, alphabet, RewriteSystem(alphabet)};
  ParseContext ctx = spec.parse_context();
  ctx.resolve_name = nullptr;  // rule files use letters only

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    size_t arrow = line.find("->");
    size_t semi = line.rfind(';');
    if (arrow == std::string::npos || semi == std::string::npos || semi < arrow)
      throw std::runtime_error("algebra-spec: malformed rule line: " + line);
    std::string lhs_text = line.substr(0, arrow);
    std::string rhs_text = line.substr(arrow + 2, semi - arrow - 2);
    std::string kind_text = line.substr(semi + 1);
    size_t eq = kind_text.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("algebra-spec: missing kind tag: " + line);
    std::string kind_name = kind_text.substr(eq + 1);
    while (!kind_name.empty() && std::isspace((unsigned char)kind_name.back()))
      kind_name.pop_back();
    auto kind = rule_kind_from_name(kind_name);
    if (!kind) throw std::runtime_error("algebra-spec: unknown kind: " + kind_name);

    NCPoly lhs = parse_expr(lhs_text, ctx);
    if (lhs.term_count() != 1 || !lhs.terms().begin()->second.is_one() ||
        lhs.terms().begin()->first.size() != 2)
      throw std::runtime_error("algebra-spec: lhs is not a length-2 word: " + line);
    spec.system.add_rule(lhs.terms().begin()->first, parse_expr(rhs_text, ctx),
                         *kind);
  }
  return spec;
}

}  // namespace uaw
