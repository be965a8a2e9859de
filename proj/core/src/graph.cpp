#include "yaps/graph.hpp"

#include <map>
#include <set>

#include "yaps/free_vars.hpp"

namespace yaps {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void collect_edges(const std::vector<Stmt>& body, const std::map<std::string, bool>& nodes,
                   std::set<std::pair<std::string, std::string>>& edges) {
  for (const auto& s : body) {
    std::visit(Overloaded{
                   [&](const Sample& smp) {
                     auto target = lvalue_base(smp.lhs);
                     if (!target || !nodes.contains(*target)) return;
                     for (const auto& source : free_vars(smp.dist)) {
                       if (nodes.contains(source)) edges.emplace(source, *target);
                     }
                   },
                   [&](const For& f) { collect_edges(f.body, nodes, edges); },
                   [&](const While& w) { collect_edges(w.body, nodes, edges); },
                   [&](const If& i) {
                     collect_edges(i.then_body, nodes, edges);
                     if (i.else_body) collect_edges(*i.else_body, nodes, edges);
                   },
                   [&](const LocalBlock& b) { collect_edges(b.body, nodes, edges); },
                   [](const auto&) {},
               },
               s.node);
  }
}

}  // namespace

std::string to_dot(const Program& program, const std::string& graph_name) {
  // name -> observed
  std::map<std::string, bool> nodes;
  auto add = [&](BlockKind kind, bool observed) {
    if (const auto* body = program.block(kind)) {
      for (const auto& s : *body) {
        if (const auto* d = std::get_if<Declare>(&s.node)) nodes.emplace(d->decl.name, observed);
      }
    }
  };
  add(BlockKind::Data, true);
  add(BlockKind::Parameters, false);
  add(BlockKind::TransformedParameters, false);

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [kind, body] : program.blocks) collect_edges(body, nodes, edges);

  std::string out = "digraph " + quote(graph_name) + " {\n";
  for (const auto& [name, observed] : nodes) {
    out += "  " + quote(name) + " [shape=" + (observed ? "doublecircle" : "circle") + "];\n";
  }
  for (const auto& [from, to] : edges) out += "  " + quote(from) + " -> " + quote(to) + ";\n";
  return out + "}\n";
}

}  // namespace yaps
