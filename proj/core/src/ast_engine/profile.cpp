#include <algorithm>
#include <sstream>
#include <tuple>

#include "minigolo/ast_engine/exec_tree.hpp"

namespace minigolo::ast_engine {

std::string dump_profile(const ExecTree& tree) {
  std::vector<ExecTree::NodeRef> executed;
  for (const auto& ref : tree.nodes) {
    if (ref.node->exec_count() > 0) executed.push_back(ref);
  }
  std::sort(executed.begin(), executed.end(), [](const auto& a, const auto& b) {
    const auto key = [](const ExecTree::NodeRef& r) {
      return std::make_tuple(~r.node->exec_count(), r.function, r.node->pos().line, r.node->pos().column,
                             static_cast<int>(r.node->kind()));
    };
    return key(a) < key(b);
  });
  std::ostringstream out;
  for (const auto& ref : executed) {
    out << ref.node->exec_count() << "  " << to_string(ref.node->kind()) << "  "
        << tree.functions[ref.function]->name << ':' << ref.node->pos().line << ':'
        << ref.node->pos().column << "  state=" << ref.node->state() << '\n';
  }
  return out.str();
}

}  // namespace minigolo::ast_engine
