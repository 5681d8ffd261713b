#pragma once

#include <cstddef>
#include <functional>

namespace minigolo {

/// Runs `body` on a fresh thread with a `stack_bytes` stack and waits for it.
/// Exceptions thrown by `body` are rethrown in the caller. Deep recursion in
/// the tree-walking engine needs far more than the default 8 MiB.
void run_with_stack(std::size_t stack_bytes, const std::function<void()>& body);

inline constexpr std::size_t kEngineStackBytes = std::size_t{4} << 30;

}  // namespace minigolo
