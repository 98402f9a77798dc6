#ifndef LAMRED_STACK_HPP
#define LAMRED_STACK_HPP

#include <cstddef>
#include <functional>

namespace lamred {

// Runs fn on a worker thread with the given stack reservation and rethrows
// anything it throws. The reduction procedures recurse along term spines,
// whose length is bounded only by the beta-step fuel, so entry points give
// them room well beyond the default thread stack.
void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn);

constexpr std::size_t kBigStackBytes = 1024u * 1024u * 1024u;

}  // namespace lamred

#endif
