#include "lamred/stack.hpp"

#include <pthread.h>

#include <exception>
#include <stdexcept>

namespace lamred {

namespace {

struct Call {
  const std::function<void()>* fn;
  std::exception_ptr error;
};

void* trampoline(void* raw) {
  Call* call = static_cast<Call*>(raw);
  try {
    (*call->fn)();
  } catch (...) {
    call->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

void run_with_stack(std::size_t stack_bytes, const std::function<void()>& fn) {
  pthread_attr_t attr;
  if (pthread_attr_init(&attr) != 0)
    throw std::runtime_error("pthread_attr_init failed");
  if (stack_bytes < static_cast<std::size_t>(PTHREAD_STACK_MIN))
    stack_bytes = static_cast<std::size_t>(PTHREAD_STACK_MIN);
  if (pthread_attr_setstacksize(&attr, stack_bytes) != 0) {
    pthread_attr_destroy(&attr);
    throw std::runtime_error("pthread_attr_setstacksize failed");
  }
  Call call{&fn, nullptr};
  pthread_t tid;
  int rc = pthread_create(&tid, &attr, trampoline, &call);
  pthread_attr_destroy(&attr);
  if (rc != 0) throw std::runtime_error("pthread_create failed");
  pthread_join(tid, nullptr);
  if (call.error) std::rethrow_exception(call.error);
}

}  // namespace lamred
