#include "minigolo/support/big_stack.hpp"

#include <pthread.h>

#include <exception>
#include <stdexcept>
#include <string>

namespace minigolo {

namespace {

struct Job {
  const std::function<void()>* body;
  std::exception_ptr error;
};

void* trampoline(void* arg) {
  auto* job = static_cast<Job*>(arg);
  try {
    (*job->body)();
  } catch (...) {
    job->error = std::current_exception();
  }
  return nullptr;
}

}  // namespace

void run_with_stack(std::size_t stack_bytes, const std::function<void()>& body) {
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, stack_bytes);
  Job job{&body, nullptr};
  pthread_t thread;
  const int rc = pthread_create(&thread, &attr, &trampoline, &job);
  pthread_attr_destroy(&attr);
  if (rc != 0) {
    // Could not reserve the stack; run inline rather than fail.
    body();
    return;
  }
  pthread_join(thread, nullptr);
  if (job.error) std::rethrow_exception(job.error);
}

}  // namespace minigolo
