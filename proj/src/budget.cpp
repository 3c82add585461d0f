#include "dimjump/budget.hpp"

#include "dimjump/errors.hpp"

#include <algorithm>

namespace dimjump {

namespace {
thread_local std::optional<std::uint64_t> g_remaining;
}

WorkBudget::WorkBudget(std::uint64_t steps) : saved_(g_remaining) {
  granted_ = saved_ ? std::min(*saved_, steps) : steps;
  g_remaining = granted_;
}

WorkBudget::~WorkBudget() {
  // work done inside the scope also counts against the enclosing one
  if (saved_) {
    std::uint64_t used = granted_ - g_remaining.value_or(0);
    g_remaining = *saved_ > used ? *saved_ - used : 0;
  } else {
    g_remaining.reset();
  }
}

void WorkBudget::charge(std::uint64_t steps) {
  if (!g_remaining) return;
  if (*g_remaining < steps) {
    *g_remaining = 0;
    throw ResourceLimit("work budget exhausted");
  }
  *g_remaining -= steps;
}

std::optional<std::uint64_t> WorkBudget::remaining() { return g_remaining; }

}  // namespace dimjump
