#pragma once

#include <functional>

#include "doctest.h"

#include "coalg/error.hpp"
#include "coalg/random.hpp"

namespace coalg::testing {

/// Runs `fn` and checks that it throws an Error of the given kind.
inline void expect_error(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
    FAIL("expected " << error_name(kind) << ", nothing was thrown");
  } catch (const Error& e) {
    CHECK_MESSAGE(e.kind() == kind, "expected " << error_name(kind) << ", got " << e.what());
  }
}

/// A random functor expression of bounded depth over small constant and
/// index sets, without Pow when `deterministic`.
inline Functor random_functor(gen::Rng& rng, int depth, bool deterministic = false) {
  const auto pick = gen::below(rng, depth > 0 ? (deterministic ? 5 : 6) : 2);
  switch (pick) {
    case 0: return Functor::constant(gen::below(rng, 2) ? std::vector<std::string>{"a", "b"}
                                                        : std::vector<std::string>{"c"});
    case 1: return Functor::id();
    case 2: return Functor::prod(random_functor(rng, depth - 1, deterministic),
                                 random_functor(rng, depth - 1, deterministic));
    case 3: return Functor::sum(random_functor(rng, depth - 1, deterministic),
                                random_functor(rng, depth - 1, deterministic));
    case 4: return Functor::exp({"0", "1"}, random_functor(rng, depth - 1, deterministic));
    default: return Functor::pow(random_functor(rng, depth - 1, deterministic));
  }
}

}  // namespace coalg::testing
