/*
 * Copyright 2026 the oddpair authors
 * License: Apache License 2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace oddpair {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad call arguments: out-of-range vertex, self-loop, malformed input value.
struct InvalidArgument : Error {
    using Error::Error;
};

// Syntactically invalid graph6 text.
struct ParseError : Error {
    using Error::Error;
};

// Input exceeds a configured size cap; message names the cap.
struct CapExceeded : Error {
    using Error::Error;
};

// A documented operation precondition does not hold (non-clique input,
// adjacent contraction pair, pair not odd, ...). Message names the clause.
struct PreconditionFailed : Error {
    using Error::Error;
};

}  // namespace oddpair
