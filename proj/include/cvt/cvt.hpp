#pragma once

/// Umbrella header for the carry value transformation library.

#include "cvt/census.hpp"   // IWYU pragma: export
#include "cvt/digits.hpp"   // IWYU pragma: export
#include "cvt/dynamics.hpp" // IWYU pragma: export
#include "cvt/errors.hpp"   // IWYU pragma: export
#include "cvt/format.hpp"   // IWYU pragma: export
#include "cvt/verify.hpp"   // IWYU pragma: export
