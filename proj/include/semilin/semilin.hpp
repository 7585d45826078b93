#pragma once

// Umbrella header for the semiring linear-algebra library (everything except the CLI).

#include "semilin/element.hpp"
#include "semilin/error.hpp"
#include "semilin/graph.hpp"
#include "semilin/interval.hpp"
#include "semilin/io.hpp"
#include "semilin/iterative.hpp"
#include "semilin/ldm.hpp"
#include "semilin/matrix.hpp"
#include "semilin/op_count.hpp"
#include "semilin/precision.hpp"
#include "semilin/semiring.hpp"
