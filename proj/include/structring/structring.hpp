#pragma once

// Umbrella header.

#include "structring/bigint.hpp"
#include "structring/error.hpp"
#include "structring/inverse.hpp"
#include "structring/io.hpp"
#include "structring/preorder.hpp"
#include "structring/ring_units.hpp"
#include "structring/rings.hpp"
#include "structring/structmat.hpp"
#include "structring/harness/demo.hpp"
#include "structring/harness/generators.hpp"
#include "structring/harness/random.hpp"
#include "structring/harness/suites.hpp"
