#pragma once

// Umbrella header: the whole library.

#include "numeric.hpp"
#include "errors.hpp"
#include "cartan.hpp"
#include "weyl.hpp"
#include "rootpoly.hpp"
#include "schubert.hpp"
#include "context.hpp"
#include "levi.hpp"
#include "cone.hpp"
#include "sweep.hpp"
#include "serialize.hpp"
