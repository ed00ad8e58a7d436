#pragma once

// Umbrella header.

#include "bijection.hpp"
#include "braid.hpp"
#include "cyclotomic.hpp"
#include "diagram.hpp"
#include "expr.hpp"
#include "images.hpp"
#include "invariants.hpp"
#include "laurent.hpp"
#include "matrix.hpp"
#include "pathmodel.hpp"
#include "rational_function.hpp"
#include "squares.hpp"
#include "tableaux.hpp"
#include "verify.hpp"
