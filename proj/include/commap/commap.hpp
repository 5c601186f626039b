#pragma once

#include "commap/algebra.hpp"
#include "commap/catalog.hpp"
#include "commap/diagram.hpp"
#include "commap/errors.hpp"
#include "commap/flatten.hpp"
#include "commap/io.hpp"
#include "commap/linalg.hpp"
#include "commap/lp.hpp"
#include "commap/realizations.hpp"
#include "commap/selftest.hpp"
#include "commap/solver.hpp"
#include "commap/structure.hpp"
