// Umbrella header.
#pragma once

#include "bellsym/complex_matrix.hpp"
#include "bellsym/constraints.hpp"
#include "bellsym/derivation.hpp"
#include "bellsym/eigen.hpp"
#include "bellsym/entanglement.hpp"
#include "bellsym/errors.hpp"
#include "bellsym/io.hpp"
#include "bellsym/operators.hpp"
#include "bellsym/report.hpp"
