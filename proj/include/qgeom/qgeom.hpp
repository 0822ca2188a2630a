#pragma once

// Geometry of quantum states on a truncated Fock space: generator functions
// on the full and projective state spaces, Fubini-Study tensors and their
// Killing reduction, Hamiltonian fields, the noncommutative-coordinate
// calculus of the observable algebra, pull-back Jacobians, symplectic flows,
// and covector-based state recovery.

#include "qgeom/errors.hpp"
#include "qgeom/fock.hpp"
#include "qgeom/operators.hpp"
#include "qgeom/kahler.hpp"
#include "qgeom/geometry.hpp"
#include "qgeom/fields.hpp"
#include "qgeom/nc.hpp"
#include "qgeom/pullback.hpp"
#include "qgeom/flow.hpp"
#include "qgeom/reconstruct.hpp"
#include "qgeom/sampling.hpp"
