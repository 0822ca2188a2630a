#pragma once

#include <stdexcept>
#include <string>

namespace qgeom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands built over different FockSpace configurations.
struct SpaceMismatchError : Error {
  using Error::Error;
};

// A state with all amplitudes zero does not describe a physical ray.
struct ZeroStateError : Error {
  using Error::Error;
};

// Affine-chart request at a point with vanishing z^[0].
struct ChartError : Error {
  using Error::Error;
};

// Hermitian input required.
struct HermiticityError : Error {
  using Error::Error;
};

// Operator polynomial too deep for the truncated space to represent faithfully.
struct TruncationError : Error {
  using Error::Error;
};

// Recursive state recovery seeded by a vanishing lowering expectation.
struct SingularSeedError : Error {
  using Error::Error;
};

// Overlapping reconstruction data disagree.
struct InconsistencyError : Error {
  using Error::Error;
};

struct ParameterError : Error {
  using Error::Error;
};

}  // namespace qgeom
