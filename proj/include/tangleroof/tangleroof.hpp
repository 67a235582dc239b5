#pragma once

#include "tangleroof/catalog.hpp"
#include "tangleroof/density_matrix.hpp"
#include "tangleroof/eig.hpp"
#include "tangleroof/errors.hpp"
#include "tangleroof/family.hpp"
#include "tangleroof/geometry.hpp"
#include "tangleroof/invariants.hpp"
#include "tangleroof/pauli.hpp"
#include "tangleroof/pure_state.hpp"
#include "tangleroof/roof.hpp"
#include "tangleroof/state_io.hpp"
