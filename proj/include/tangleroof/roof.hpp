#pragma once

#include "tangleroof/curves.hpp"
#include "tangleroof/decomposition.hpp"
#include "tangleroof/reference.hpp"
