// Umbrella header for the spin6 library.
#pragma once

#include "spin6/integer.hpp"
#include "spin6/lattice_forms.hpp"
#include "spin6/wall_class.hpp"
#include "spin6/chern_engine.hpp"
#include "spin6/constructions.hpp"
#include "spin6/forge.hpp"
#include "spin6/io.hpp"
#include "spin6/cli.hpp"
