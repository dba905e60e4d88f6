#pragma once

#include "fredkin/colored.hpp"
#include "fredkin/colored_model.hpp"
#include "fredkin/common.hpp"
#include "fredkin/counting.hpp"
#include "fredkin/entanglement.hpp"
#include "fredkin/enumeration.hpp"
#include "fredkin/model.hpp"
#include "fredkin/operator.hpp"
#include "fredkin/orbits.hpp"
#include "fredkin/solver.hpp"
#include "fredkin/states.hpp"
#include "fredkin/word.hpp"
