#pragma once

#include "simsel/rational.hpp"
#include "simsel/term.hpp"
#include "simsel/tptp.hpp"
#include "simsel/distance.hpp"
#include "simsel/related_set.hpp"
#include "simsel/related_distance.hpp"
#include "simsel/weights.hpp"
#include "simsel/inference.hpp"
#include "simsel/saturation.hpp"
#include "simsel/heuristic.hpp"
#include "simsel/bench.hpp"
