#pragma once

#include "hermsymp/types.hpp"
#include "hermsymp/linalg.hpp"
#include "hermsymp/space.hpp"
#include "hermsymp/lagrangian.hpp"
#include "hermsymp/maslov.hpp"
#include "hermsymp/bordism.hpp"
#include "hermsymp/torus.hpp"
#include "hermsymp/knotcalc.hpp"
