#pragma once

#include "cfk/bruteforce.hpp"
#include "cfk/clifford.hpp"
#include "cfk/expm.hpp"
#include "cfk/genfun.hpp"
#include "cfk/jet.hpp"
#include "cfk/kernel.hpp"
#include "cfk/laplace.hpp"
#include "cfk/polyfield.hpp"
#include "cfk/quadrature.hpp"
#include "cfk/special.hpp"
#include "cfk/transform.hpp"
