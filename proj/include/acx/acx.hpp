#pragma once

#include "acx/complexity.hpp"
#include "acx/error.hpp"
#include "acx/experiments.hpp"
#include "acx/gf2poly.hpp"
#include "acx/modular.hpp"
#include "acx/nfa.hpp"
#include "acx/oracle.hpp"
#include "acx/rational.hpp"
#include "acx/word.hpp"
