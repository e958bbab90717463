#pragma once

// Exact scalars: big rationals, cyclotomic numbers and cyclic-group characters.

#include "equigo/characters.hpp"
#include "equigo/cyclotomic.hpp"
#include "equigo/rational.hpp"
