#ifndef Z2Z4XI_Z2Z4XI_HPP
#define Z2Z4XI_Z2Z4XI_HPP

#include "error.hpp"
#include "galois.hpp"
#include "mixed_code.hpp"
#include "oracle.hpp"
#include "skew_cyclic.hpp"
#include "skew_poly.hpp"
#include "text.hpp"

#endif
