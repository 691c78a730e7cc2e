#include "doctest.h"

#include "cyccov/charsum.hpp"
