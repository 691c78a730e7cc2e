#include "doctest.h"

#include "cyccov/harness.hpp"
