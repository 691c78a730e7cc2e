#include "doctest.h"

#include "cyccov/family.hpp"
