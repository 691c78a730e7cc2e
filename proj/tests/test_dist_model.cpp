#include "doctest.h"

#include "cyccov/dist_model.hpp"
