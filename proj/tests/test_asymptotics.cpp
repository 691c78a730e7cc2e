#include "doctest.h"

#include "cyccov/asymptotics.hpp"
