#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include "doctest.h"
