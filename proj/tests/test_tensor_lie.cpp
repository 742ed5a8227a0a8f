#include <doctest.h>
#include "rescal/cli.hpp"

TEST_CASE("placeholder test_tensor_lie") { CHECK(true); }
