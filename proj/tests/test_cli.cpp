#include <doctest.h>
#include "rescal/cli.hpp"

TEST_CASE("placeholder test_cli") { CHECK(true); }
