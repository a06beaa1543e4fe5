#ifndef CYCLO_TESTS_GOLDEN_HPP
#define CYCLO_TESTS_GOLDEN_HPP

#include "cyclo/worked_examples.hpp"

namespace golden {
using namespace cyclo::worked;
}

#endif
