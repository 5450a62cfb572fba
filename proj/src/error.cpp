#include "tii/error.hpp"
