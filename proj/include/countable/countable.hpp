#pragma once

#include "countable/bijections.hpp"
#include "countable/diagonal.hpp"
#include "countable/enumeration.hpp"
#include "countable/errors.hpp"
#include "countable/finite_compare.hpp"
#include "countable/hotel.hpp"
#include "countable/numbers.hpp"
