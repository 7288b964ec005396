#pragma once

#include "errors.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "random.hpp"
#include "group.hpp"
#include "unitary.hpp"
#include "thompson.hpp"
#include "oliver.hpp"
#include "wreath.hpp"
#include "small_groups.hpp"
#include "cache.hpp"
#include "report.hpp"
#include "suites.hpp"
#include "cli.hpp"
